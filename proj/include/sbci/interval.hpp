#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sbci/algebra.hpp"
#include "sbci/relation.hpp"
#include "sbci/report.hpp"

namespace sbci {

/// [lo, hi] over a base carrier, with lo <= hi in the base order.
struct IntervalElement {
  Elem lo = 0;
  Elem hi = 0;
  bool degenerate() const noexcept { return lo == hi; }
  auto operator<=>(const IntervalElement&) const = default;
};

inline IntervalElement embed_degenerate(Elem a) { return {a, a}; }

/// All pairs (lo, hi) with lo <= hi, in lexicographic order. Throws
/// NotPartialOrder when `order` is not a partial order.
std::vector<IntervalElement> build_interval_carrier(const RelationMatrix& order);

/// The interval carrier of a single-operation base together with the base
/// order, so that interval tables (indices into the carrier) can be read
/// back as pairs of base elements.
class IntervalSpace {
 public:
  /// Uses the -> table only; throws NotPartialOrder.
  explicit IntervalSpace(const FiniteAlgebra& base);

  const FiniteAlgebra& base() const noexcept { return base_; }
  const RelationMatrix& base_order() const noexcept { return order_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  const std::vector<IntervalElement>& carrier() const noexcept { return carrier_; }
  const IntervalElement& operator[](Elem i) const { return carrier_[i]; }
  std::optional<Elem> index_of(IntervalElement x) const;
  /// Like index_of but throws Error when [lo, hi] is not an interval.
  Elem require(Elem lo, Elem hi) const;
  /// x in X, i.e. X.lo <= x <= X.hi in the base order.
  bool contains(Elem interval, Elem x) const;
  Elem top() const;
  std::string label(Elem interval) const;
  std::vector<std::string> labels() const;

 private:
  FiniteAlgebra base_;
  RelationMatrix order_;
  std::vector<IntervalElement> carrier_;
  std::vector<std::int32_t> index_;  // lo * n + hi -> carrier index or -1
};

/// Kulisch-Miranker order: X.lo <= Y.lo and X.hi <= Y.hi.
RelationMatrix km_relation(const IntervalSpace& space);
/// X << Y iff X.hi <= Y.lo.
RelationMatrix interval_way_below(const IntervalSpace& space);

/// The interval algebra with both implications over a gated base.
class IntervalAlgebra {
 public:
  IntervalAlgebra(IntervalSpace space, Table meet, Table best, Table km);

  const IntervalSpace& space() const noexcept { return space_; }
  const FiniteAlgebra& base() const noexcept { return space_.base(); }
  const Table& base_meet() const noexcept { return meet_; }
  std::size_t size() const noexcept { return space_.size(); }
  const IntervalElement& operator[](Elem i) const { return space_[i]; }
  /// X =>> Y = [X.hi -> Y.lo, X.lo -> Y.hi]
  const Table& best_table() const noexcept { return best_; }
  /// X => Y = [(X.lo -> Y.lo) /\ (X.hi -> Y.hi), X.lo -> Y.hi]
  const Table& km_table() const noexcept { return km_; }
  Elem top() const { return space_.top(); }
  const RelationMatrix& km_order() const noexcept { return km_order_; }
  const RelationMatrix& wb_order() const noexcept { return wb_order_; }

 private:
  IntervalSpace space_;
  Table meet_;
  Table best_;
  Table km_;
  RelationMatrix km_order_;
  RelationMatrix wb_order_;
};

/// Gates, in order: "bci", "meet", "distributivity". Throws
/// PreconditionViolation naming the first failing gate.
IntervalAlgebra intervalize(const FiniteAlgebra& base);

/// X |=> Y = [(X.lo -> Y.lo) /\ (X.hi -> Y.hi), X.hi -> Y.hi] over the same
/// carrier order as intervalize. Gates: "bci", "meet", "condition-star".
/// The result is checked to be BCI and to satisfy (*) when its carrier is
/// small enough for the exhaustive checkers.
FiniteAlgebra mapsto_construct(const FiniteAlgebra& base);

/// Interval table evaluated against the pointwise ->. Witness is
/// (X, Y, x, y) with x -> y outside X op Y; X and Y are carrier indices,
/// x and y base elements.
Verdict check_representation(const IntervalSpace& space, const Table& interval_op);

/// No output of `interval_op` has a strictly narrower base subinterval that
/// still contains the pointwise image. Witness is (X, Y, W) with W the
/// narrower interval. Throws PreconditionViolation("representation") when
/// the operation is not a representation.
Verdict check_optimality(const IntervalSpace& space, const Table& interval_op);

/// Copy of =>> whose upper endpoints are raised to top wherever the result
/// is still an interval.
Table widened_best(const IntervalAlgebra& ia);

struct Refutation {
  /// "bci" when the candidate fails an axiom, "representation" otherwise.
  std::string kind;
  /// Which case of the argument produced the witness.
  std::string reason;
  Verdict verdict;
};

/// Shows that (candidate, candidate_top) is not both a BCI-algebra and an
/// interval representation of ->. Returns nullopt only if it is both, which
/// the impossibility theorem rules out for BCI bases. Throws
/// PreconditionViolation("comparable-pair") when no a != b has a <= b.
std::optional<Refutation> refute_bci_representation(const IntervalSpace& space,
                                                    const Table& candidate, Elem candidate_top);

/// IBCI1..IBCI7, plus agreement of the stored relations with the tables.
AxiomReport verify_ibci(const IntervalAlgebra& ia);
/// G-1, G-2, the degeneracy corollary, Cd-1..Cd-3, B-1..B-9, r-WOP, OPa,
/// OPb, degenerate preservation, and the two refuted biconditionals.
AxiomReport verify_ibci_derived(const IntervalAlgebra& ia);

/// Two-operation view: ->> is =>>, -> is =>, labels "[a,b]".
FiniteAlgebra ibci_as_sbci(const IntervalAlgebra& ia);

}  // namespace sbci
