#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sbci/algebra.hpp"

namespace sbci {

using ElemPair = std::pair<Elem, Elem>;

/// Boolean n x n matrix with its order-theoretic flags. The flags are
/// recomputed on every mutation and carry the lexicographically first
/// counterexample when false.
class RelationMatrix {
 public:
  explicit RelationMatrix(std::size_t n = 0);
  RelationMatrix(std::size_t n, std::vector<bool> rel);

  std::size_t size() const noexcept { return n_; }
  bool operator()(Elem x, Elem y) const { return rel_[x * n_ + y]; }
  void set(Elem x, Elem y, bool value);

  bool reflexive() const noexcept { return !reflexive_witness_; }
  bool antisymmetric() const noexcept { return !antisymmetric_witness_; }
  bool transitive() const noexcept { return !transitive_witness_; }
  bool is_partial_order() const noexcept {
    return reflexive() && antisymmetric() && transitive();
  }

  const std::optional<Elem>& reflexive_witness() const noexcept { return reflexive_witness_; }
  const std::optional<ElemPair>& antisymmetric_witness() const noexcept {
    return antisymmetric_witness_;
  }
  /// (x, y, z) with x R y, y R z but not x R z.
  const std::optional<std::vector<Elem>>& transitive_witness() const noexcept {
    return transitive_witness_;
  }

  bool operator==(const RelationMatrix& o) const { return n_ == o.n_ && rel_ == o.rel_; }

 private:
  void recompute_flags();

  std::size_t n_;
  std::vector<bool> rel_;
  std::optional<Elem> reflexive_witness_;
  std::optional<ElemPair> antisymmetric_witness_;
  std::optional<std::vector<Elem>> transitive_witness_;
};

/// rel[x][y] iff table(x, y) == top. Throws AbsentOperation when the
/// double arrow is requested from a single-operation algebra.
RelationMatrix derive_relation(const FiniteAlgebra& alg, Which which);

/// Greatest lower bounds w.r.t. a partial order. `meet` is set when every
/// pair has a glb; otherwise `missing` holds the first pair without one.
struct MeetStructure {
  std::optional<Table> meet;
  std::optional<ElemPair> missing;

  bool present() const noexcept { return meet.has_value(); }
};

/// Throws NotPartialOrder when `order` is not reflexive, antisymmetric and
/// transitive.
MeetStructure compute_meet(const RelationMatrix& order);

}  // namespace sbci
