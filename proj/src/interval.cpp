#include "sbci/interval.hpp"

#include <array>
#include <functional>
#include <span>

#include "sbci/axioms.hpp"
#include "sbci/detail/quantify.hpp"
#include "sbci/error.hpp"
#include "sbci/laws.hpp"
#include "sbci/models.hpp"

namespace sbci {

std::vector<IntervalElement> build_interval_carrier(const RelationMatrix& order) {
  if (!order.is_partial_order()) throw NotPartialOrder("base relation is not a partial order");
  std::vector<IntervalElement> out;
  for (Elem a = 0; a < order.size(); ++a) {
    for (Elem b = 0; b < order.size(); ++b) {
      if (order(a, b)) out.push_back({a, b});
    }
  }
  return out;
}

IntervalSpace::IntervalSpace(const FiniteAlgebra& base)
    : base_(base.with_tables(base.arrow(), std::nullopt)),
      order_(derive_relation(base_, Which::arrow)),
      carrier_(build_interval_carrier(order_)) {
  const std::size_t n = base_.size();
  index_.assign(n * n, -1);
  for (std::size_t i = 0; i < carrier_.size(); ++i) {
    index_[carrier_[i].lo * n + carrier_[i].hi] = static_cast<std::int32_t>(i);
  }
}

std::optional<Elem> IntervalSpace::index_of(IntervalElement x) const {
  const std::size_t n = base_.size();
  if (x.lo >= n || x.hi >= n) return std::nullopt;
  const std::int32_t i = index_[x.lo * n + x.hi];
  if (i < 0) return std::nullopt;
  return static_cast<Elem>(i);
}

Elem IntervalSpace::require(Elem lo, Elem hi) const {
  if (auto i = index_of({lo, hi})) return *i;
  throw Error("[" + base_.label(lo) + "," + base_.label(hi) + "] is not an interval");
}

bool IntervalSpace::contains(Elem interval, Elem x) const {
  const auto& iv = carrier_[interval];
  return order_(iv.lo, x) && order_(x, iv.hi);
}

Elem IntervalSpace::top() const { return require(base_.top(), base_.top()); }

std::string IntervalSpace::label(Elem interval) const {
  const auto& iv = carrier_[interval];
  return "[" + base_.label(iv.lo) + "," + base_.label(iv.hi) + "]";
}

std::vector<std::string> IntervalSpace::labels() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (Elem i = 0; i < size(); ++i) out.push_back(label(i));
  return out;
}

RelationMatrix km_relation(const IntervalSpace& space) {
  const std::size_t m = space.size();
  const auto& o = space.base_order();
  std::vector<bool> rel(m * m);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      rel[x * m + y] = o(space[x].lo, space[y].lo) && o(space[x].hi, space[y].hi);
    }
  }
  return RelationMatrix(m, std::move(rel));
}

RelationMatrix interval_way_below(const IntervalSpace& space) {
  const std::size_t m = space.size();
  std::vector<bool> rel(m * m);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) rel[x * m + y] = space.base_order()(space[x].hi, space[y].lo);
  }
  return RelationMatrix(m, std::move(rel));
}

IntervalAlgebra::IntervalAlgebra(IntervalSpace space, Table meet, Table best, Table km)
    : space_(std::move(space)),
      meet_(std::move(meet)),
      best_(std::move(best)),
      km_(std::move(km)),
      km_order_(km_relation(space_)),
      wb_order_(interval_way_below(space_)) {}

namespace {

FiniteAlgebra single(const FiniteAlgebra& base) {
  return base.with_tables(base.arrow(), std::nullopt);
}

std::string first_failure(const AxiomReport& r) {
  for (const auto& v : r.verdicts) {
    if (v.passed()) continue;
    std::string s = v.axiom;
    if (!v.witness_labels.empty()) {
      s += " at (";
      for (std::size_t i = 0; i < v.witness_labels.size(); ++i) {
        s += (i ? ", " : "") + v.witness_labels[i];
      }
      s += ")";
    }
    return s;
  }
  return {};
}

Table gate_bci_and_meet(const FiniteAlgebra& base) {
  AxiomReport bci = check_bci(base);
  if (!bci.passed()) throw PreconditionViolation("bci", "base fails " + first_failure(bci));
  MeetStructure ms = compute_meet(derive_relation(base, Which::arrow));
  if (!ms.present()) {
    throw PreconditionViolation("meet", base.label(ms.missing->first) + " and " +
                                            base.label(ms.missing->second) +
                                            " have no greatest lower bound");
  }
  return std::move(*ms.meet);
}

}  // namespace

IntervalAlgebra intervalize(const FiniteAlgebra& input) {
  const FiniteAlgebra base = single(input);
  Table meet = gate_bci_and_meet(base);
  AxiomReport dist = check_meet_distributivity(base, meet);
  if (!dist.passed()) {
    throw PreconditionViolation("distributivity", "base fails " + first_failure(dist));
  }
  IntervalSpace space(base);
  const std::size_t m = space.size();
  const Table& imp = base.arrow();
  Table best(m), km(m);
  for (Elem x = 0; x < m; ++x) {
    const auto X = space[x];
    for (Elem y = 0; y < m; ++y) {
      const auto Y = space[y];
      best.at(x, y) = space.require(imp(X.hi, Y.lo), imp(X.lo, Y.hi));
      km.at(x, y) = space.require(meet(imp(X.lo, Y.lo), imp(X.hi, Y.hi)), imp(X.lo, Y.hi));
    }
  }
  return IntervalAlgebra(std::move(space), std::move(meet), std::move(best), std::move(km));
}

FiniteAlgebra mapsto_construct(const FiniteAlgebra& input) {
  const FiniteAlgebra base = single(input);
  Table meet = gate_bci_and_meet(base);
  AxiomReport star = check_condition_star(base, meet);
  if (!star.passed()) {
    throw PreconditionViolation("condition-star", "base fails " + first_failure(star));
  }
  IntervalSpace space(base);
  const std::size_t m = space.size();
  const Table& imp = base.arrow();
  Table t(m);
  for (Elem x = 0; x < m; ++x) {
    for (Elem y = 0; y < m; ++y) {
      const auto X = space[x], Y = space[y];
      t.at(x, y) = space.require(meet(imp(X.lo, Y.lo), imp(X.hi, Y.hi)), imp(X.hi, Y.hi));
    }
  }
  FiniteAlgebra out(space.top(), std::move(t), std::nullopt, space.labels());
  if (m <= kMaxCheckedSize) {
    if (!check_bci(out).passed()) throw Error("|=> construction is not BCI");
    MeetStructure ms = compute_meet(derive_relation(out, Which::arrow));
    if (!ms.present() || !check_condition_star(out, *ms.meet).passed()) {
      throw Error("|=> construction does not satisfy (*)");
    }
  }
  return out;
}

Verdict check_representation(const IntervalSpace& space, const Table& op) {
  const FiniteAlgebra& base = space.base();
  const std::size_t m = space.size();
  const std::size_t n = base.size();
  Verdict v;
  v.axiom = "representation";
  for (Elem X = 0; X < m; ++X) {
    for (Elem Y = 0; Y < m; ++Y) {
      for (Elem x = 0; x < n; ++x) {
        if (!space.contains(X, x)) continue;
        for (Elem y = 0; y < n; ++y) {
          if (!space.contains(Y, y)) continue;
          const Elem r = base.arrow()(x, y);
          if (space.contains(op(X, Y), r)) continue;
          v.status = Status::fail;
          v.witness = {X, Y, x, y};
          v.witness_labels = {space.label(X), space.label(Y), base.label(x), base.label(y)};
          v.detail = base.label(x) + " -> " + base.label(y) + " = " + base.label(r) +
                     " is not in " + space.label(op(X, Y));
          return v;
        }
      }
    }
  }
  return v;
}

Verdict check_optimality(const IntervalSpace& space, const Table& op) {
  if (!check_representation(space, op).passed()) {
    throw PreconditionViolation("representation", "operation is not an interval representation");
  }
  const FiniteAlgebra& base = space.base();
  const auto& o = space.base_order();
  const std::size_t m = space.size();
  const std::size_t n = base.size();
  Verdict v;
  v.axiom = "optimality";
  std::vector<Elem> image;
  for (Elem X = 0; X < m; ++X) {
    for (Elem Y = 0; Y < m; ++Y) {
      image.clear();
      for (Elem x = 0; x < n; ++x) {
        if (!space.contains(X, x)) continue;
        for (Elem y = 0; y < n; ++y) {
          if (space.contains(Y, y)) image.push_back(base.arrow()(x, y));
        }
      }
      const Elem Z = op(X, Y);
      for (Elem W = 0; W < m; ++W) {
        if (W == Z || !o(space[Z].lo, space[W].lo) || !o(space[W].hi, space[Z].hi)) continue;
        bool holds_all = true;
        for (Elem r : image) holds_all = holds_all && space.contains(W, r);
        if (!holds_all) continue;
        v.status = Status::fail;
        v.witness = {X, Y, W};
        v.witness_labels = {space.label(X), space.label(Y), space.label(W)};
        v.detail = space.label(W) + " is narrower than " + space.label(Z) +
                   " and holds the whole image";
        return v;
      }
    }
  }
  return v;
}

Table widened_best(const IntervalAlgebra& ia) {
  const IntervalSpace& s = ia.space();
  Table t = ia.best_table();
  const Elem top = s.base().top();
  for (Elem x = 0; x < s.size(); ++x) {
    for (Elem y = 0; y < s.size(); ++y) {
      if (auto w = s.index_of({s[t(x, y)].lo, top})) t.at(x, y) = *w;
    }
  }
  return t;
}

std::optional<Refutation> refute_bci_representation(const IntervalSpace& space,
                                                    const Table& candidate, Elem candidate_top) {
  const FiniteAlgebra& base = space.base();
  const auto& o = space.base_order();
  const std::size_t n = base.size();
  std::optional<std::pair<Elem, Elem>> ab;
  for (Elem a = 0; a < n && !ab; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (a != b && o(a, b)) {
        ab = {a, b};
        break;
      }
    }
  }
  if (!ab) throw PreconditionViolation("comparable-pair", "no a != b with a <= b in the base");
  if (candidate.size() != space.size() || candidate_top >= space.size()) {
    throw InvalidAlgebra("candidate table does not match the interval carrier");
  }

  const FiniteAlgebra cand(candidate_top, candidate, std::nullopt, space.labels());
  TableModel cm(cand);
  for (laws::Law law : {laws::Law::C3, laws::Law::C1, laws::Law::C2, laws::Law::C4}) {
    const auto& li = laws::info(law);
    auto w = detail::find_violation(cand.size(), li.arity, [&](std::span<const Elem> v) {
      return laws::evaluate(law, cm, v);
    });
    if (!w) continue;
    Verdict v;
    v.axiom = std::string(li.id);
    v.status = Status::fail;
    v.witness = *w;
    for (Elem x : *w) v.witness_labels.push_back(space.label(x));
    return Refutation{"bci", "candidate is not BCI", std::move(v)};
  }

  // The candidate is BCI, so it must fail as a representation.
  const Elem top = base.top();
  const auto T = space[candidate_top];
  const auto [a, b] = *ab;
  struct Pick {
    Elem X, Y, x, y;
    const char* reason;
  };
  Pick pick{};
  if (!space.contains(candidate_top, top)) {
    const Elem aa = space.require(a, a);
    pick = {aa, aa, a, a, "top of the base is outside the candidate top"};
  } else if (T.lo == top && T.hi == top) {
    const Elem iab = space.require(a, b);
    pick = {iab, iab, b, a, "candidate top is [T,T]"};
  } else if (T.hi == top) {
    pick = {candidate_top, space.require(T.lo, T.lo), T.lo, T.lo,
            "candidate top is [alpha,T] with alpha below T"};
  } else {
    pick = {0, 0, 0, 0, nullptr};
  }

  auto fails_at = [&](const Pick& p) {
    return space.contains(p.X, p.x) && space.contains(p.Y, p.y) &&
           !space.contains(candidate(p.X, p.Y), base.arrow()(p.x, p.y));
  };
  auto make = [&](const Pick& p, std::string reason) {
    Verdict v;
    v.axiom = "representation";
    v.status = Status::fail;
    v.witness = {p.X, p.Y, p.x, p.y};
    v.witness_labels = {space.label(p.X), space.label(p.Y), base.label(p.x), base.label(p.y)};
    v.detail = base.label(p.x) + " -> " + base.label(p.y) + " is not in " +
               space.label(candidate(p.X, p.Y));
    return Refutation{"representation", std::move(reason), std::move(v)};
  };
  if (pick.reason && fails_at(pick)) return make(pick, pick.reason);

  Verdict rep = check_representation(space, candidate);
  if (rep.passed()) return std::nullopt;
  Pick found{rep.witness[0], rep.witness[1], rep.witness[2], rep.witness[3], nullptr};
  return make(found, "exhaustive search");
}

namespace {

// Evaluation context for properties stated directly on intervals.
struct Ctx {
  const IntervalAlgebra& ia;
  Elem T;
  Elem best(Elem x, Elem y) const { return ia.best_table()(x, y); }
  Elem km(Elem x, Elem y) const { return ia.km_table()(x, y); }
  bool le(Elem x, Elem y) const { return ia.km_order()(x, y); }
  bool wb(Elem x, Elem y) const { return ia.wb_order()(x, y); }
  Elem lo(Elem x) const { return ia[x].lo; }
  Elem hi(Elem x) const { return ia[x].hi; }
  bool deg(Elem x) const { return ia[x].degenerate(); }
  Elem imp(Elem a, Elem b) const { return ia.base().arrow()(a, b); }
  bool base_le(Elem a, Elem b) const { return ia.space().base_order()(a, b); }
};

Verdict quantified(const IntervalAlgebra& ia, std::string id, int arity,
                   const std::function<bool(std::span<const Elem>)>& holds) {
  Verdict v;
  v.axiom = std::move(id);
  if (auto w = detail::find_violation(ia.size(), arity, holds)) {
    v.status = Status::fail;
    v.witness = *w;
    for (Elem x : *w) v.witness_labels.push_back(ia.space().label(x));
  }
  return v;
}

Verdict relation_matches(const IntervalAlgebra& ia, std::string id, const RelationMatrix& stored,
                         const Table& table) {
  return quantified(ia, std::move(id), 2, [&](std::span<const Elem> v) {
    return stored(v[0], v[1]) == (table(v[0], v[1]) == ia.top());
  });
}

// Passes with a witness when one exists; skipped (vacuous) otherwise.
Verdict refuted(const IntervalAlgebra& ia, std::string id, int arity,
                const std::function<bool(std::span<const Elem>)>& counterexample) {
  Verdict v = quantified(ia, std::move(id), arity,
                         [&](std::span<const Elem> t) { return !counterexample(t); });
  if (v.status == Status::fail) {
    v.status = Status::pass;
    v.detail = "counterexample found";
  } else {
    v.status = Status::skipped;
    v.detail = "no counterexample on this base";
  }
  return v;
}

}  // namespace

AxiomReport verify_ibci(const IntervalAlgebra& ia) {
  constexpr std::array<laws::Law, 7> kMap{laws::Law::SBCI1, laws::Law::SBCI2, laws::Law::SBCI3,
                                          laws::Law::SBCI4, laws::Law::SBCI5, laws::Law::SBCI6,
                                          laws::Law::SBCI7};
  const FiniteAlgebra view = ibci_as_sbci(ia);
  TableModel m(view);
  AxiomReport r;
  r.system = "ibci";
  for (std::size_t i = 0; i < kMap.size(); ++i) {
    const auto& li = laws::info(kMap[i]);
    r.verdicts.push_back(quantified(ia, "IBCI" + std::to_string(i + 1), li.arity,
                                    [&](std::span<const Elem> v) {
                                      return laws::evaluate(kMap[i], m, v);
                                    }));
  }
  r.verdicts.push_back(relation_matches(ia, "km-order", ia.km_order(), ia.km_table()));
  r.verdicts.push_back(relation_matches(ia, "wb-order", ia.wb_order(), ia.best_table()));
  r.facts.emplace_back("intervals", std::to_string(ia.size()));
  return r;
}

AxiomReport verify_ibci_derived(const IntervalAlgebra& ia) {
  const Ctx c{ia, ia.top()};
  const IntervalSpace& s = ia.space();
  const Elem top = ia.base().top();
  auto iv = [&](Elem lo, Elem hi) { return s.require(lo, hi); };
  AxiomReport r;
  r.system = "ibci-derived";
  auto add = [&](std::string id, int arity, auto holds) {
    r.verdicts.push_back(quantified(ia, std::move(id), arity, holds));
  };
  using V = std::span<const Elem>;

  add("G-1", 1, [&](V v) { return c.best(v[0], v[0]) == iv(c.imp(c.hi(v[0]), c.lo(v[0])), top); });
  add("G-2", 2, [&](V v) {
    return (c.best(v[0], v[1]) == c.T) == c.base_le(c.hi(v[0]), c.lo(v[1]));
  });
  add("degenerate-corollary", 1, [&](V v) { return (c.best(v[0], v[0]) == c.T) == c.deg(v[0]); });
  add("Cd-1", 3, [&](V v) {
    const Elem Y = v[0], Z = v[1], Xd = v[2];
    if (!c.deg(Xd)) return true;
    return c.km(c.best(Y, Z), c.best(c.best(Z, Xd), c.best(Y, Xd))) == c.T;
  });
  add("Cd-2", 2, [&](V v) {
    const Elem Xd = v[0], Yd = v[1];
    if (!c.deg(Xd) || !c.deg(Yd)) return true;
    return c.best(Xd, c.best(c.best(Xd, Yd), Yd)) == c.T;
  });
  add("Cd-3", 2, [&](V v) { return !c.deg(v[1]) || c.best(v[0], v[1]) == c.km(v[0], v[1]); });
  add("B-1", 1, [&](V v) { return !c.le(c.T, v[0]) || v[0] == c.T; });
  add("B-2", 3, [&](V v) {
    return !c.le(v[0], v[1]) || c.le(c.best(v[1], v[2]), c.best(v[0], v[2]));
  });
  add("B-3", 3, [&](V v) {
    return !c.le(v[0], v[1]) || c.le(c.best(v[2], v[0]), c.best(v[2], v[1]));
  });
  add("B-4", 3, [&](V v) { return !(c.le(v[0], v[1]) && c.le(v[1], v[2])) || c.le(v[0], v[2]); });
  add("B-5", 3, [&](V v) {
    const Elem X = v[0], Y = v[1], Zd = v[2];
    if (!c.deg(Zd)) return true;
    return !c.le(X, c.best(Y, Zd)) || c.le(Y, c.best(X, Zd));
  });
  add("B-6", 3, [&](V v) {
    const Elem X = v[0], Y = v[1], Zd = v[2];
    if (!c.deg(Zd)) return true;
    return c.le(c.best(X, Y), c.best(c.best(Zd, X), c.best(Zd, Y)));
  });
  add("B-7", 2, [&](V v) {
    const Elem Y = v[0], Xd = v[1];
    if (!c.deg(Xd)) return true;
    return c.best(c.best(c.best(Y, Xd), Xd), Xd) == c.best(Y, Xd);
  });
  add("B-8", 2, [&](V v) {
    return c.le(c.best(v[0], v[1]), c.best(c.best(v[1], v[0]), c.T));
  });
  add("B-9", 2, [&](V v) {
    return c.best(c.best(v[0], v[1]), c.T) == c.best(c.best(v[0], c.T), c.best(v[1], c.T));
  });
  add("r-WOP", 2, [&](V v) {
    return !c.le(v[0], v[1]) || c.best(v[0], v[1]) == iv(c.imp(c.hi(v[0]), c.lo(v[1])), top);
  });
  add("OPa", 2, [&](V v) { return !c.wb(v[0], v[1]) || c.km(v[0], v[1]) == c.T; });
  add("OPb", 2, [&](V v) { return c.best(v[0], v[1]) != c.T || c.le(v[0], v[1]); });
  add("degenerate-preservation", 2, [&](V v) {
    if (!c.deg(v[0]) || !c.deg(v[1])) return true;
    const Elem w = c.imp(c.lo(v[0]), c.lo(v[1]));
    const Elem d = iv(w, w);
    return c.best(v[0], v[1]) == d && c.km(v[0], v[1]) == d;
  });
  r.verdicts.push_back(refuted(ia, "OP_M1-refuted", 2, [&](V v) {
    return (c.km(v[0], v[1]) == c.T) != c.wb(v[0], v[1]);
  }));
  r.verdicts.push_back(refuted(ia, "OP_M2-refuted", 2, [&](V v) {
    return c.le(v[0], v[1]) != (c.best(v[0], v[1]) == c.T);
  }));
  return r;
}

FiniteAlgebra ibci_as_sbci(const IntervalAlgebra& ia) {
  return FiniteAlgebra(ia.top(), ia.km_table(), ia.best_table(), ia.space().labels());
}

}  // namespace sbci
