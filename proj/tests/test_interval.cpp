#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sbci/axioms.hpp"
#include "sbci/error.hpp"
#include "sbci/fixtures.hpp"
#include "sbci/interval.hpp"

using namespace sbci;

namespace {

const char* const kIntervalizable[] = {"one-element", "2-chain", "powerset-of-2",
                                       "godel-3-chain", "lukasiewicz-3-chain"};

// Pointwise image of -> over X x Y.
std::set<Elem> image(const IntervalSpace& s, Elem X, Elem Y) {
  std::set<Elem> out;
  const std::size_t n = s.base().size();
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (s.contains(X, x) && s.contains(Y, y)) out.insert(s.base().arrow()(x, y));
  return out;
}

bool represents(const IntervalSpace& s, const Table& op) {
  for (Elem X = 0; X < s.size(); ++X)
    for (Elem Y = 0; Y < s.size(); ++Y)
      for (Elem r : image(s, X, Y))
        if (!s.contains(op(X, Y), r)) return false;
  return true;
}

// Representation witness (X, Y, x, y) re-evaluated from scratch.
bool representation_witness_holds(const IntervalSpace& s, const Table& op, const Verdict& v) {
  if (v.witness.size() != 4) return false;
  const Elem X = v.witness[0], Y = v.witness[1], x = v.witness[2], y = v.witness[3];
  return s.contains(X, x) && s.contains(Y, y) && !s.contains(op(X, Y), s.base().arrow()(x, y));
}

}  // namespace

TEST(Carrier, Sizes) {
  EXPECT_EQ(IntervalSpace(fixture("one-element")).size(), 1u);
  EXPECT_EQ(IntervalSpace(fixture("2-chain")).size(), 3u);
  EXPECT_EQ(IntervalSpace(fixture("powerset-of-2")).size(), 9u);
  EXPECT_EQ(IntervalSpace(fixture("godel-3-chain")).size(), 6u);
}

TEST(Carrier, LexOrderAndLookup) {
  const IntervalSpace s(fixture("powerset-of-2"));
  for (Elem i = 0; i + 1 < s.size(); ++i) EXPECT_LT(s[i], s[i + 1]);
  for (Elem i = 0; i < s.size(); ++i) EXPECT_EQ(*s.index_of(s[i]), i);
  EXPECT_FALSE(s.index_of({0, 1}).has_value());
  EXPECT_THROW(s.require(0, 1), Error);
  EXPECT_EQ(s[s.top()], embed_degenerate(0));
  EXPECT_EQ(s.label(s.top()), "[{},{}]");
}

TEST(Carrier, KmOrderOnDegeneratesIsBaseOrder) {
  const IntervalSpace s(fixture("powerset-of-2"));
  const RelationMatrix km = km_relation(s);
  EXPECT_TRUE(km.is_partial_order());
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      EXPECT_EQ(km(*s.index_of(embed_degenerate(a)), *s.index_of(embed_degenerate(b))),
                s.base_order()(a, b));
}

TEST(Intervalize, BestMatchesEndpointFormula) {
  for (const char* f : kIntervalizable) {
    const IntervalAlgebra ia = intervalize(fixture(f));
    const Table& imp = ia.base().arrow();
    for (Elem X = 0; X < ia.size(); ++X)
      for (Elem Y = 0; Y < ia.size(); ++Y) {
        const IntervalElement b = ia[ia.best_table()(X, Y)];
        EXPECT_EQ(b.lo, imp(ia[X].hi, ia[Y].lo));
        EXPECT_EQ(b.hi, imp(ia[X].lo, ia[Y].hi));
        const IntervalElement k = ia[ia.km_table()(X, Y)];
        EXPECT_EQ(k.lo, ia.base_meet()(imp(ia[X].lo, ia[Y].lo), imp(ia[X].hi, ia[Y].hi)));
        EXPECT_EQ(k.hi, imp(ia[X].lo, ia[Y].hi));
      }
  }
}

TEST(Intervalize, Gates) {
  auto gate = [](const FiniteAlgebra& a) {
    try {
      intervalize(a);
    } catch (const PreconditionViolation& e) {
      return e.gate();
    }
    return std::string("none");
  };
  EXPECT_EQ(gate(fixture("powerset-of-2")), "none");
  EXPECT_EQ(gate(fixture("perturbed-distributivity")), "distributivity");
  EXPECT_EQ(gate(FiniteAlgebra(0, Table(2, {0, 1, 1, 1}))), "bci");
  EXPECT_EQ(gate(FiniteAlgebra(0, Table(3, {0, 1, 2, 0, 0, 2, 0, 1, 0}))), "meet");
}

TEST(Mapsto, GateAndResult) {
  try {
    mapsto_construct(fixture("lukasiewicz-3-chain"));
    ADD_FAILURE() << "expected condition-star gate";
  } catch (const PreconditionViolation& e) {
    EXPECT_EQ(e.gate(), "condition-star");
  }
  const FiniteAlgebra m = mapsto_construct(fixture("powerset-of-2"));
  EXPECT_EQ(m.size(), 9u);
  EXPECT_TRUE(check_bci(m).passed());
}

TEST(Representation, BestIsCorrectAndOptimal) {
  for (const char* f : kIntervalizable) {
    const IntervalAlgebra ia = intervalize(fixture(f));
    EXPECT_TRUE(represents(ia.space(), ia.best_table())) << f;
    EXPECT_TRUE(check_representation(ia.space(), ia.best_table()).passed()) << f;
    EXPECT_TRUE(check_optimality(ia.space(), ia.best_table()).passed()) << f;
    // Hull oracle: both ends of the output are attained in the image.
    for (Elem X = 0; X < ia.size(); ++X)
      for (Elem Y = 0; Y < ia.size(); ++Y) {
        const auto img = image(ia.space(), X, Y);
        const IntervalElement b = ia[ia.best_table()(X, Y)];
        EXPECT_TRUE(img.count(b.lo) && img.count(b.hi)) << f;
      }
  }
}

TEST(Representation, KmAndMapstoFailWithVerifiedWitness) {
  for (const char* f : {"2-chain", "powerset-of-2", "godel-3-chain"}) {
    const IntervalAlgebra ia = intervalize(fixture(f));
    const Verdict km = check_representation(ia.space(), ia.km_table());
    ASSERT_FALSE(km.passed()) << f;
    EXPECT_TRUE(representation_witness_holds(ia.space(), ia.km_table(), km));
    EXPECT_FALSE(represents(ia.space(), ia.km_table()));
    const FiniteAlgebra m = mapsto_construct(fixture(f));
    const Verdict mv = check_representation(ia.space(), m.arrow());
    ASSERT_FALSE(mv.passed()) << f;
    EXPECT_TRUE(representation_witness_holds(ia.space(), m.arrow(), mv));
  }
  const IntervalAlgebra one = intervalize(fixture("one-element"));
  EXPECT_TRUE(check_representation(one.space(), one.km_table()).passed());
}

TEST(Optimality, WidenedTableFails) {
  const IntervalAlgebra ia = intervalize(fixture("powerset-of-2"));
  const Table w = widened_best(ia);
  ASSERT_NE(w, ia.best_table());
  EXPECT_TRUE(represents(ia.space(), w));
  const Verdict v = check_optimality(ia.space(), w);
  ASSERT_FALSE(v.passed());
  ASSERT_EQ(v.witness.size(), 3u);
  const auto img = image(ia.space(), v.witness[0], v.witness[1]);
  const Elem narrower = v.witness[2];
  for (Elem r : img) EXPECT_TRUE(ia.space().contains(narrower, r));
  EXPECT_NE(narrower, w(v.witness[0], v.witness[1]));
  EXPECT_THROW(check_optimality(ia.space(), ia.km_table()), PreconditionViolation);
}

TEST(Refutation, CandidatesOverTwoChainAreAllRefuted) {
  const IntervalSpace s(fixture("2-chain"));
  std::size_t count = 0, by_bci = 0;
  oracle::all_tables(3, [&](const Table& t) {
    for (Elem top = 0; top < 3; ++top) {
      ++count;
      const auto r = refute_bci_representation(s, t, top);
      ASSERT_TRUE(r.has_value());
      if (r->kind == "bci") {
        ++by_bci;
        const FiniteAlgebra cand(top, t);
        EXPECT_TRUE(witness_violates(cand, r->verdict));
      } else {
        EXPECT_EQ(r->kind, "representation");
        EXPECT_TRUE(representation_witness_holds(s, t, r->verdict));
      }
    }
  });
  EXPECT_EQ(count, 59049u);
  EXPECT_GT(by_bci, 0u);
}

TEST(Refutation, BestWithDegenerateTopIsNotBci) {
  const IntervalAlgebra ia = intervalize(fixture("powerset-of-2"));
  const auto r = refute_bci_representation(ia.space(), ia.best_table(), ia.top());
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->kind, "bci");
  EXPECT_EQ(r->verdict.axiom, "C-3");
  EXPECT_FALSE(ia[r->verdict.witness[0]].degenerate());
}

TEST(Refutation, NeedsComparablePair) {
  const IntervalSpace s(fixture("one-element"));
  EXPECT_THROW(refute_bci_representation(s, Table(1), 0), PreconditionViolation);
}

TEST(Ibci, LawsHoldOnFixtures) {
  for (const char* f : kIntervalizable) {
    const IntervalAlgebra ia = intervalize(fixture(f));
    EXPECT_TRUE(verify_ibci(ia).passed()) << f;
    const AxiomReport d = verify_ibci_derived(ia);
    EXPECT_TRUE(d.passed()) << f;
    EXPECT_EQ(d.verdicts.size(), 21u);
  }
}

TEST(Ibci, PowersetIsSbciButNotPbci) {
  const FiniteAlgebra a = ibci_as_sbci(intervalize(fixture("powerset-of-2")));
  EXPECT_TRUE(check_sbci(a).passed());
  const AxiomReport p = check_pbci(a);
  EXPECT_FALSE(p.passed());
  EXPECT_FALSE(p.at("PB-5").passed() && p.at("PB-7").passed());
  EXPECT_FALSE(relations_coincide(a).at("wb-reflexive").passed());
}

TEST(Ibci, RefutedBiconditionalsHaveCounterexamples) {
  const AxiomReport d = verify_ibci_derived(intervalize(fixture("powerset-of-2")));
  EXPECT_EQ(d.at("OP_M1-refuted").status, Status::pass);
  EXPECT_FALSE(d.at("OP_M1-refuted").witness.empty());
  EXPECT_EQ(verify_ibci_derived(intervalize(fixture("one-element"))).at("OP_M2-refuted").status,
            Status::skipped);
}
