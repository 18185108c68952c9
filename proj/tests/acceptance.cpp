// One line per acceptance criterion: PASS or FAIL, with elapsed time.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "sbci/axioms.hpp"
#include "sbci/continuous.hpp"
#include "sbci/error.hpp"
#include "sbci/fixtures.hpp"
#include "sbci/interval.hpp"
#include "sbci/search.hpp"

using namespace sbci;
using laws::Law;
using K = UnitKind;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void require(bool cond, const std::string& what) {
    if (cond) return;
    if (ok) note = what;
    ok = false;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.ok = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit_s) o.require(false, "took " + std::to_string(s) + " s, limit " + std::to_string(limit_s) + " s");
  failures += !o.ok;
  std::printf("criterion %2d %s  %-62s %8.3f s%s%s\n", id, o.ok ? "PASS" : "FAIL", title, s,
              o.note.empty() ? "" : "  ", o.note.c_str());
  std::fflush(stdout);
}

bool has_comparable_pair(const RelationMatrix& r) {
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      if (a != b && r(a, b)) return true;
  return false;
}

bool rep_witness_holds(const IntervalSpace& s, const Table& op, const Verdict& v) {
  if (v.witness.size() != 4) return false;
  const Elem X = v.witness[0], Y = v.witness[1], x = v.witness[2], y = v.witness[3];
  return s.contains(X, x) && s.contains(Y, y) && !s.contains(op(X, Y), s.base().arrow()(x, y));
}

SearchTask task(std::size_t n, std::vector<std::string> req) {
  SearchTask t;
  t.size = n;
  t.require = std::move(req);
  return t;
}

}  // namespace

int main() {
  criterion(1, "powerset-of-2 passes C-1..C-4, BCK, A-1..A-11", 1.0, [] {
    Outcome o;
    const FiniteAlgebra p = fixture("powerset-of-2");
    o.require(check_bci(p).passed(), "C-1..C-4");
    o.require(check_bck(p).passed(), "BCK");
    const AxiomReport a = check_properties_a(p);
    o.require(a.passed() && a.verdicts.size() == 11, "A-1..A-11");
    return o;
  });

  criterion(2, "intervalized powerset: 9 elements, IBCI and derived laws", 1.0, [] {
    Outcome o;
    const IntervalAlgebra ia = intervalize(fixture("powerset-of-2"));
    o.require(ia.size() == 9, "size " + std::to_string(ia.size()));
    const AxiomReport b = verify_ibci(ia), d = verify_ibci_derived(ia);
    for (int i = 1; i <= 7; ++i) {
      const Verdict* v = b.find("IBCI" + std::to_string(i));
      o.require(v && v->status == Status::pass, "IBCI" + std::to_string(i));
    }
    std::vector<std::string> ids{"G-1", "G-2", "degenerate-corollary", "Cd-1", "Cd-2", "Cd-3",
                                 "r-WOP", "OPa", "OPb", "degenerate-preservation"};
    for (int i = 1; i <= 9; ++i) ids.push_back("B-" + std::to_string(i));
    for (const auto& id : ids) {
      const Verdict* v = d.find(id);
      o.require(v && v->status == Status::pass, id);
    }
    return o;
  });

  criterion(3, "=>> represents every base; => and |=> fail with witnesses", 5.0, [] {
    Outcome o;
    int checked = 0, mapsto_skipped = 0;
    for (auto name : fixture_names()) {
      const auto t0 = std::chrono::steady_clock::now();
      const FiniteAlgebra base = fixture(name);
      std::optional<IntervalAlgebra> ia;
      try {
        ia.emplace(intervalize(base));
      } catch (const PreconditionViolation&) {
        continue;
      }
      ++checked;
      const std::string n(name);
      const IntervalSpace& s = ia->space();
      o.require(check_representation(s, ia->best_table()).passed(), n + ": =>> not a representation");
      if (has_comparable_pair(s.base_order())) {
        const Verdict km = check_representation(s, ia->km_table());
        o.require(!km.passed() && rep_witness_holds(s, ia->km_table(), km), n + ": =>");
        const auto ref = refute_bci_representation(s, ia->km_table(), ia->top());
        o.require(ref.has_value(), n + ": => escapes the impossibility theorem");
        try {
          const FiniteAlgebra m = mapsto_construct(base);
          const Verdict mv = check_representation(s, m.arrow());
          o.require(!mv.passed() && rep_witness_holds(s, m.arrow(), mv), n + ": |=>");
        } catch (const PreconditionViolation& e) {
          o.require(e.gate() == "condition-star", n + ": |=> gate " + e.gate());
          ++mapsto_skipped;
        }
      }
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.require(secs < 1.0, n + " took over 1 s");
    }
    o.require(checked >= 4, "too few valid bases");
    if (o.ok) {
      o.note = std::to_string(checked) + " bases";
      if (mapsto_skipped) o.note += ", |=> undefined on " + std::to_string(mapsto_skipped) + " ((*) fails)";
    }
    return o;
  });

  criterion(4, "=>> optimal on powerset; widened table fails with witness", 1.0, [] {
    Outcome o;
    const IntervalAlgebra ia = intervalize(fixture("powerset-of-2"));
    const IntervalSpace& s = ia.space();
    o.require(check_optimality(s, ia.best_table()).passed(), "=>> not optimal");
    const Table w = widened_best(ia);
    const Verdict v = check_optimality(s, w);
    o.require(!v.passed() && v.witness.size() == 3, "widened table passes");
    if (!v.passed() && v.witness.size() == 3) {
      const Elem X = v.witness[0], Y = v.witness[1], W = v.witness[2];
      bool covers = W != w(X, Y);
      for (Elem x = 0; x < s.base().size(); ++x)
        for (Elem y = 0; y < s.base().size(); ++y)
          if (s.contains(X, x) && s.contains(Y, y)) covers = covers && s.contains(W, s.base().arrow()(x, y));
      o.require(covers, "witness interval does not cover the image");
    }
    return o;
  });

  criterion(5, "2-chain: all 3^9 x 3 (table, top) candidates refuted", 10.0, [] {
    Outcome o;
    const IntervalSpace s(fixture("2-chain"));
    std::vector<Elem> cells(9, 0);
    std::size_t count = 0, bci = 0, rep = 0;
    while (true) {
      const Table t(3, cells);
      for (Elem top = 0; top < 3; ++top) {
        ++count;
        const auto r = refute_bci_representation(s, t, top);
        if (!r) {
          o.require(false, "candidate without refutation");
        } else if (r->kind == "bci") {
          ++bci;
          o.require(witness_violates(FiniteAlgebra(top, t), r->verdict), "bad BCI witness");
        } else {
          ++rep;
          o.require(rep_witness_holds(s, t, r->verdict), "bad representation witness");
        }
      }
      std::size_t i = 9;
      while (i > 0 && ++cells[i - 1] == 3) cells[--i] = 0;
      if (i == 0) break;
    }
    o.require(count == 59049, "count " + std::to_string(count));
    if (o.ok) o.note = std::to_string(bci) + " by axiom, " + std::to_string(rep) + " by representation";
    return o;
  });

  criterion(6, "grid 101, eps 1e-9: R/LK, GD/FD pass; YG SBCI12, WB SBCI7 fail", 30.0, [] {
    Outcome o;
    GridSpec g;
    const std::array sb{Law::SBCI1, Law::SBCI2, Law::SBCI3, Law::SBCI4,
                        Law::SBCI5, Law::SBCI6, Law::SBCI7};
    o.require(grid_check(K::R, K::LK, sb, g).passed(), "R/LK");
    o.require(grid_check(K::GD, K::FD, sb, g).passed(), "GD/FD");
    const std::array s12{Law::SBCI12};
    o.require(!grid_check(K::YG, K::YG, s12, g).at("SBCI12").passed(), "YG SBCI12 passes");
    const auto pts = g.points();
    o.require(pts[50] == 0.5, "0.5 is not a grid point");
    o.require(violates_at(K::YG, K::YG, Law::SBCI12, std::vector{0.5}, g.tolerance), "YG at 0.5");
    o.require(std::fabs(eval_unit(K::YG, 0.5, 0.5) - 0.7071) < 1e-4, "YG(0.5,0.5)");
    const std::array s7{Law::SBCI7};
    o.require(!grid_check(K::WB, K::WB, s7, g).at("SBCI7").passed(), "WB SBCI7 passes");
    o.require(violates_at(K::WB, K::WB, Law::SBCI7, std::vector{0.5, 0.3}, g.tolerance), "WB at (0.5,0.3)");
    return o;
  });

  criterion(7, "exact counterexamples reproduce to 1e-12", 1.0, [] {
    Outcome o;
    for (const ExactCase& c : known_counterexamples()) {
      o.require(c.matches() && c.violation, c.name);
    }
    const double lhs = eval_unit(K::FD, 0.75, 0.5);
    const double rhs = eval_unit(K::GD, eval_unit(K::FD, 0.5, 0.2), eval_unit(K::FD, 0.75, 0.2));
    o.require(std::fabs(lhs - 0.5) <= 1e-12 && std::fabs(rhs - 0.25) <= 1e-12, "GD/FD PB-2 values");
    o.require(std::fabs(eval_unit(K::R, 0.5, 0.5) - (1 - 0.5 + 0.25)) <= 1e-12, "R(0.5,0.5)");
    const RealInterval m = markov_sub({2, 3}, {2, 3});
    o.require(m == RealInterval{0, 0} && !m.contains(2.5 - 2.1), "Markov");
    o.require(std::fabs(eval_unit(K::YG, 0.3, 0.5) - 0.81225) < 5e-5, "Yager 0.81225");
    return o;
  });

  criterion(8, "plane: PB-1..7 sampled-pass, SBCI1 fails on the witness family", 5.0, [] {
    Outcome o;
    PlaneBox box;
    const AxiomReport r = plane_check(box);
    for (const char* id : {"PB-1", "PB-2", "PB-3", "PB-4", "PB-5", "PB-6", "PB-7"}) {
      o.require(r.at(id).passed(), id);
    }
    const Verdict& s = r.at("SBCI1");
    o.require(!s.passed() && s.point.size() == 6, "SBCI1 passes");
    if (s.point.size() == 6) {
      o.require(plane_exchange_fails({s.point[0], s.point[1]}, {s.point[2], s.point[3]}, box.tolerance),
                "witness outside the family");
    }
    return o;
  });

  criterion(9, "search equals naive oracle; intersection has no violations", 300.0, [] {
    Outcome o;
    for (const auto& t : {task(2, {"sbci"}), task(2, {"pbci"}), task(2, {"sbci", "pbci"}),
                          task(2, {"bci", "sbck"}), task(3, {"bci"}), task(3, {"bck"}),
                          task(3, {"bci", "properties-a"})}) {
      std::string label = "n=" + std::to_string(t.size);
      for (const auto& s : t.require) label += " " + s;
      o.require(enumerate(t).count == naive_count(t), label);
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      const AxiomReport r = verify_intersection(n);
      o.require(r.passed() && r.fact("violations") == "0", "intersection n=" + std::to_string(n));
      if (n == 3) o.note = "n=3 checked " + r.fact("checked");
    }
    return o;
  });

  criterion(10, "SBCI8-18 on every SBCI model, A-1..A-11 on every BCI model", 300.0, [] {
    Outcome o;
    std::size_t sb = 0, b = 0;
    for (std::size_t n = 1; n <= 3; ++n) {
      enumerate(task(n, {"sbci"}), [&](const FiniteAlgebra& a) {
        ++sb;
        o.require(check_sbci_derived(a).passed(), "SBCI8-18 fails at n=" + std::to_string(n));
        return true;
      });
    }
    for (std::size_t n = 1; n <= 4; ++n) {
      enumerate(task(n, {"bci"}), [&](const FiniteAlgebra& a) {
        ++b;
        o.require(check_properties_a(a).passed(), "A-laws fail at n=" + std::to_string(n));
        return true;
      });
    }
    if (o.ok) o.note = std::to_string(sb) + " SBCI models, " + std::to_string(b) + " BCI models";
    return o;
  });

  std::printf("%s: %d of 10 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
