#include "sbci/demos.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "sbci/axioms.hpp"
#include "sbci/error.hpp"

namespace sbci {

namespace {

using K = UnitKind;
using laws::Law;

constexpr std::array<std::string_view, 7> kDemos{
    "reichenbach-lk", "godel-fodor", "yager", "weber", "plane-pbci", "markov", "interval-lk"};

constexpr std::array kSbci1to7{Law::SBCI1, Law::SBCI2, Law::SBCI3, Law::SBCI4,
                               Law::SBCI5, Law::SBCI6, Law::SBCI7};

std::string iv(RealInterval r) { return "[" + format_real(r.lo) + "," + format_real(r.hi) + "]"; }

std::string tuple(std::span<const double> xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + format_real(xs[i]);
  return s + ")";
}

class Demo {
 public:
  Demo(std::string_view name, const DemoOptions& opts) : opts_(opts) {
    run_.command = "demo " + std::string(name);
    expect_.system = "expectations";
  }

  void expect(std::string claim, bool holds, std::string detail = {}) {
    Verdict v;
    v.axiom = std::move(claim);
    if (!holds) {
      v.status = Status::fail;
      v.detail = std::move(detail);
    }
    expect_.verdicts.push_back(std::move(v));
  }

  void note(std::string key, std::string value) { run_.notes.emplace_back(std::move(key), std::move(value)); }

  const AxiomReport& add(AxiomReport r) {
    run_.reports.push_back(std::move(r));
    return run_.reports.back();
  }

  const AxiomReport& grid(K dbl, K arr, std::span<const Law> ls) {
    AxiomReport r = grid_check(dbl, arr, ls, opts_.grid, opts_.backend);
    r.system = std::string(to_string(dbl)) + "/" + std::string(to_string(arr));
    return add(std::move(r));
  }

  const AxiomReport& coincide(K wb, K order) {
    std::vector<std::string> labels;
    for (double p : opts_.grid.points()) labels.push_back(format_real(p));
    AxiomReport r = relations_coincide(sampled_relation(wb, opts_.grid),
                                       sampled_relation(order, opts_.grid), labels);
    r.system = "coincide " + std::string(to_string(wb)) + "/" + std::string(to_string(order));
    r.sampled = true;
    return add(std::move(r));
  }

  // Notes expected and computed values of a known case, then expects it to
  // reproduce and to exhibit its failure.
  void exact(const std::string& name, const std::string& label) {
    for (const ExactCase& c : known_counterexamples()) {
      if (c.name != name) continue;
      note(label + " at " + tuple(c.witness) + " expected", tuple(c.expected));
      note(label + " at " + tuple(c.witness) + " computed", tuple(c.computed));
      expect(c.name + " reproduces", c.matches(), c.claim);
      expect(c.name + " exhibits the failure", c.violation, c.claim);
      return;
    }
    throw Error("no known case " + name);
  }

  void witness_note(const AxiomReport& r, const std::string& axiom) {
    const Verdict& v = r.at(axiom);
    if (!v.passed()) note(r.system + " " + axiom + " first witness", tuple(v.point));
  }

  RunReport finish() {
    run_.reports.push_back(std::move(expect_));
    run_.exit_code = run_.reports.back().passed() ? 0 : 1;
    return std::move(run_);
  }

  const DemoOptions& opts() const { return opts_; }

 private:
  const DemoOptions& opts_;
  RunReport run_;
  AxiomReport expect_;
};

void reichenbach_lk(Demo& d) {
  const auto& g = d.grid(K::R, K::LK, kSbci1to7);
  d.expect("R/LK SBCI1-7 sampled-pass", g.passed());
  d.exact("reichenbach-reflexivity", "R(x,x)");
  const auto& c = d.coincide(K::R, K::LK);
  d.expect("R-induced relation is not reflexive", !c.at("wb-reflexive").passed());
  d.expect("R-induced relation differs from the LK order", !c.at("wb-equals-le").passed());
}

void godel_fodor(Demo& d) {
  const auto& g = d.grid(K::GD, K::FD, kSbci1to7);
  d.expect("GD/FD SBCI1-7 sampled-pass", g.passed());
  const std::array pb2{Law::PB2};
  const auto& p = d.grid(K::GD, K::FD, pb2);
  d.expect("GD/FD PB-2 fails on the grid", !p.at("PB-2").passed());
  d.witness_note(p, "PB-2");
  d.exact("gd-fd-pb2", "PB-2 sides");
  const auto& c = d.coincide(K::GD, K::FD);
  d.expect("GD and FD induce the same order", c.at("wb-equals-le").passed());
}

void yager(Demo& d) {
  d.exact("yager-order-property", "YG(x,y)");
  d.note("order property", "fails: 0.3 <= 0.5 but YG(0.3,0.5) != 1");
  const std::array l{Law::SBCI12};
  const auto& g = d.grid(K::YG, K::YG, l);
  d.expect("YG SBCI12 fails on the grid", !g.at("SBCI12").passed());
  d.witness_note(g, "SBCI12");
  d.exact("yager-reflexivity", "YG(x,x)");
}

void weber(Demo& d) {
  const std::array l{Law::SBCI7};
  const auto& g = d.grid(K::WB, K::WB, l);
  d.expect("WB SBCI7 fails on the grid", !g.at("SBCI7").passed());
  d.witness_note(g, "SBCI7");
  d.exact("weber-antisymmetry", "WB both ways");
}

void plane_pbci(Demo& d) {
  PlaneBox box;
  box.tolerance = d.opts().grid.tolerance;
  const auto& r = d.add(plane_check(box));
  for (const char* id : {"PB-1", "PB-2", "PB-3", "PB-4", "PB-5", "PB-6", "PB-7"}) {
    d.expect(std::string(id) + " sampled-pass", r.at(id).passed());
  }
  const Verdict& s = r.at("SBCI1");
  d.expect("SBCI1 fails on the box", !s.passed());
  if (!s.passed()) {
    const PlanePoint p{s.point[0], s.point[1]}, q{s.point[2], s.point[3]};
    d.note("SBCI1 first witness", s.witness_labels[0] + " " + s.witness_labels[1] + " " +
                                      s.witness_labels[2]);
    d.expect("witness satisfies y2 (e^x1 - 1) != y1 (e^x2 - 1)",
             plane_exchange_fails(p, q, box.tolerance));
  }
  d.expect("(1,0), (0,1) satisfies y2 (e^x1 - 1) != y1 (e^x2 - 1)",
           plane_exchange_fails({1, 0}, {0, 1}, box.tolerance));
}

void markov(Demo& d) {
  const RealInterval x{2, 3};
  d.note("Markov [2,3]-[2,3]", iv(markov_sub(x, x)));
  d.note("2.5-2.1", format_real(2.5 - 2.1) + " (excluded by Markov)");
  d.note("Moore [2,3]-[2,3]", iv(moore_sub(x, x)));
  d.exact("markov-subtraction", "Markov difference and member");
  d.exact("moore-subtraction", "Moore difference");
  const RealInterval a{1, 4}, b{2, 3};
  const RealInterval m = markov_sub(a, b);
  d.note("Markov [1,4]-[2,3]", iv(m));
  d.expect("Markov width is |w(X) - w(Y)|",
           std::fabs(m.width() - std::fabs(a.width() - b.width())) <= 1e-12);
}

void interval_lk(Demo& d) {
  struct Pair {
    RealInterval x, y;
  };
  const std::array pairs{Pair{{0.2, 0.3}, {0.5, 0.9}}, Pair{{0.5, 0.8}, {0.2, 0.6}},
                         Pair{{0, 0}, {1, 1}}, Pair{{0.1, 0.7}, {0.3, 0.4}}};
  for (const Pair& p : pairs) {
    const auto r = real_interval_implication(p.x, p.y, K::LK);
    const std::string k = iv(p.x) + " => " + iv(p.y);
    d.note(k + " best", iv(r.best));
    d.note(k + " km", iv(r.km));
    const Verdict v = sampled_interval_correctness(p.x, p.y, K::LK, 41, 1e-12);
    d.expect(k + " best contains every pointwise value", v.passed(), tuple(v.point));
    if (p.x.hi <= p.y.lo) {
      d.expect(k + " way-below gives best [1,1]", r.best == RealInterval{1, 1});
    }
  }
  // km drops LK(0.8, 0.2) = 0.4.
  const auto r = real_interval_implication({0.5, 0.8}, {0.2, 0.6}, K::LK);
  const double v = eval_unit(K::LK, 0.8, 0.2);
  d.note("LK(0.8,0.2)", format_real(v));
  d.expect("km misses LK(0.8,0.2)", !r.km.contains(v, 1e-12));
}

}  // namespace

std::span<const std::string_view> demo_names() { return kDemos; }

bool is_demo(std::string_view name) {
  return std::find(kDemos.begin(), kDemos.end(), name) != kDemos.end();
}

RunReport run_demo(std::string_view name, const DemoOptions& opts) {
  if (!is_demo(name)) throw Error("unknown demo '" + std::string(name) + "'");
  opts.grid.validate();
  Demo d(name, opts);
  if (name == "reichenbach-lk") reichenbach_lk(d);
  if (name == "godel-fodor") godel_fodor(d);
  if (name == "yager") yager(d);
  if (name == "weber") weber(d);
  if (name == "plane-pbci") plane_pbci(d);
  if (name == "markov") markov(d);
  if (name == "interval-lk") interval_lk(d);
  return d.finish();
}

}  // namespace sbci
