#include "sbci/continuous.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "lane_arena.hpp"
#include "sbci/error.hpp"

namespace sbci {

namespace {

constexpr std::string_view kShort[kUnitKindCount] = {"LK", "R", "GD", "FD", "YG", "WB"};
constexpr std::string_view kLong[kUnitKindCount] = {"lukasiewicz", "reichenbach", "godel",
                                                    "fodor",       "yager",       "weber"};

}  // namespace

std::string_view to_string(UnitKind k) { return kShort[static_cast<std::size_t>(k)]; }

std::optional<UnitKind> parse_unit(std::string_view s) {
  for (std::size_t i = 0; i < kUnitKindCount; ++i) {
    if (s == kShort[i] || s == kLong[i]) return static_cast<UnitKind>(i);
  }
  return std::nullopt;
}

double eval_unit(UnitKind k, double x, double y) {
  double out;
  kernels(Backend::scalar).eval[static_cast<std::size_t>(k)](&x, &y, &out, 1);
  return out;
}

void GridSpec::validate() const {
  if (resolution < 2) throw Error("grid resolution must be at least 2");
  if (!(tolerance > 0)) throw Error("grid tolerance must be positive");
}

std::vector<double> GridSpec::points() const {
  validate();
  // Lower half snapped to multiples of 2^-53; upper half mirrored, so
  // 1 - p is again exactly a grid point.
  const double scale = std::ldexp(1.0, 53);
  const std::size_t last = resolution - 1;
  std::vector<double> p(resolution);
  for (std::size_t i = 0; 2 * i <= last; ++i) {
    const double v = static_cast<double>(i) / static_cast<double>(last);
    p[i] = std::nearbyint(v * scale) / scale;
    p[last - i] = 1 - p[i];
  }
  return p;
}

std::string format_real(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  return std::string(buf, end);
}

namespace {

// Evaluates laws over a whole row of grid points at once: every variable
// but the last is uniform, the last one runs across the lanes.
class UnitBatchModel {
 public:
  struct Val {
    std::uint32_t slot;
  };
  struct Bool {
    std::uint32_t slot;
  };

  UnitBatchModel(const KernelTable& k, UnitKind dbl, UnitKind arr, std::size_t lanes, double eps)
      : k_(k),
        dbl_(k.eval[static_cast<std::size_t>(dbl)]),
        arr_(k.eval[static_cast<std::size_t>(arr)]),
        eps_(eps),
        vals_(lanes),
        masks_(lanes) {}

  void begin() {
    vals_.reset();
    masks_.reset();
    top_ = uniform(1.0);
  }
  Val uniform(double v) {
    const auto s = vals_.alloc(true);
    vals_.data(s)[0] = v;
    return {s};
  }
  Val varying(const double* v) {
    const auto s = vals_.alloc(false);
    std::copy(v, v + vals_.lanes(), vals_.data(s));
    return {s};
  }

  Val imp(Val a, Val b) { return apply(arr_, a, b); }
  Val dimp(Val a, Val b) { return apply(dbl_, a, b); }
  Val top() const { return top_; }
  Bool eq(Val a, Val b) {
    const bool u = vals_.uniform(a.slot) && vals_.uniform(b.slot);
    const auto s = masks_.alloc(u);
    if (u) {
      k_.near(vals_.data(a.slot), vals_.data(b.slot), eps_, masks_.data(s), 1);
    } else {
      k_.near(vals_.spread(a.slot, sa_), vals_.spread(b.slot, sb_), eps_, masks_.data(s),
              vals_.lanes());
    }
    return {s};
  }
  Bool le(Val a, Val b) { return eq(imp(a, b), top_); }
  Bool wb(Val a, Val b) { return eq(dimp(a, b), top_); }
  Bool implies(Bool p, Bool q) { return combine(p, q, [](bool x, bool y) { return !x || y; }); }
  Bool both(Bool p, Bool q) { return combine(p, q, [](bool x, bool y) { return x && y; }); }
  Bool iff(Bool p, Bool q) { return combine(p, q, [](bool x, bool y) { return x == y; }); }

  std::optional<std::size_t> first_false(Bool b) const {
    const std::size_t n = masks_.uniform(b.slot) ? 1 : masks_.lanes();
    const std::uint8_t* m = masks_.data(b.slot);
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i]) return i;
    }
    return std::nullopt;
  }

 private:
  using EvalFn = void (*)(const double*, const double*, double*, std::size_t);

  Val apply(EvalFn f, Val a, Val b) {
    const bool u = vals_.uniform(a.slot) && vals_.uniform(b.slot);
    const auto s = vals_.alloc(u);
    if (u) {
      f(vals_.data(a.slot), vals_.data(b.slot), vals_.data(s), 1);
    } else {
      f(vals_.spread(a.slot, sa_), vals_.spread(b.slot, sb_), vals_.data(s), vals_.lanes());
    }
    return {s};
  }

  template <class Op>
  Bool combine(Bool p, Bool q, Op op) {
    const bool u = masks_.uniform(p.slot) && masks_.uniform(q.slot);
    const auto s = masks_.alloc(u);
    const std::size_t n = u ? 1 : masks_.lanes();
    std::uint8_t* out = masks_.data(s);
    for (std::size_t i = 0; i < n; ++i) out[i] = op(masks_.at(p.slot, i), masks_.at(q.slot, i));
    return {s};
  }

  const KernelTable& k_;
  EvalFn dbl_;
  EvalFn arr_;
  double eps_;
  detail::LaneArena<double> vals_;
  detail::LaneArena<std::uint8_t> masks_;
  std::vector<double> sa_, sb_;
  Val top_{0};
};

class ScalarUnitModel {
 public:
  using Val = double;
  using Bool = bool;
  ScalarUnitModel(UnitKind dbl, UnitKind arr, double eps) : dbl_(dbl), arr_(arr), eps_(eps) {}
  Val imp(Val a, Val b) const { return eval_unit(arr_, a, b); }
  Val dimp(Val a, Val b) const { return eval_unit(dbl_, a, b); }
  Val top() const { return 1.0; }
  Bool eq(Val a, Val b) const { return std::fabs(a - b) <= eps_; }
  Bool le(Val a, Val b) const { return eq(imp(a, b), 1.0); }
  Bool wb(Val a, Val b) const { return eq(dimp(a, b), 1.0); }
  static Bool implies(Bool p, Bool q) { return !p || q; }
  static Bool both(Bool p, Bool q) { return p && q; }
  static Bool iff(Bool p, Bool q) { return p == q; }

 private:
  UnitKind dbl_, arr_;
  double eps_;
};

Verdict point_verdict(std::string id, std::vector<double> point) {
  Verdict v;
  v.axiom = std::move(id);
  v.status = Status::fail;
  for (double x : point) v.witness_labels.push_back(format_real(x));
  v.point = std::move(point);
  return v;
}

Verdict range_verdict(UnitKind dbl, UnitKind arr, const std::vector<double>& pts, double eps) {
  for (UnitKind k : {dbl, arr}) {
    for (double x : pts) {
      for (double y : pts) {
        const double v = eval_unit(k, x, y);
        if (v >= -eps && v <= 1 + eps) continue;
        Verdict out = point_verdict("range", {x, y});
        out.detail = std::string(to_string(k)) + " gives " + format_real(v);
        return out;
      }
    }
  }
  Verdict ok;
  ok.axiom = "range";
  return ok;
}

}  // namespace

AxiomReport grid_check(UnitKind dbl, UnitKind arr, std::span<const laws::Law> law_list,
                       const GridSpec& grid, std::optional<Backend> backend) {
  const std::vector<double> pts = grid.points();
  const std::size_t n = pts.size();
  UnitBatchModel m(kernels(backend.value_or(active_backend())), dbl, arr, n, grid.tolerance);

  AxiomReport r;
  r.system = std::string(to_string(dbl)) + "/" + std::string(to_string(arr));
  r.sampled = true;
  r.facts.emplace_back("resolution", std::to_string(grid.resolution));
  r.facts.emplace_back("tolerance", format_real(grid.tolerance));
  r.verdicts.push_back(range_verdict(dbl, arr, pts, grid.tolerance));

  std::vector<UnitBatchModel::Val> args;
  for (laws::Law law : law_list) {
    const auto& li = laws::info(law);
    const int outer = li.arity - 1;
    std::vector<std::size_t> idx(static_cast<std::size_t>(outer), 0);
    Verdict v;
    v.axiom = std::string(li.id);
    bool done = false;
    while (!done) {
      m.begin();
      args.clear();
      for (std::size_t i : idx) args.push_back(m.uniform(pts[i]));
      args.push_back(m.varying(pts.data()));
      const auto ok = laws::evaluate(law, m, std::span<const UnitBatchModel::Val>(args));
      if (auto lane = m.first_false(ok)) {
        std::vector<double> point;
        for (std::size_t i : idx) point.push_back(pts[i]);
        point.push_back(pts[*lane]);
        v = point_verdict(v.axiom, std::move(point));
        break;
      }
      int i = outer - 1;
      while (i >= 0 && ++idx[i] == n) idx[i--] = 0;
      done = i < 0;
    }
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

bool violates_at(UnitKind dbl, UnitKind arr, laws::Law law, std::span<const double> point,
                 double tolerance) {
  if (point.size() != static_cast<std::size_t>(laws::info(law).arity)) {
    throw Error("point has the wrong arity for " + std::string(laws::info(law).id));
  }
  ScalarUnitModel m(dbl, arr, tolerance);
  return !laws::evaluate(law, m, point);
}

RelationMatrix sampled_relation(UnitKind k, const GridSpec& grid) {
  const auto pts = grid.points();
  const std::size_t n = pts.size();
  std::vector<bool> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel[i * n + j] = std::fabs(eval_unit(k, pts[i], pts[j]) - 1.0) <= grid.tolerance;
    }
  }
  return RelationMatrix(n, std::move(rel));
}

RelationMatrix numeric_order(const GridSpec& grid) {
  const auto pts = grid.points();
  const std::size_t n = pts.size();
  std::vector<bool> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = pts[i] <= pts[j];
  }
  return RelationMatrix(n, std::move(rel));
}

bool ExactCase::matches() const {
  if (!violation || expected.size() != computed.size()) return false;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (!(std::fabs(expected[i] - computed[i]) <= tolerance)) return false;
  }
  return true;
}

std::vector<ExactCase> known_counterexamples() {
  using K = UnitKind;
  std::vector<ExactCase> out;
  {
    const double x = 0.75, y = 0.5, z = 0.2;
    const double lhs = eval_unit(K::FD, x, y);
    const double rhs = eval_unit(K::GD, eval_unit(K::FD, y, z), eval_unit(K::FD, x, z));
    out.push_back({"gd-fd-pb2", "PB-2 fails for (GD, FD): x -> y is not below the right side",
                   {x, y, z}, {0.5, 0.25}, {lhs, rhs}, 1e-12,
                   violates_at(K::GD, K::FD, laws::Law::PB2, std::vector{x, y, z}, 1e-12)});
  }
  {
    const double v = eval_unit(K::R, 0.5, 0.5);
    out.push_back({"reichenbach-reflexivity", "x ->> x = 1 - x + x^2 is not 1 at x = 0.5",
                   {0.5}, {0.75}, {v}, 1e-12, std::fabs(v - 1.0) > 1e-12});
  }
  {
    const RealInterval x{2, 3};
    const RealInterval d = markov_sub(x, x);
    const double member = 2.5 - 2.1;
    out.push_back({"markov-subtraction", "Markov [2,3]-[2,3] = [0,0] loses 2.5-2.1",
                   {2.5, 2.1}, {0, 0, 0.4}, {d.lo, d.hi, member}, 1e-12, !d.contains(member)});
  }
  {
    const RealInterval d = moore_sub({2, 3}, {2, 3});
    out.push_back({"moore-subtraction", "Moore [2,3]-[2,3] = [-1,1] keeps 2.5-2.1",
                   {2.5, 2.1}, {-1, 1}, {d.lo, d.hi}, 1e-12, d.contains(2.5 - 2.1)});
  }
  {
    const double v = eval_unit(K::YG, 0.3, 0.5);
    out.push_back({"yager-order-property", "0.3 <= 0.5 but 0.3 -> 0.5 is about 0.81225, not 1",
                   {0.3, 0.5}, {0.81225}, {v}, 5e-5, std::fabs(v - 1.0) > 1e-12});
  }
  {
    const double v = eval_unit(K::YG, 0.5, 0.5);
    out.push_back({"yager-reflexivity", "x -> x = x^x is not 1 at x = 0.5", {0.5},
                   {std::sqrt(0.5)}, {v}, 1e-12,
                   violates_at(K::YG, K::YG, laws::Law::SBCI12, std::vector{0.5}, 1e-12)});
  }
  {
    const double a = eval_unit(K::WB, 0.5, 0.3), b = eval_unit(K::WB, 0.3, 0.5);
    out.push_back({"weber-antisymmetry", "0.5 -> 0.3 = 0.3 -> 0.5 = 1 with 0.5 != 0.3",
                   {0.5, 0.3}, {1, 1}, {a, b}, 1e-12,
                   violates_at(K::WB, K::WB, laws::Law::SBCI7, std::vector{0.5, 0.3}, 1e-12)});
  }
  return out;
}

RealInterval RealInterval::make(double lo, double hi) {
  if (!(lo <= hi)) throw Error("interval lower end " + format_real(lo) + " exceeds " + format_real(hi));
  return {lo, hi};
}

RealInterval moore_add(RealInterval x, RealInterval y) { return {x.lo + y.lo, x.hi + y.hi}; }

RealInterval moore_sub(RealInterval x, RealInterval y) { return {x.lo - y.hi, x.hi - y.lo}; }

RealInterval moore_mul(RealInterval x, RealInterval y) {
  const double p[] = {x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RealInterval moore_div(RealInterval x, RealInterval y) {
  if (y.contains(0.0)) throw DomainError("division by an interval containing 0");
  return moore_mul(x, {1.0 / y.hi, 1.0 / y.lo});
}

RealInterval markov_sub(RealInterval x, RealInterval y) {
  const double a = x.lo - y.lo, b = x.hi - y.hi;
  return {std::min(a, b), std::max(a, b)};
}

IntervalImplication real_interval_implication(RealInterval x, RealInterval y, UnitKind base) {
  for (const auto& iv : {x, y}) {
    if (iv.lo < 0 || iv.hi > 1 || iv.lo > iv.hi) throw Error("intervals must lie in [0,1]");
  }
  auto f = [&](double a, double b) { return eval_unit(base, a, b); };
  return {{f(x.hi, y.lo), f(x.lo, y.hi)},
          {std::min(f(x.lo, y.lo), f(x.hi, y.hi)), f(x.lo, y.hi)}};
}

Verdict sampled_interval_correctness(RealInterval x, RealInterval y, UnitKind base,
                                     std::size_t samples, double tolerance) {
  if (samples < 2) throw Error("need at least 2 samples per interval");
  const RealInterval best = real_interval_implication(x, y, base).best;
  auto at = [&](RealInterval iv, std::size_t i) {
    return iv.lo + iv.width() * static_cast<double>(i) / static_cast<double>(samples - 1);
  };
  Verdict v;
  v.axiom = "representation";
  for (std::size_t i = 0; i < samples; ++i) {
    for (std::size_t j = 0; j < samples; ++j) {
      const double a = at(x, i), b = at(y, j);
      if (best.contains(eval_unit(base, a, b), tolerance)) continue;
      v = point_verdict("representation", {a, b});
      return v;
    }
  }
  return v;
}

}  // namespace sbci
