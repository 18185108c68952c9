#include <array>
#include <cmath>

#include "lane_arena.hpp"
#include "sbci/continuous.hpp"
#include "sbci/error.hpp"

namespace sbci {

PlanePoint plane_dimp(PlanePoint p, PlanePoint q) {
  return {q.x - p.x, (q.y - p.y) * std::exp(-p.x)};
}

PlanePoint plane_imp(PlanePoint p, PlanePoint q) {
  const double dx = q.x - p.x;
  return {dx, q.y - p.y * std::exp(dx)};
}

void PlaneBox::validate() const {
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) {
    throw Error("plane box bounds must be finite with lo < hi");
  }
  if (points < 2) throw Error("plane box needs at least 2 points per axis");
  if (!(tolerance > 0)) throw Error("plane tolerance must be positive");
}

std::vector<PlanePoint> PlaneBox::grid() const {
  validate();
  std::vector<double> axis(points);
  for (std::size_t i = 0; i < points; ++i) {
    axis[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  std::vector<PlanePoint> out;
  out.reserve(points * points);
  for (double x : axis) {
    for (double y : axis) out.push_back({x, y});
  }
  return out;
}

bool plane_exchange_fails(PlanePoint p, PlanePoint q, double tolerance) {
  return std::fabs(q.y * (std::exp(p.x) - 1) - p.y * (std::exp(q.x) - 1)) > tolerance;
}

namespace {

// Same layout as the unit batch model, with two coordinates per value.
// Runs of equal x-coordinates reuse the previous exponential.
class PlaneBatchModel {
 public:
  struct Val {
    std::uint32_t x, y;
  };
  struct Bool {
    std::uint32_t slot;
  };

  PlaneBatchModel(std::size_t lanes, double eps) : eps_(eps), vals_(lanes), masks_(lanes) {}

  void begin() {
    vals_.reset();
    masks_.reset();
    top_ = uniform({0, 0});
  }
  Val uniform(PlanePoint p) {
    Val v{vals_.alloc(true), vals_.alloc(true)};
    vals_.data(v.x)[0] = p.x;
    vals_.data(v.y)[0] = p.y;
    return v;
  }
  Val varying(const std::vector<PlanePoint>& ps) {
    Val v{vals_.alloc(false), vals_.alloc(false)};
    for (std::size_t i = 0; i < ps.size(); ++i) {
      vals_.data(v.x)[i] = ps[i].x;
      vals_.data(v.y)[i] = ps[i].y;
    }
    return v;
  }

  Val dimp(Val p, Val q) {
    const std::uint32_t dx = sub(q.x, p.x);
    const bool u = vals_.uniform(dx) && vals_.uniform(p.y) && vals_.uniform(q.y);
    const std::uint32_t ry = vals_.alloc(u);
    const std::size_t n = u ? 1 : vals_.lanes();
    double* out = vals_.data(ry);
    Exp e;
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = (vals_.at(q.y, i) - vals_.at(p.y, i)) * e(-vals_.at(p.x, i));
    }
    return {dx, ry};
  }

  Val imp(Val p, Val q) {
    const std::uint32_t dx = sub(q.x, p.x);
    const bool u = vals_.uniform(dx) && vals_.uniform(p.y) && vals_.uniform(q.y);
    const std::uint32_t ry = vals_.alloc(u);
    const std::size_t n = u ? 1 : vals_.lanes();
    double* out = vals_.data(ry);
    Exp e;
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = vals_.at(q.y, i) - vals_.at(p.y, i) * e(vals_.at(dx, i));
    }
    return {dx, ry};
  }

  Val top() const { return top_; }

  Bool eq(Val a, Val b) {
    const bool u = vals_.uniform(a.x) && vals_.uniform(a.y) && vals_.uniform(b.x) &&
                   vals_.uniform(b.y);
    const auto s = masks_.alloc(u);
    const std::size_t n = u ? 1 : vals_.lanes();
    std::uint8_t* m = masks_.data(s);
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = std::fabs(vals_.at(a.x, i) - vals_.at(b.x, i)) <= eps_ &&
             std::fabs(vals_.at(a.y, i) - vals_.at(b.y, i)) <= eps_;
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
    for (std::size_t i = 0; i < n; ++i) {
      if (!masks_.data(b.slot)[i]) return i;
    }
    return std::nullopt;
  }

 private:
  struct Exp {
    double arg = std::nan("");
    double value = 0;
    double operator()(double a) {
      if (a != arg) {
        arg = a;
        value = std::exp(a);
      }
      return value;
    }
  };

  std::uint32_t sub(std::uint32_t a, std::uint32_t b) {
    const bool u = vals_.uniform(a) && vals_.uniform(b);
    const auto s = vals_.alloc(u);
    const std::size_t n = u ? 1 : vals_.lanes();
    for (std::size_t i = 0; i < n; ++i) vals_.data(s)[i] = vals_.at(a, i) - vals_.at(b, i);
    return s;
  }

  template <class Op>
  Bool combine(Bool p, Bool q, Op op) {
    const bool u = masks_.uniform(p.slot) && masks_.uniform(q.slot);
    const auto s = masks_.alloc(u);
    const std::size_t n = u ? 1 : masks_.lanes();
    for (std::size_t i = 0; i < n; ++i) {
      masks_.data(s)[i] = op(masks_.at(p.slot, i), masks_.at(q.slot, i));
    }
    return {s};
  }

  double eps_;
  detail::LaneArena<double> vals_;
  detail::LaneArena<std::uint8_t> masks_;
  Val top_{0, 0};
};

constexpr std::array kPlaneDefault{laws::Law::PB1, laws::Law::PB2, laws::Law::PB3,
                                   laws::Law::PB4, laws::Law::PB5, laws::Law::PB6,
                                   laws::Law::PB7, laws::Law::SBCI1};

}  // namespace

AxiomReport plane_check(const PlaneBox& box, std::span<const laws::Law> law_list) {
  if (law_list.empty()) law_list = kPlaneDefault;
  const std::vector<PlanePoint> pts = box.grid();
  const std::size_t n = pts.size();
  PlaneBatchModel m(n, box.tolerance);

  AxiomReport r;
  r.system = "plane";
  r.sampled = true;
  r.facts.emplace_back("box", "[" + format_real(box.lo) + "," + format_real(box.hi) + "]^2");
  r.facts.emplace_back("points-per-axis", std::to_string(box.points));
  r.facts.emplace_back("tolerance", format_real(box.tolerance));

  std::vector<PlaneBatchModel::Val> args;
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
      args.push_back(m.varying(pts));
      const auto ok = laws::evaluate(law, m, std::span<const PlaneBatchModel::Val>(args));
      if (auto lane = m.first_false(ok)) {
        v.status = Status::fail;
        auto push = [&](PlanePoint p) {
          v.point.push_back(p.x);
          v.point.push_back(p.y);
          v.witness_labels.push_back("(" + format_real(p.x) + "," + format_real(p.y) + ")");
        };
        for (std::size_t i : idx) push(pts[i]);
        push(pts[*lane]);
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

}  // namespace sbci
