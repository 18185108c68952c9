#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbci/kernels.hpp"
#include "sbci/laws.hpp"
#include "sbci/relation.hpp"
#include "sbci/report.hpp"

namespace sbci {

/// Short names LK, R, GD, FD, YG, WB.
std::string_view to_string(UnitKind k);
/// Accepts the short names and lukasiewicz, reichenbach, godel, fodor,
/// yager, weber.
std::optional<UnitKind> parse_unit(std::string_view s);
/// Reference scalar evaluation.
double eval_unit(UnitKind k, double x, double y);

struct GridSpec {
  std::size_t resolution = 101;
  double tolerance = 1e-9;
  /// Throws Error unless resolution >= 2 and tolerance > 0.
  void validate() const;
  /// i / (resolution - 1) for i in [0, resolution), within 2^-53. The
  /// lower half is a multiple of 2^-53 and the upper half its exact
  /// complement, so the grid is closed under x -> 1 - x.
  std::vector<double> points() const;
};

/// Decimal form with 12 significant digits, for labels.
std::string format_real(double v);

/// Checks each law at every grid tuple with `dbl` as ->> and `arr` as ->.
/// Equality and "equals top" use the grid tolerance. The witness of a
/// failure is the lexicographically first grid point, in `point`. A
/// leading "range" verdict checks both operations stay in [0,1].
AxiomReport grid_check(UnitKind dbl, UnitKind arr, std::span<const laws::Law> law_list,
                       const GridSpec& grid, std::optional<Backend> backend = std::nullopt);

/// Scalar evaluation of one law at one point; true when it is violated.
bool violates_at(UnitKind dbl, UnitKind arr, laws::Law law, std::span<const double> point,
                 double tolerance);

/// rel[i][j] iff |k(p_i, p_j) - 1| <= tolerance over the grid points.
RelationMatrix sampled_relation(UnitKind k, const GridSpec& grid);
/// rel[i][j] iff p_i <= p_j.
RelationMatrix numeric_order(const GridSpec& grid);

struct ExactCase {
  std::string name;
  std::string claim;
  std::vector<double> witness;
  std::vector<double> expected;
  std::vector<double> computed;
  double tolerance = 1e-12;
  /// Whether the recomputed values actually exhibit the claimed failure.
  bool violation = false;
  bool matches() const;
};

/// The numeric counterexamples, each recomputed in closed form.
std::vector<ExactCase> known_counterexamples();

struct RealInterval {
  double lo = 0;
  double hi = 0;
  /// Throws Error when lo > hi.
  static RealInterval make(double lo, double hi);
  bool contains(double x, double eps = 0) const { return lo - eps <= x && x <= hi + eps; }
  double width() const { return hi - lo; }
  bool operator==(const RealInterval&) const = default;
};

RealInterval moore_add(RealInterval x, RealInterval y);
RealInterval moore_sub(RealInterval x, RealInterval y);
RealInterval moore_mul(RealInterval x, RealInterval y);
/// Throws DomainError when 0 is in y.
RealInterval moore_div(RealInterval x, RealInterval y);
/// [min(X.lo - Y.lo, X.hi - Y.hi), max(X.lo - Y.lo, X.hi - Y.hi)]
RealInterval markov_sub(RealInterval x, RealInterval y);

struct IntervalImplication {
  RealInterval best;
  RealInterval km;
};

/// best = [X.hi -> Y.lo, X.lo -> Y.hi], km = [min(X.lo -> Y.lo, X.hi -> Y.hi),
/// X.lo -> Y.hi] with min as the meet. Throws Error unless X, Y lie in [0,1].
IntervalImplication real_interval_implication(RealInterval x, RealInterval y,
                                              UnitKind base = UnitKind::LK);

/// Samples `samples` points of X and of Y and checks base(x, y) lies in
/// best(X, Y) within `tolerance`. Witness in `point` is (x, y).
Verdict sampled_interval_correctness(RealInterval x, RealInterval y, UnitKind base,
                                     std::size_t samples, double tolerance);

struct PlanePoint {
  double x = 0;
  double y = 0;
  bool operator==(const PlanePoint&) const = default;
};

/// (x2 - x1, (y2 - y1) e^{-x1})
PlanePoint plane_dimp(PlanePoint p, PlanePoint q);
/// (x2 - x1, y2 - y1 e^{x2 - x1})
PlanePoint plane_imp(PlanePoint p, PlanePoint q);

struct PlaneBox {
  double lo = -2;
  double hi = 2;
  std::size_t points = 21;
  double tolerance = 1e-9;
  void validate() const;
  /// Grid points, x-major.
  std::vector<PlanePoint> grid() const;
};

/// PB-1..PB-7 and SBCI1 by default. Witness coordinates are flattened
/// (x1, y1, x2, y2, ...) in `point`.
AxiomReport plane_check(const PlaneBox& box, std::span<const laws::Law> law_list = {});

/// y2 (e^{x1} - 1) != y1 (e^{x2} - 1), beyond `tolerance`: exactly when the
/// two nestings of SBCI1 differ for p = (x1, y1), q = (x2, y2).
bool plane_exchange_fails(PlanePoint p, PlanePoint q, double tolerance);

}  // namespace sbci
