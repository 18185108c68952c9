#pragma once

#include <cstdint>

#include "sbci/algebra.hpp"

namespace sbci {

/// Complete finite tables; the reference interpretation of the laws.
class TableModel {
 public:
  using Val = Elem;
  using Bool = bool;

  TableModel(const Table& arrow, const Table& double_arrow, Elem top)
      : arrow_(&arrow), double_arrow_(&double_arrow), top_(top) {}
  explicit TableModel(const FiniteAlgebra& alg)
      : TableModel(alg.arrow(), alg.double_arrow(), alg.top()) {}

  Val imp(Val a, Val b) const { return (*arrow_)(a, b); }
  Val dimp(Val a, Val b) const { return (*double_arrow_)(a, b); }
  Val top() const { return top_; }
  Bool eq(Val a, Val b) const { return a == b; }
  Bool le(Val a, Val b) const { return imp(a, b) == top_; }
  Bool wb(Val a, Val b) const { return dimp(a, b) == top_; }
  static Bool implies(Bool p, Bool q) { return !p || q; }
  static Bool both(Bool p, Bool q) { return p && q; }
  static Bool iff(Bool p, Bool q) { return p == q; }

 private:
  const Table* arrow_;
  const Table* double_arrow_;
  Elem top_;
};

/// Kleene three-valued truth for partially filled tables.
enum class Tri : std::uint8_t { no, yes, unknown };

/// Tables where some cells are still unassigned (kUnknown). A law that
/// evaluates to Tri::no here is false in every completion.
class PartialModel {
 public:
  using Val = std::int32_t;
  using Bool = Tri;
  static constexpr Val kUnknown = -1;

  PartialModel(const std::int32_t* arrow, const std::int32_t* double_arrow, std::size_t n,
               Val top)
      : arrow_(arrow), double_arrow_(double_arrow), n_(n), top_(top) {}

  Val imp(Val a, Val b) const { return lookup(arrow_, a, b); }
  Val dimp(Val a, Val b) const { return lookup(double_arrow_, a, b); }
  Val top() const { return top_; }
  Bool eq(Val a, Val b) const {
    if (a < 0 || b < 0) return Tri::unknown;
    return a == b ? Tri::yes : Tri::no;
  }
  Bool le(Val a, Val b) const { return eq(imp(a, b), top_); }
  Bool wb(Val a, Val b) const { return eq(dimp(a, b), top_); }
  static Bool implies(Bool p, Bool q) {
    if (p == Tri::no || q == Tri::yes) return Tri::yes;
    if (p == Tri::yes && q == Tri::no) return Tri::no;
    return Tri::unknown;
  }
  static Bool both(Bool p, Bool q) {
    if (p == Tri::no || q == Tri::no) return Tri::no;
    if (p == Tri::yes && q == Tri::yes) return Tri::yes;
    return Tri::unknown;
  }
  static Bool iff(Bool p, Bool q) {
    if (p == Tri::unknown || q == Tri::unknown) return Tri::unknown;
    return p == q ? Tri::yes : Tri::no;
  }

 private:
  Val lookup(const std::int32_t* t, Val a, Val b) const {
    if (a < 0 || b < 0) return kUnknown;
    return t[static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b)];
  }

  const std::int32_t* arrow_;
  const std::int32_t* double_arrow_;
  std::size_t n_;
  Val top_;
};

}  // namespace sbci
