#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sbci {

/// Index of a carrier element, always in [0, n).
using Elem = std::uint32_t;

/// Largest carrier the exhaustive checkers accept.
inline constexpr std::size_t kMaxCheckedSize = 16;

/// Dense n x n operation table over the carrier {0..n-1}.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Elem fill = 0) : n_(n), cells_(n * n, fill) {}
  Table(std::size_t n, std::vector<Elem> cells);

  std::size_t size() const noexcept { return n_; }

  Elem operator()(Elem x, Elem y) const { return cells_[x * n_ + y]; }
  Elem& at(Elem x, Elem y) { return cells_[x * n_ + y]; }

  std::span<const Elem> cells() const noexcept { return cells_; }
  std::span<const Elem> row(Elem x) const { return {cells_.data() + x * n_, n_}; }

  Table transposed() const;

  bool operator==(const Table&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> cells_;
};

/// Which of the two implication tables a derived object refers to.
enum class Which { arrow, double_arrow };

/// Carrier {0..n-1} with one or two implication tables and a distinguished
/// top. `arrow` houses ->, `double_arrow` houses ->> when present.
class FiniteAlgebra {
 public:
  /// Throws InvalidAlgebra when a table is not n x n or holds an index
  /// outside [0, n), when top is out of range, or when the label count
  /// is neither 0 nor n.
  FiniteAlgebra(Elem top, Table arrow, std::optional<Table> double_arrow = {},
                std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return arrow_.size(); }
  Elem top() const noexcept { return top_; }

  const Table& arrow() const noexcept { return arrow_; }
  bool has_double_arrow() const noexcept { return double_arrow_.has_value(); }
  const std::optional<Table>& double_arrow_table() const noexcept { return double_arrow_; }

  /// The ->> table, or -> when the algebra carries a single operation.
  const Table& double_arrow() const noexcept {
    return double_arrow_ ? *double_arrow_ : arrow_;
  }

  /// Throws AbsentOperation when `which` names a missing table.
  const Table& table(Which which) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Elem x) const;

  /// Same carrier and top with the given tables; labels are kept.
  FiniteAlgebra with_tables(Table arrow, std::optional<Table> double_arrow) const;

  bool operator==(const FiniteAlgebra&) const = default;

 private:
  Elem top_;
  Table arrow_;
  std::optional<Table> double_arrow_;
  std::vector<std::string> labels_;
};

/// Transposes a single-operation algebra between the ->-form and the
/// *-form (x * y := y -> x, bottom := top). The transpose is an involution,
/// so both directions share one implementation.
FiniteAlgebra to_star_form(const FiniteAlgebra& alg);
FiniteAlgebra from_star_form(const FiniteAlgebra& alg);

}  // namespace sbci
