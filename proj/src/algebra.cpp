#include "sbci/algebra.hpp"

#include <utility>

#include "sbci/error.hpp"

namespace sbci {

Table::Table(std::size_t n, std::vector<Elem> cells) : n_(n), cells_(std::move(cells)) {
  if (cells_.size() != n_ * n_) {
    throw InvalidAlgebra("table has " + std::to_string(cells_.size()) +
                         " cells, expected " + std::to_string(n_ * n_));
  }
}

Table Table::transposed() const {
  Table t(n_);
  for (Elem x = 0; x < n_; ++x) {
    for (Elem y = 0; y < n_; ++y) t.at(y, x) = (*this)(x, y);
  }
  return t;
}

namespace {

void validate_table(const Table& t, std::size_t n, const char* name) {
  if (t.size() != n) {
    throw InvalidAlgebra(std::string(name) + " table is " + std::to_string(t.size()) +
                         "x" + std::to_string(t.size()) + ", carrier has " +
                         std::to_string(n) + " elements");
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (t(x, y) >= n) {
        throw InvalidAlgebra(std::string(name) + "[" + std::to_string(x) + "][" +
                             std::to_string(y) + "] = " + std::to_string(t(x, y)) +
                             " is outside the carrier");
      }
    }
  }
}

}  // namespace

FiniteAlgebra::FiniteAlgebra(Elem top, Table arrow, std::optional<Table> double_arrow,
                             std::vector<std::string> labels)
    : top_(top),
      arrow_(std::move(arrow)),
      double_arrow_(std::move(double_arrow)),
      labels_(std::move(labels)) {
  const std::size_t n = arrow_.size();
  if (n == 0) throw InvalidAlgebra("carrier must be nonempty");
  if (top_ >= n) throw InvalidAlgebra("top " + std::to_string(top_) + " is outside the carrier");
  validate_table(arrow_, n, "arrow");
  if (double_arrow_) validate_table(*double_arrow_, n, "double_arrow");
  if (!labels_.empty() && labels_.size() != n) {
    throw InvalidAlgebra("expected " + std::to_string(n) + " labels, got " +
                         std::to_string(labels_.size()));
  }
}

const Table& FiniteAlgebra::table(Which which) const {
  if (which == Which::arrow) return arrow_;
  if (!double_arrow_) throw AbsentOperation("algebra has no double_arrow table");
  return *double_arrow_;
}

std::string FiniteAlgebra::label(Elem x) const {
  return labels_.empty() ? std::to_string(x) : labels_[x];
}

FiniteAlgebra FiniteAlgebra::with_tables(Table arrow, std::optional<Table> double_arrow) const {
  return FiniteAlgebra(top_, std::move(arrow), std::move(double_arrow), labels_);
}

FiniteAlgebra to_star_form(const FiniteAlgebra& alg) {
  if (alg.has_double_arrow()) {
    throw InvalidAlgebra("star-form conversion needs a single-operation algebra");
  }
  return alg.with_tables(alg.arrow().transposed(), std::nullopt);
}

FiniteAlgebra from_star_form(const FiniteAlgebra& alg) { return to_star_form(alg); }

}  // namespace sbci
