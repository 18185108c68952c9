#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sbci/algebra.hpp"

namespace sbci::detail {

// Walks {0..n-1}^arity lexicographically until `holds` returns false and
// returns that tuple.
template <class F>
std::optional<std::vector<Elem>> find_violation(std::size_t n, int arity, F&& holds) {
  std::vector<Elem> t(static_cast<std::size_t>(arity), 0);
  if (n == 0) return std::nullopt;
  while (true) {
    if (!holds(std::span<const Elem>(t))) return t;
    int i = arity - 1;
    while (i >= 0 && ++t[i] == n) t[i--] = 0;
    if (i < 0) return std::nullopt;
  }
}

}  // namespace sbci::detail
