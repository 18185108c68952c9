#include "sbci/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <vector>

#include "sbci/error.hpp"

namespace sbci {

namespace {

constexpr std::array<std::string_view, 7> kNames{
    "one-element",   "2-chain",          "powerset-of-2",       "gd-fd-chain",
    "perturbed-distributivity", "godel-3-chain", "lukasiewicz-3-chain"};

Table tabulate(std::size_t n, const std::function<Elem(Elem, Elem)>& f) {
  Table t(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) t.at(x, y) = f(x, y);
  }
  return t;
}

// Chain of rationals v/den, ascending; results must land back on the chain.
Table on_chain(const std::vector<int>& vals, int den,
               const std::function<int(int, int, int)>& op) {
  return tabulate(vals.size(), [&](Elem x, Elem y) {
    const int r = op(vals[x], vals[y], den);
    const auto it = std::find(vals.begin(), vals.end(), r);
    if (it == vals.end()) throw InvalidAlgebra("chain is not closed under the operation");
    return static_cast<Elem>(it - vals.begin());
  });
}

int godel(int x, int y, int den) { return x <= y ? den : y; }
int fodor(int x, int y, int den) { return x <= y ? den : std::max(den - x, y); }
int lukasiewicz(int x, int y, int den) { return std::min(den, den - x + y); }

}  // namespace

std::span<const std::string_view> fixture_names() { return kNames; }

FiniteAlgebra fixture(std::string_view name) {
  if (name == "one-element") return FiniteAlgebra(0, Table(1, 0), {}, {"T"});
  if (name == "2-chain") return FiniteAlgebra(0, Table(2, {0, 1, 0, 0}), {}, {"1", "0"});
  if (name == "powerset-of-2") {
    return FiniteAlgebra(0, tabulate(4, [](Elem x, Elem y) { return y & ~x & 3u; }), {},
                         {"{}", "{a}", "{b}", "{a,b}"});
  }
  if (name == "gd-fd-chain") {
    const std::vector<int> vals{0, 4, 5, 10, 15, 16, 20};
    return FiniteAlgebra(6, on_chain(vals, 20, fodor), on_chain(vals, 20, godel),
                         {"0", "1/5", "1/4", "1/2", "3/4", "4/5", "1"});
  }
  if (name == "perturbed-distributivity") {
    // Diamond 0 < a, b < 1 (indices 1 < 2, 3 < 0) with a -> b = b, b -> a = a.
    return FiniteAlgebra(0, Table(4, {0, 1, 2, 3, 0, 0, 0, 0, 0, 1, 0, 3, 0, 1, 2, 0}), {},
                         {"1", "0", "a", "b"});
  }
  if (name == "godel-3-chain") {
    return FiniteAlgebra(2, on_chain({0, 1, 2}, 2, godel), {}, {"0", "1/2", "1"});
  }
  if (name == "lukasiewicz-3-chain") {
    return FiniteAlgebra(2, on_chain({0, 1, 2}, 2, lukasiewicz), {}, {"0", "1/2", "1"});
  }
  throw Error("unknown fixture '" + std::string(name) + "'");
}

}  // namespace sbci
