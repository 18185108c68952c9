#pragma once

// Brute-force definitions written straight from the axiom statements,
// independent of the shared law templates.

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "sbci/algebra.hpp"

namespace oracle {

using sbci::Elem;
using sbci::FiniteAlgebra;
using sbci::Table;

inline bool forall1(std::size_t n, const std::function<bool(Elem)>& f) {
  for (Elem x = 0; x < n; ++x)
    if (!f(x)) return false;
  return true;
}
inline bool forall2(std::size_t n, const std::function<bool(Elem, Elem)>& f) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!f(x, y)) return false;
  return true;
}
inline bool forall3(std::size_t n, const std::function<bool(Elem, Elem, Elem)>& f) {
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (!f(x, y, z)) return false;
  return true;
}

struct Ops {
  const Table& a;
  const Table& d;
  Elem t;
  std::size_t n;
  explicit Ops(const FiniteAlgebra& alg)
      : a(alg.arrow()), d(alg.double_arrow()), t(alg.top()), n(alg.size()) {}
  Elem i(Elem x, Elem y) const { return a(x, y); }
  Elem di(Elem x, Elem y) const { return d(x, y); }
  bool le(Elem x, Elem y) const { return a(x, y) == t; }
  bool wb(Elem x, Elem y) const { return d(x, y) == t; }
};

inline bool c1(const FiniteAlgebra& g) {
  Ops o(g);
  return forall3(o.n, [&](Elem x, Elem y, Elem z) {
    return o.i(o.i(y, z), o.i(o.i(z, x), o.i(y, x))) == o.t;
  });
}
inline bool c2(const FiniteAlgebra& g) {
  Ops o(g);
  return forall2(o.n, [&](Elem x, Elem y) { return o.i(x, o.i(o.i(x, y), y)) == o.t; });
}
inline bool c3(const FiniteAlgebra& g) {
  Ops o(g);
  return forall1(o.n, [&](Elem x) { return o.i(x, x) == o.t; });
}
inline bool c4(const FiniteAlgebra& g) {
  Ops o(g);
  return forall2(o.n, [&](Elem x, Elem y) { return !(o.le(x, y) && o.le(y, x)) || x == y; });
}
inline bool bci(const FiniteAlgebra& g) { return c1(g) && c2(g) && c3(g) && c4(g); }
inline bool bck(const FiniteAlgebra& g) {
  Ops o(g);
  return forall1(o.n, [&](Elem x) { return o.le(x, o.t); });
}

// SBCI1-7 with ->> as d and -> as a.
inline bool sbci(const FiniteAlgebra& g) {
  Ops o(g);
  return forall3(o.n,
                 [&](Elem x, Elem y, Elem z) {
                   return o.di(x, o.di(y, z)) == o.di(y, o.di(x, z)) &&
                          o.i(x, o.i(y, z)) == o.i(y, o.i(x, z)) &&
                          o.le(o.di(x, y), o.i(o.di(z, x), o.di(z, y))) &&
                          (!(o.wb(x, y) && o.le(y, z)) || o.wb(x, z)) &&
                          (!(o.le(x, y) && o.wb(y, z)) || o.wb(x, z));
                 }) &&
         forall1(o.n, [&](Elem x) { return o.di(o.t, x) == x; }) &&
         forall2(o.n, [&](Elem x, Elem y) { return !(o.le(x, y) && o.le(y, x)) || x == y; });
}

// Greatest lower bound by search over all elements.
inline std::optional<Elem> glb(const FiniteAlgebra& g, Elem x, Elem y) {
  Ops o(g);
  std::optional<Elem> best;
  for (Elem c = 0; c < o.n; ++c) {
    if (!o.le(c, x) || !o.le(c, y)) continue;
    bool greatest = true;
    for (Elem d = 0; d < o.n; ++d) {
      if (o.le(d, x) && o.le(d, y) && !o.le(d, c)) greatest = false;
    }
    if (greatest) best = c;
  }
  return best;
}

inline Table random_table(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  Table t(n);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) t.at(x, y) = pick(rng);
  return t;
}

// Calls f on every n x n table.
inline void all_tables(std::size_t n, const std::function<void(const Table&)>& f) {
  std::vector<Elem> cells(n * n, 0);
  while (true) {
    f(Table(n, cells));
    std::size_t i = cells.size();
    while (i > 0 && ++cells[i - 1] == n) cells[--i] = 0;
    if (i == 0) return;
  }
}

}  // namespace oracle
