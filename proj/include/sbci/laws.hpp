#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

// Universally quantified laws, each written once against an abstract model.
//
// A model M supplies
//   using Val, Bool;
//   Val  imp(Val, Val);   // ->
//   Val  dimp(Val, Val);  // ->>
//   Val  top();
//   Bool eq(Val, Val);
//   Bool le(Val, Val);    // x -> y == top
//   Bool wb(Val, Val);    // x ->> y == top
//   Bool implies(Bool, Bool), both(Bool, Bool), iff(Bool, Bool);
//
// The same definitions are then evaluated on complete finite tables, on
// partially filled tables during model search (three-valued), on scalar
// grid points, and on SIMD batches of grid points.

namespace sbci::laws {

enum class Law : std::uint8_t {
  // BCI in ->-form
  C1, C2, C3, C4,
  BCK,
  // theorems of BCI
  A1, A2, A3, A4, A5, A6, A7, A8, A9, A10, A11,
  // semi-BCI
  SBCI1, SBCI2, SBCI3, SBCI4, SBCI5, SBCI6, SBCI7,
  SBCI8, SBCI9, SBCI10, SBCI11, SBCI12, SBCI13, SBCI14, SBCI15, SBCI16,
  SBCI17, SBCI18,
  SBCK,
  // pseudo-BCI; -> of the pseudo structure is ->>, ~> is ->, and the
  // order is the one derived from ->
  PB1, PB2, PB3, PB4, PB5, PB6, PB7,
  // auxiliary-relation properties of the pair (<<, <=)
  WB1, WB2,
};

inline constexpr std::size_t kLawCount = static_cast<std::size_t>(Law::WB2) + 1;

struct LawInfo {
  Law law;
  std::string_view id;
  int arity;
  /// True when the law reads ->> (so single-operation algebras default it).
  bool uses_double_arrow;
};

inline constexpr std::array<LawInfo, kLawCount> kLawInfo{{
    {Law::C1, "C-1", 3, false},
    {Law::C2, "C-2", 2, false},
    {Law::C3, "C-3", 1, false},
    {Law::C4, "C-4", 2, false},
    {Law::BCK, "BCK", 1, false},
    {Law::A1, "A-1", 1, false},
    {Law::A2, "A-2", 3, false},
    {Law::A3, "A-3", 3, false},
    {Law::A4, "A-4", 3, false},
    {Law::A5, "A-5", 3, false},
    {Law::A6, "A-6", 3, false},
    {Law::A7, "A-7", 3, false},
    {Law::A8, "A-8", 1, false},
    {Law::A9, "A-9", 2, false},
    {Law::A10, "A-10", 2, false},
    {Law::A11, "A-11", 2, false},
    {Law::SBCI1, "SBCI1", 3, true},
    {Law::SBCI2, "SBCI2", 3, false},
    {Law::SBCI3, "SBCI3", 3, true},
    {Law::SBCI4, "SBCI4", 1, true},
    {Law::SBCI5, "SBCI5", 3, true},
    {Law::SBCI6, "SBCI6", 3, true},
    {Law::SBCI7, "SBCI7", 2, false},
    {Law::SBCI8, "SBCI8", 3, true},
    {Law::SBCI9, "SBCI9", 2, true},
    {Law::SBCI10, "SBCI10", 3, true},
    {Law::SBCI11, "SBCI11", 1, false},
    {Law::SBCI12, "SBCI12", 1, false},
    {Law::SBCI13, "SBCI13", 2, true},
    {Law::SBCI14, "SBCI14", 2, true},
    {Law::SBCI15, "SBCI15", 2, false},
    {Law::SBCI16, "SBCI16", 2, true},
    {Law::SBCI17, "SBCI17", 3, true},
    {Law::SBCI18, "SBCI18", 3, true},
    {Law::SBCK, "SBCK", 1, true},
    {Law::PB1, "PB-1", 3, true},
    {Law::PB2, "PB-2", 3, true},
    {Law::PB3, "PB-3", 2, true},
    {Law::PB4, "PB-4", 2, true},
    {Law::PB5, "PB-5", 1, false},
    {Law::PB6, "PB-6", 2, false},
    {Law::PB7, "PB-7", 2, true},
    {Law::WB1, "WB-1", 2, true},
    {Law::WB2, "WB-2", 4, true},
}};

constexpr const LawInfo& info(Law law) { return kLawInfo[static_cast<std::size_t>(law)]; }

template <class M>
typename M::Bool evaluate(Law law, M& m, std::span<const typename M::Val> v) {
  auto a = [&] { return v[0]; };
  auto b = [&] { return v[1]; };
  auto c = [&] { return v[2]; };
  switch (law) {
    // x=a, y=b, z=c throughout
    case Law::C1: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.eq(m.imp(m.imp(y, z), m.imp(m.imp(z, x), m.imp(y, x))), m.top());
    }
    case Law::C2: {
      auto [x, y] = std::array{a(), b()};
      return m.eq(m.imp(x, m.imp(m.imp(x, y), y)), m.top());
    }
    case Law::C3:
      return m.eq(m.imp(a(), a()), m.top());
    case Law::C4:
    case Law::SBCI7:
    case Law::PB6: {
      auto [x, y] = std::array{a(), b()};
      return m.implies(m.both(m.le(x, y), m.le(y, x)), m.eq(x, y));
    }
    case Law::BCK:
      return m.le(a(), m.top());
    case Law::A1:
    case Law::SBCI11:
      return m.implies(m.le(m.top(), a()), m.eq(a(), m.top()));
    case Law::A2: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.le(x, y), m.le(m.imp(y, z), m.imp(x, z)));
    }
    case Law::A3: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.le(x, y), m.le(m.imp(z, x), m.imp(z, y)));
    }
    case Law::A4: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.both(m.le(x, y), m.le(y, z)), m.le(x, z));
    }
    case Law::A5:
    case Law::SBCI2: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.eq(m.imp(x, m.imp(y, z)), m.imp(y, m.imp(x, z)));
    }
    case Law::A6: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.le(x, m.imp(y, z)), m.le(y, m.imp(x, z)));
    }
    case Law::A7: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.le(m.imp(x, y), m.imp(m.imp(z, x), m.imp(z, y)));
    }
    case Law::A8:
      return m.eq(m.imp(m.top(), a()), a());
    case Law::A9: {
      auto [x, y] = std::array{a(), b()};
      return m.eq(m.imp(m.imp(m.imp(y, x), x), x), m.imp(y, x));
    }
    case Law::A10: {
      auto [x, y] = std::array{a(), b()};
      return m.le(m.imp(x, y), m.imp(m.imp(y, x), m.top()));
    }
    case Law::A11: {
      auto [x, y] = std::array{a(), b()};
      return m.eq(m.imp(m.imp(x, y), m.top()),
                  m.imp(m.imp(x, m.top()), m.imp(y, m.top())));
    }
    case Law::SBCI1: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.eq(m.dimp(x, m.dimp(y, z)), m.dimp(y, m.dimp(x, z)));
    }
    case Law::SBCI3: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.le(m.dimp(x, y), m.imp(m.dimp(z, x), m.dimp(z, y)));
    }
    case Law::SBCI4:
      return m.eq(m.dimp(m.top(), a()), a());
    case Law::SBCI5: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.both(m.wb(x, y), m.le(y, z)), m.wb(x, z));
    }
    case Law::SBCI6: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.both(m.le(x, y), m.wb(y, z)), m.wb(x, z));
    }
    case Law::SBCI8: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.both(m.wb(x, y), m.wb(y, z)), m.wb(x, z));
    }
    case Law::SBCI9: {
      auto [x, y] = std::array{a(), b()};
      return m.implies(m.both(m.wb(x, y), m.wb(y, x)), m.eq(x, y));
    }
    case Law::SBCI10: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.le(m.dimp(y, z), m.imp(m.dimp(z, x), m.dimp(y, x)));
    }
    case Law::SBCI12:
    case Law::PB5:
      return m.le(a(), a());
    case Law::SBCI13:
    case Law::WB1: {
      auto [x, y] = std::array{a(), b()};
      return m.implies(m.wb(x, y), m.le(x, y));
    }
    case Law::SBCI14: {
      auto [x, y] = std::array{a(), b()};
      return m.le(m.dimp(x, y), m.imp(x, y));
    }
    case Law::SBCI15: {
      auto [x, y] = std::array{a(), b()};
      return m.eq(m.imp(x, m.imp(m.imp(x, y), y)), m.top());
    }
    case Law::SBCI16: {
      auto [x, y] = std::array{a(), b()};
      return m.implies(m.wb(x, y), m.eq(m.dimp(x, m.dimp(m.dimp(x, y), y)), m.top()));
    }
    case Law::SBCI17: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.wb(x, y), m.le(m.dimp(z, x), m.dimp(z, y)));
    }
    case Law::SBCI18: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.implies(m.wb(x, y), m.le(m.dimp(y, z), m.dimp(x, z)));
    }
    case Law::SBCK:
      return m.wb(a(), m.top());
    case Law::PB1: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.le(m.dimp(x, y), m.imp(m.dimp(y, z), m.dimp(x, z)));
    }
    case Law::PB2: {
      auto [x, y, z] = std::array{a(), b(), c()};
      return m.le(m.imp(x, y), m.dimp(m.imp(y, z), m.imp(x, z)));
    }
    case Law::PB3: {
      auto [x, y] = std::array{a(), b()};
      return m.le(x, m.imp(m.dimp(x, y), y));
    }
    case Law::PB4: {
      auto [x, y] = std::array{a(), b()};
      return m.le(x, m.dimp(m.imp(x, y), y));
    }
    case Law::PB7: {
      auto [x, y] = std::array{a(), b()};
      return m.iff(m.wb(x, y), m.le(x, y));
    }
    case Law::WB2: {
      // u <= x << y <= z  implies  u << z
      auto u = v[0], x = v[1], y = v[2], z = v[3];
      return m.implies(m.both(m.both(m.le(u, x), m.wb(x, y)), m.le(y, z)), m.wb(u, z));
    }
  }
  return m.eq(m.top(), m.top());
}

}  // namespace sbci::laws
