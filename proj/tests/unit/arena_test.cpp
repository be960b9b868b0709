#include <doctest.h>

#include <numeric>
#include <random>

#include "klyachko/characters/modular_arena.hpp"
#include "klyachko/characters/modular_linalg.hpp"
#include "klyachko/error.hpp"
#include "klyachko/groups/finite_field.hpp"

using namespace klyachko;

TEST_CASE("arena prime is the least admissible one") {
  struct Case {
    std::uint64_t order, exponent;
    int p;
    std::uint64_t ell;
  };
  // (2,2): m = lcm(6, 2) = 6, least prime = 1 mod 6 above 12 is 13.
  // (2,3): m = lcm(24, 3) = 24, above 96: 97.
  for (Case c : {Case{6, 6, 2, 13}, Case{48, 24, 3, 97}, Case{168, 84, 2, 337}}) {
    const ModularArena a = ModularArena::make(c.order, c.exponent, c.p);
    CHECK(a.ell() == c.ell);
    const std::uint64_t m = std::lcm(c.exponent, static_cast<std::uint64_t>(c.p));
    CHECK(a.root_order() == m);
    CHECK(multiplicative_order(a.zeta_m(), a.ell()) == m);
    CHECK(multiplicative_order(a.zeta_p(), a.ell()) == static_cast<std::uint64_t>(c.p));
    CHECK(a.pow(a.zeta_m(), m / c.p) == a.zeta_p());
  }
}

TEST_CASE("arena override validation") {
  CHECK(ModularArena::make(48, 24, 3, 193).ell() == 193);
  for (std::uint64_t bad : {73ULL, 95ULL, 49ULL, 101ULL}) {
    try {
      ModularArena::make(48, 24, 3, bad);
      FAIL("expected ArenaTooSmall for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ArenaTooSmall);
    }
  }
}

TEST_CASE("arena arithmetic and lifts") {
  const ModularArena a = ModularArena::make(48, 24, 3);
  for (long long v = -48; v <= 48; ++v) CHECK(a.lift(a.from_int(v)) == v);
  for (Residue x = 1; x < a.ell(); ++x) CHECK(a.mul(x, a.inv(x)) == 1);
  CHECK(a.add(a.ell() - 1, 1) == 0);
  CHECK(a.sub(0, 1) == a.ell() - 1);
  CHECK(primitive_root(13) == 2);
  CHECK(primitive_root(97) == 5);
}

TEST_CASE("characteristic polynomial, roots and kernel") {
  const ModularArena z = ModularArena::make(48, 24, 3);  // ell = 97
  // Upper triangular with diagonal 1, 2, 3: char poly (x-1)(x-2)(x-3).
  ModMatrix m(3);
  m(0, 0) = 1, m(0, 1) = 5, m(0, 2) = 7;
  m(1, 1) = 2, m(1, 2) = 11;
  m(2, 2) = 3;
  const ModPoly cp = characteristic_polynomial(z, m);
  CHECK(cp == ModPoly{z.from_int(-6), 11, z.from_int(-6), 1});
  std::mt19937_64 rng(1);
  auto roots = distinct_roots(z, cp, rng);
  REQUIRE(roots.has_value());
  std::sort(roots->begin(), roots->end());
  CHECK(*roots == std::vector<Residue>{1, 2, 3});
  // Repeated root is refused.
  CHECK_FALSE(distinct_roots(z, ModPoly{1, z.from_int(-2), 1}, rng).has_value());
  // x^2 + 1 has no roots mod 97? 97 = 1 mod 4, so it splits; x^2 - 5 does not (5 is a non-residue).
  CHECK(distinct_roots(z, ModPoly{1, 0, 1}, rng).has_value());
  CHECK_FALSE(distinct_roots(z, ModPoly{z.from_int(-5), 0, 1}, rng).has_value());

  ModMatrix shifted = m;
  for (int i = 0; i < 3; ++i) shifted(i, i) = z.sub(shifted(i, i), 2);
  const auto ker = kernel(z, shifted);
  REQUIRE(ker.size() == 1);
  for (std::size_t i = 0; i < 3; ++i) {
    Residue s = 0;
    for (std::size_t j = 0; j < 3; ++j) s = z.add(s, z.mul(shifted(i, j), ker[0][j]));
    CHECK(s == 0);
  }
}
