// Character-theoretic oracles: known tables of small GL_n(F_q), and model
// characters recomputed in complex floating point from a test-local
// description of H_{r,2k} and psi_r.
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "klyachko/characters/character_table.hpp"
#include "klyachko/characters/induced.hpp"
#include "klyachko/groups/klyachko_subgroup.hpp"

using namespace klyachko;

namespace {

struct Setup {
  GroupTable table;
  ModularArena arena;
  CharacterTable chars;
};

Setup setup(int n, int q) {
  const FiniteField f = FiniteField::of_order(q);
  GroupTable t = make_group_table(n, f);
  ModularArena a = ModularArena::make(t.order(), t.exponent(), f.p());
  CharacterTable c = character_table(t, a);
  return {std::move(t), a, std::move(c)};
}

std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// g in H_{r,2k}: u upper unitriangular in the top-left r x r corner, zero
// below it, and the bottom-right 2k x 2k block preserving J with
// J(i, 2k-1-i) = 1, J(k+i, k-1-i) = -1 for i < k.
bool in_h(const FiniteField& f, const MatrixGF& g, int r, int k) {
  const int n = r + 2 * k;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j < r && i > j && g(i, j) != 0) return false;
      if (i < r && i == j && g(i, j) != 1) return false;
    }
  const int m = 2 * k;
  auto J = [&](int i, int j) -> int {
    if (i < k && j == m - 1 - i) return 1;
    if (i >= k && j == m - 1 - i) return f.neg(1);
    return 0;
  };
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int s = 0;
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          const int jij = J(i, j);
          if (jij) s = f.add(s, f.mul(f.mul(g(r + i, r + a), jij), g(r + j, r + b)));
        }
      if (s != J(a, b)) return false;
    }
  return true;
}

std::complex<double> psi(const FiniteField& f, const MatrixGF& g, int r) {
  int s = 0;
  for (int i = 0; i + 1 < r; ++i) s = f.add(s, g(i, i + 1));
  const double angle = 2 * std::numbers::pi * f.trace(s) / f.p();
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

TEST_CASE("GL_2(F_2) is S_3") {
  const Setup s = setup(2, 2);
  REQUIRE(s.chars.characters.size() == 3);
  // Classes by element order: identity, the three involutions, the two 3-cycles.
  std::size_t c1 = 0, c2 = 0, c3 = 0;
  for (std::size_t c = 0; c < s.table.class_count(); ++c) {
    const auto ord = s.table.classes()[c].element_order;
    (ord == 1 ? c1 : ord == 2 ? c2 : c3) = c;
  }
  auto value = [&](std::size_t chi, std::size_t c) { return s.arena.lift(s.chars.characters[chi].values[c]); };
  std::vector<std::array<long long, 3>> rows;
  for (std::size_t i = 0; i < 3; ++i) rows.push_back({value(i, c1), value(i, c2), value(i, c3)});
  std::sort(rows.begin(), rows.end());
  CHECK(rows[0] == std::array<long long, 3>{1, -1, 1});
  CHECK(rows[1] == std::array<long long, 3>{1, 1, 1});
  CHECK(rows[2] == std::array<long long, 3>{2, 0, -1});

  const KlyachkoSubgroupSpec whittaker{2, 0};
  const InducedCharacter w = induced_klyachko_character(s.table, whittaker, s.arena);
  CHECK(s.arena.lift(w.chi.values[c1]) == 3);
  CHECK(s.arena.lift(w.chi.values[c2]) == -1);
  CHECK(s.arena.lift(w.chi.values[c3]) == 0);
}

TEST_CASE("degrees of GL_2(F_q) follow the principal/Steinberg/cuspidal pattern") {
  for (int q : {2, 3, 4, 5}) {
    CAPTURE(q);
    const Setup s = setup(2, q);
    std::vector<std::uint64_t> expected;
    const std::uint64_t Q = q;
    for (std::uint64_t i = 0; i < Q - 1; ++i) expected.push_back(1);
    for (std::uint64_t i = 0; i < Q - 1; ++i) expected.push_back(Q);
    for (std::uint64_t i = 0; i < (Q - 1) * (Q - 2) / 2; ++i) expected.push_back(Q + 1);
    for (std::uint64_t i = 0; i < Q * (Q - 1) / 2; ++i) expected.push_back(Q - 1);
    CHECK(sorted(s.chars.degrees) == sorted(expected));
  }
}

TEST_CASE("degrees of GL_3(F_2) and GL_4(F_2)") {
  CHECK(sorted(setup(3, 2).chars.degrees) == std::vector<std::uint64_t>{1, 3, 3, 6, 7, 8});
  CHECK(sorted(setup(4, 2).chars.degrees) ==
        std::vector<std::uint64_t>{1, 7, 14, 20, 21, 21, 21, 28, 35, 45, 45, 56, 64, 70});
}

TEST_CASE("model characters agree with a complex-valued Frobenius sum") {
  struct Case {
    int n, q;
  };
  for (Case c : {Case{2, 3}, Case{2, 4}, Case{3, 2}, Case{3, 3}}) {
    CAPTURE(c.n);
    CAPTURE(c.q);
    const Setup s = setup(c.n, c.q);
    const FiniteField& f = s.table.field();
    for (int k = 0; 2 * k <= c.n; ++k) {
      const int r = c.n - 2 * k;
      CAPTURE(k);
      std::vector<std::size_t> h;
      for (std::size_t i = 0; i < s.table.order(); ++i)
        if (in_h(f, s.table.element(i), r, k)) h.push_back(i);
      const KlyachkoSubgroupSpec spec{r, k};
      CHECK(h.size() == klyachko_subgroup_order(c.q, spec));

      const InducedCharacter chi = induced_klyachko_character(s.table, spec, s.arena);
      // chi(c) = |C_G(g)| / |H| * sum over h in H cap c of psi(h)
      std::vector<std::complex<double>> sums(s.table.class_count());
      for (auto i : h) sums[s.table.class_of(i)] += psi(f, s.table.element(i), r);
      for (std::size_t cl = 0; cl < s.table.class_count(); ++cl) {
        const double centralizer = double(s.table.order()) / double(s.table.classes()[cl].size);
        const std::complex<double> v = sums[cl] * centralizer / double(h.size());
        CHECK(std::abs(v.imag()) < 1e-9);
        CHECK(std::abs(v.real() - std::round(v.real())) < 1e-9);
        CHECK(s.arena.lift(chi.chi.values[cl]) == std::llround(v.real()));
      }
    }
  }
}

TEST_CASE("Frobenius route and class-sum route give the same induced character") {
  struct Case {
    int n, q;
  };
  for (Case c : {Case{2, 2}, Case{2, 3}, Case{2, 5}, Case{3, 2}, Case{4, 2}}) {
    const Setup s = setup(c.n, c.q);
    for (int k = 0; 2 * k <= c.n; ++k) {
      for (int twist = 1; twist < c.q; ++twist) {
        KlyachkoSubgroupSpec spec{c.n - 2 * k, k, static_cast<FiniteField::Element>(twist)};
        CHECK(induced_klyachko_character(s.table, spec, s.arena).chi ==
              induced_klyachko_character_by_subgroup(s.table, spec, s.arena).chi);
      }
    }
  }
}
