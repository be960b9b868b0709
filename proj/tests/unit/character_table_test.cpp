#include <doctest.h>

#include "klyachko/characters/character_table.hpp"
#include "klyachko/characters/induced.hpp"
#include "klyachko/error.hpp"

using namespace klyachko;

namespace {

struct Setup {
  GroupTable table;
  ModularArena arena;
};

Setup setup(int n, int q) {
  const FiniteField f = FiniteField::of_order(q);
  GroupTable t = make_group_table(n, f);
  ModularArena a = ModularArena::make(t.order(), t.exponent(), f.p());
  return {std::move(t), a};
}

}  // namespace

TEST_CASE("structure constants count products") {
  const Setup s = setup(2, 3);
  const auto a = class_structure_constants(s.table);
  const std::size_t n = s.table.class_count();
  const std::size_t e = s.table.identity_class();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      // x y = 1 has |C_j| solutions when C_i is the inverse class, else none.
      const std::uint64_t expected = (i == s.table.classes()[j].inverse_class) ? s.table.classes()[j].size : 0;
      CHECK(a[(j * n + i) * n + e] == expected);
    }
  }
  // Counting over the identity class: x = 1 forces y = z.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) CHECK(a[(e * n + i) * n + k] == (i == k ? 1u : 0u));
  CHECK(class_structure_constants(s.table, 3) == a);
}

TEST_CASE("character tables are orthogonal, sorted and seed independent") {
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {2, 5}}) {
    CAPTURE(n);
    CAPTURE(q);
    const Setup s = setup(n, q);
    const CharacterTable t = character_table(s.table, s.arena);
    CHECK(t.characters.size() == s.table.class_count());
    CHECK(check_orthogonality(s.table, s.arena, t).all());
    CHECK(t.degrees.front() == 1);
    for (auto v : t.characters.front().values) CHECK(v == 1);
    for (std::size_t i = 1; i < t.degrees.size(); ++i) CHECK(t.degrees[i - 1] <= t.degrees[i]);
    for (std::size_t i = 0; i < t.characters.size(); ++i) {
      CHECK(s.arena.lift(t.characters[i].values[s.table.identity_class()]) ==
            static_cast<long long>(t.degrees[i]));
      CHECK(inner_product(s.table, s.arena, t.characters[i], t.characters[i]) == 1);
    }
    CharacterTableOptions other;
    other.seed = 99;
    other.threads = 2;
    const CharacterTable u = character_table(s.table, s.arena, other);
    CHECK(u.characters == t.characters);
  }
}

TEST_CASE("multiplicity checks its bound") {
  const Setup s = setup(2, 3);
  const CharacterTable t = character_table(s.table, s.arena);
  const InducedCharacter w = induced_klyachko_character(s.table, {2, 0}, s.arena);
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < t.characters.size(); ++i) {
    weighted += t.degrees[i] * multiplicity(s.table, s.arena, t.characters[i], w.chi, w.index);
  }
  CHECK(weighted == w.index);
  // A doubled character has multiplicity 2 against the trivial one only if the bound allows it.
  ClassFunction twice = t.characters[0];
  for (auto& v : twice.values) v = s.arena.add(v, v);
  CHECK(multiplicity(s.table, s.arena, t.characters[0], twice, 2) == 2);
  try {
    multiplicity(s.table, s.arena, t.characters[0], twice, 1);
    FAIL("expected LiftOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LiftOutOfRange);
  }
}
