#include <doctest.h>

#include <numeric>

#include "klyachko/error.hpp"
#include "klyachko/groups/group_table.hpp"

using namespace klyachko;

TEST_CASE("order formula") {
  CHECK(*gl_order(2, 2) == 6);
  CHECK(*gl_order(2, 3) == 48);
  CHECK(*gl_order(2, 7) == 2016);
  CHECK(*gl_order(3, 3) == 11232);
  CHECK(*gl_order(4, 2) == 20160);
  CHECK_FALSE(gl_order(8, 16).has_value());
}

TEST_CASE("class invariants") {
  for (auto [n, q] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {2, 7}}) {
    CAPTURE(n);
    CAPTURE(q);
    const GroupTable g = make_group_table(n, FiniteField::of_order(q));
    std::uint64_t total = 0;
    std::uint64_t exponent = 1;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      const ConjClass& cl = g.classes()[c];
      total += cl.size;
      CHECK(g.order() % cl.size == 0);
      CHECK(g.classes()[cl.inverse_class].inverse_class == c);
      CHECK(g.class_of(cl.representative) == c);
      // representative is the least element of its class
      const auto rep_index = *g.index_of(cl.representative);
      for (std::size_t i = 0; i < rep_index; ++i) CHECK(g.class_of(i) != c);
      CHECK(element_order(g.field(), cl.representative) == cl.element_order);
      exponent = std::lcm(exponent, cl.element_order);
    }
    CHECK(total == g.order());
    CHECK(g.exponent() == exponent);
    CHECK(g.classes()[g.identity_class()].size == 1);
    for (std::size_t i = 1; i < g.order(); ++i) CHECK(g.elements()[i - 1] < g.elements()[i]);
  }
}

TEST_CASE("threaded classification agrees with serial") {
  const FiniteField f = FiniteField::of_order(3);
  const GroupTable serial = conjugacy_classes(gl_enumerate(3, f), 1);
  const GroupTable threaded = conjugacy_classes(gl_enumerate(3, f, {kDefaultMaxElements, 3}), 3);
  CHECK(serial.class_index() == threaded.class_index());
  REQUIRE(serial.class_count() == threaded.class_count());
  for (std::size_t c = 0; c < serial.class_count(); ++c) {
    CHECK(serial.classes()[c].representative == threaded.classes()[c].representative);
    CHECK(serial.classes()[c].invariant_factors == threaded.classes()[c].invariant_factors);
  }
}

TEST_CASE("element cap is enforced before enumeration") {
  const FiniteField f = FiniteField::of_order(3);
  try {
    gl_enumerate(3, f, {1000, 1});
    FAIL("expected GroupTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::GroupTooLarge);
  }
  CHECK_THROWS_AS(gl_enumerate(5, FiniteField::of_order(16)), Error);
}
