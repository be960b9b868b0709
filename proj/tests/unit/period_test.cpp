#include <doctest.h>

#include <cmath>

#include "klyachko/eisenstein/period.hpp"

using namespace klyachko;
using E = PeriodExpression;

TEST_CASE("printed period formulas") {
  CHECK(to_string(period_formula(1)) == "Alpha/Res");
  CHECK(to_string(period_formula(2)) == "L(2)/Res");
  CHECK(to_string(period_formula(3)) == "(Alpha/Res)*(L(2)/L(3))");
  CHECK(to_string(period_formula(4)) == "L(2)*L(4)/(Res*L(3))");
  CHECK(to_string(period_formula(5)) == "(Alpha/Res)*(L(2)/L(3))*(L(4)/L(5))");
  CHECK(to_string(period_formula(6)) == "L(2)*L(4)*L(6)/(Res*L(3)*L(5))");
  CHECK(to_string(period_formula(8)) == "L(2)*L(4)*L(6)*L(8)/(Res*L(3)*L(5)*L(7))");
  CHECK_THROWS_AS(period_formula(0), Error);
}

TEST_CASE("period trees") {
  CHECK(period_formula(2) == E::quotient(E::lval(2), E::residue()));
  CHECK(period_formula(4) ==
        E::quotient(E::product({E::lval(2), E::lval(4)}), E::product({E::residue(), E::lval(3)})));
  CHECK(period_formula(3) ==
        E::product({E::quotient(E::alpha(), E::residue()), E::quotient(E::lval(2), E::lval(3))}));
}

TEST_CASE("components") {
  CHECK(to_string(norm_constant(2)) == "L(2)/Res");
  CHECK(to_string(norm_constant(4)) == "L(2)*L(3)*L(4)/Res^3");
  CHECK(to_string(intertwining_eigenvalue(5)) == "Res/L(5)");
  CHECK(to_string(symplectic_residual_period(1)) == "1/1");
  CHECK(to_string(symplectic_residual_period(3)) == "Res^2/(L(3)*L(5))");
  CHECK_THROWS_AS(intertwining_eigenvalue(4), Error);
  CHECK_THROWS_AS(norm_constant(1), Error);
}

TEST_CASE("odd formulas agree with the assembled derivation") {
  for (int t = 3; t <= 21; t += 2) {
    CAPTURE(t);
    const Monomial derived = to_monomial(odd_period_from_components(t));
    const Monomial stated = to_monomial(period_formula(t));
    CHECK(derived == stated);
    CHECK(stated.exponents.at("Res") == -1);
    CHECK(stated.exponents.at("Alpha") == 1);
  }
}

TEST_CASE("monomials") {
  const Monomial m = to_monomial(E::quotient(E::power(E::lval(2), 3), E::abs_square(E::lval(2))));
  CHECK(m.exponents == std::map<std::string, int>{{"L(2)", 1}});
  const Monomial c = to_monomial(E::product({E::number(Rational(2, 3)), E::power(E::number(3), -2)}));
  CHECK(c.coefficient == Rational(2, 27));
  CHECK(c.exponents.empty());
  CHECK(to_monomial(E::quotient(E::residue(), E::residue())).exponents.empty());
}

TEST_CASE("exact evaluation") {
  for (int t = 1; t <= 12; ++t) {
    const E f = period_formula(t);
    AtomAssignment<Rational> ones{{"Res", 1}, {"Alpha", 1}};
    for (int j = 2; j <= t + 1; ++j) ones["L(" + std::to_string(j) + ")"] = 1;
    CHECK(evaluate_period(f, ones) == kOne);
  }
  AtomAssignment<Rational> v{{"L(2)", Rational(3, 2)}, {"L(3)", 5}, {"L(4)", Rational(-1, 3)}, {"Res", 2}};
  CHECK(evaluate_period(period_formula(4), v) == Rational(-1, 20));
  CHECK(evaluate_period(E::power(E::residue(), -2), v) == Rational(1, 4));
  CHECK(evaluate_period(E::abs_square(E::lval(4)), v) == Rational(1, 9));
}

TEST_CASE("evaluation errors") {
  try {
    evaluate_period<double>(period_formula(3), {{"L(2)", 1.0}, {"L(3)", 1.0}, {"Res", 1.0}});
    FAIL("missing Alpha accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingAtom);
  }
  try {
    evaluate_period<Rational>(period_formula(2), {{"L(2)", 1}, {"Res", 0}});
    FAIL("zero denominator accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DivisionByZero);
  }
  CHECK_THROWS_AS(evaluate_period<double>(E::power(E::residue(), -1), {{"Res", 0.0}}), Error);
}

TEST_CASE("floating evaluation") {
  const double v = evaluate_period<double>(period_formula(4), {{"L(2)", 2.0}, {"L(3)", 4.0}, {"L(4)", 3.0}, {"Res", 0.5}});
  CHECK(v == doctest::Approx(3.0));
  CHECK(evaluate_period<double>(E::number(Rational(1, 4)), {}) == 0.25);
}

TEST_CASE("JSON round trip") {
  for (int t = 1; t <= 8; ++t) CHECK(period_from_json(to_json(period_formula(t))) == period_formula(t));
  const E mixed = E::product({E::power(E::residue(), -3), E::abs_square(E::alpha()), E::number(Rational(-2, 7))});
  CHECK(period_from_json(to_json(mixed)) == mixed);
  const auto j = to_json(period_formula(2));
  CHECK(j["kind"] == "quotient");
  CHECK(j["children"][0]["atom"] == "L(2)");
  CHECK_THROWS_AS(period_from_json({{"kind", "quotient"}, {"children", nlohmann::json::array()}}), Error);
}
