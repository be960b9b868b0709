#include <doctest.h>

#include <random>

#include "klyachko/error.hpp"
#include "klyachko/segments/param_parser.hpp"

using namespace klyachko;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_parameter(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for '" << text << "'");
  return 0;
}

}  // namespace

TEST_CASE("kappa of the documented parameters") {
  const TadicParameter a = parse_parameter("U(rho:1,1,3)@0");
  CHECK(a.n() == 3);
  CHECK(kappa(a) == KlyachkoType{1, 1, 3});
  CHECK(model_name(kappa(a)) == "H_{1,2} with psi_1");

  const TadicParameter b = parse_parameter("U(rho:1,1,2)@0");
  CHECK(kappa(b) == KlyachkoType{0, 1, 2});

  const TadicParameter c = parse_parameter("U(a:1,1,1)@0 x U(b:1,1,1)@0");
  CHECK(kappa(c) == KlyachkoType{2, 0, 2});

  const TadicParameter d = parse_parameter("U(rho:1,1,3)@0 x P(U(rho:1,2,2),1/4)");
  CHECK(d.n() == 11);
  CHECK(kappa(d) == KlyachkoType{1, 5, 11});
  CHECK(validate_unitary(d));
}

TEST_CASE("syntax details") {
  const TadicParameter spaced = parse_parameter("  U( rho : 2 , 1 , 3 ) @ -1/2 x U(rho~:2,1,1)  ");
  REQUIRE(spaced.blocks().size() == 2);
  CHECK(spaced == parse_parameter("U(rho:2,1,3)@-1/2xU(rho~:2,1,1)@0"));
  CHECK(spaced.blocks()[1].block.rho.dual);
  CHECK(spaced.blocks()[0].block.alpha == Rational(-1, 2));
  CHECK(parse_parameter("U(x_1:1,1,1)").blocks()[0].block.alpha == kZero);
  // Negative twists of paired blocks are folded to the positive one.
  CHECK(parse_parameter("P(U(r:1,1,1),-1/3)") == parse_parameter("P(U(r:1,1,1),1/3)"));
}

TEST_CASE("printed parameters re-parse to equal ones") {
  for (const char* text : {"U(rho:1,1,3)@0 x P(U(rho:1,2,2),1/4)", "U(a:1,1,1)@0 x U(b:1,1,1)@0",
                           "U(rho~:3,2,5)@7/3", "P(U(s:2,1,4),1/5) x U(s~:2,3,1)@-2"}) {
    CAPTURE(text);
    const TadicParameter p = parse_parameter(text);
    CHECK(parse_parameter(to_string(p)) == p);
    CHECK(to_string(parse_parameter(to_string(p))) == to_string(p));
  }
  CHECK(to_string(parse_parameter("P(U(rho:1,2,2),1/4) x U(rho:1,1,3)")) ==
        "U(rho:1,1,3)@0 x P(U(rho:1,2,2),1/4)");

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> small(1, 5), num(-6, 6), den(1, 6), coin(0, 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::string text;
    const int blocks = small(rng);
    for (int i = 0; i < blocks; ++i) {
      if (i) text += " x ";
      const std::string name = coin(rng) ? "rho" : "sigma~";
      const std::string core = "U(" + name + ":" + (name == "rho" ? "1" : "2") + "," +
                               std::to_string(small(rng)) + "," + std::to_string(small(rng)) + ")";
      const std::string alpha = std::to_string(num(rng)) + "/" + std::to_string(den(rng));
      text += coin(rng) ? "P(" + core + "," + alpha + ")" : core + "@" + alpha;
    }
    const TadicParameter p = parse_parameter(text);
    REQUIRE(parse_parameter(to_string(p)) == p);
  }
}

TEST_CASE("parse errors carry a position") {
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("   ") == 3);
  CHECK(parse_error_position("V(rho:1,1,1)") == 0);
  CHECK(parse_error_position("U(rho:0,1,1)") == 6);
  CHECK(parse_error_position("U(rho:1,0,1)") == 8);
  CHECK(parse_error_position("U(rho:1,1,0)") == 10);
  CHECK(parse_error_position("U(1rho:1,1,1)") == 2);
  CHECK(parse_error_position("U(rho:1,1,1)@1/0") == 15);
  CHECK(parse_error_position("U(rho:1,1,1)@") == 13);
  CHECK(parse_error_position("U(rho:1,1,1) U(rho:1,1,1)") == 13);
  CHECK(parse_error_position("U(rho:1,1,1) x") == 14);
  CHECK(parse_error_position("P(U(rho:1,1,1))") == 14);
  CHECK(parse_error_position("U(rho:1,1,1") == 11);
}

TEST_CASE("one label, one degree") {
  try {
    parse_parameter("U(rho:1,1,1) x U(rho:2,1,1)");
    FAIL("expected DegreeMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeMismatch);
  }
  CHECK_THROWS_AS(parse_parameter("U(rho:1,1,1) x U(rho~:3,1,1)"), Error);
  CHECK_NOTHROW(parse_parameter("U(rho:2,1,1) x U(rho~:2,1,1)"));
}

TEST_CASE("parameter JSON") {
  const auto j = parameter_to_json(parse_parameter("U(rho:1,1,3)@0 x P(U(rho:1,2,2),1/4)"));
  CHECK(j["n"] == 11);
  CHECK(j["kappa"]["r"] == 1);
  CHECK(j["kappa"]["k"] == 5);
  CHECK(j["model"] == "H_{1,10} with psi_1");
  CHECK(j["dual_model"] == "H'_{10,1} with conj(psi'_1)");
  CHECK(j["unitary_valid"] == true);
  REQUIRE(j["blocks"].size() == 2);
  CHECK(j["blocks"][1]["kind"] == "paired");
  CHECK(j["blocks"][1]["alpha"] == "1/4");
  CHECK(parameter_to_json(parse_parameter("U(rho:1,1,3)@1/2"))["unitary_valid"] == false);
}
