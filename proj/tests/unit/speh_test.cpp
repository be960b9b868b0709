#include <doctest.h>

#include <random>

#include "klyachko/error.hpp"
#include "klyachko/segments/speh.hpp"

using namespace klyachko;

namespace {

const CuspidalLabel rho{"rho", 1};

SpehBlock block(int deg, int d, int t, Rational alpha = 0) {
  return SpehBlock{CuspidalLabel{"rho", deg}, d, t, alpha};
}

Rational random_alpha(std::mt19937& rng) {
  static const Rational choices[] = {Rational(0), Rational(1, 4), Rational(-1, 4), Rational(1, 2),
                                     Rational(-1, 2)};
  return choices[std::uniform_int_distribution<int>(0, 4)(rng)];
}

TadicParameter random_parameter(std::mt19937& rng) {
  std::uniform_int_distribution<int> count(1, 4), deg(1, 3), dd(1, 3), tt(1, 5), kind(0, 2), name(0, 2);
  static const char* names[] = {"rho", "sigma", "tau"};
  static const int degrees[] = {1, 2, 3};
  std::vector<TadicBlock> blocks;
  const int c = count(rng);
  for (int i = 0; i < c; ++i) {
    const int which = name(rng);
    CuspidalLabel l{names[which], degrees[which]};
    l.dual = kind(rng) == 0;
    const bool paired = kind(rng) == 0;
    blocks.push_back({SpehBlock{l, dd(rng), tt(rng), paired ? Rational(1, 4) : random_alpha(rng)},
                      paired ? BlockKind::Paired : BlockKind::Plain});
  }
  (void)deg;
  return TadicParameter(std::move(blocks));
}

}  // namespace

TEST_CASE("Speh multisegments") {
  CHECK(speh_multisegment(block(1, 1, 1)) == Multisegment({Segment(rho, 0, 0)}));
  const Multisegment two = speh_multisegment(block(1, 2, 2));
  CHECK(two == Multisegment({Segment(rho, -1, 0), Segment(rho, 0, 1)}));
  CHECK(speh_multisegment(block(1, 1, 3, Rational(1, 4))) ==
        Multisegment({Segment(rho, Rational(-3, 4), Rational(5, 4))}));
  CHECK(speh_multisegment(block(2, 3, 4)).degree() == block(2, 3, 4).degree());
  try {
    speh_multisegment(block(1, 1, 0));
    FAIL("expected EmptyBlock");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyBlock);
  }
}

TEST_CASE("highest derivatives of Speh blocks") {
  CHECK(speh_highest_derivative(block(1, 1, 1)) == block(1, 1, 0, Rational(-1, 2)));
  CHECK(speh_highest_derivative(block(1, 1, 4)) == block(1, 1, 3, Rational(-1, 2)));
  const SpehBlock b = block(2, 3, 5);
  CHECK(b.degree() - speh_highest_derivative(b).degree() == b.delta_degree());
  CHECK_THROWS_AS(speh_highest_derivative(block(1, 1, 0)), Error);
}

TEST_CASE("derivative coherence on random blocks") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> deg(1, 4), d(1, 4), t(1, 6);
  for (int trial = 0; trial < 1000; ++trial) {
    const SpehBlock b = block(deg(rng), d(rng), t(rng), random_alpha(rng));
    const Multisegment lhs = derivative_multisegment(speh_multisegment(b));
    const SpehBlock next = speh_highest_derivative(b);
    const Multisegment rhs = next.t == 0 ? Multisegment{} : speh_multisegment(next);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("highest derivative of a product") {
  const auto one = product_highest_derivative({block(2, 1, 3)});
  CHECK(one.order == 2);
  CHECK(one.blocks == std::vector<SpehBlock>{block(2, 1, 2, Rational(-1, 2))});
  const auto generic = product_highest_derivative({block(1, 1, 1), block(3, 1, 1)});
  CHECK(generic.order == 4);
  CHECK(generic.blocks.empty());
  const std::vector<SpehBlock> mixed{block(1, 2, 3), block(2, 1, 1), block(3, 2, 2, Rational(1, 4))};
  const auto m = product_highest_derivative(mixed);
  int n = 0, rest = 0;
  for (const auto& b : mixed) n += b.degree();
  for (const auto& b : m.blocks) rest += b.degree();
  CHECK(n - m.order == rest);
  CHECK_THROWS_AS(product_highest_derivative({block(1, 1, 0)}), Error);
}

TEST_CASE("kappa") {
  auto single = [](int deg, int d, int t) {
    return TadicParameter({{block(deg, d, t), BlockKind::Plain}});
  };
  CHECK(kappa(single(1, 1, 3)) == KlyachkoType{1, 1, 3});
  CHECK(kappa(single(1, 1, 2)) == KlyachkoType{0, 1, 2});
  CHECK(kappa(single(2, 2, 1)) == KlyachkoType{4, 0, 4});
  // All even: purely symplectic.
  const TadicParameter even({{block(1, 1, 2), BlockKind::Plain}, {block(2, 1, 4), BlockKind::Paired}});
  const KlyachkoType ke = kappa(even);
  CHECK(ke.r == 0);
  CHECK(2 * ke.k == even.n());
  // All t = 1: Whittaker.
  const TadicParameter generic({{block(1, 1, 1), BlockKind::Plain}, {block(3, 2, 1), BlockKind::Paired}});
  CHECK(kappa(generic).k == 0);
  CHECK(kappa(generic).r == generic.n());
  // Paired blocks count twice.
  const TadicParameter pair({{block(1, 1, 3, Rational(1, 4)), BlockKind::Paired}});
  CHECK(kappa(pair) == KlyachkoType{2, 2, 6});
}

TEST_CASE("kappa closed form, contragredient and n = r + 2k") {
  for (int deg = 1; deg <= 6; ++deg)
    for (int d = 1; d <= 4; ++d)
      for (int t = 1; t <= 9; ++t) {
        const TadicParameter p({{block(deg, d, t), BlockKind::Plain}});
        CHECK(kappa(p).k == deg * d * (t / 2));
      }
  std::mt19937 rng(8);
  for (int trial = 0; trial < 1000; ++trial) {
    const TadicParameter p = random_parameter(rng);
    const KlyachkoType k = kappa(p);
    CHECK(k.r + 2 * k.k == p.n());
    CHECK(kappa(contragredient(p)) == k);
    CHECK(contragredient(contragredient(p)) == p);
  }
}

TEST_CASE("contragredient of blocks") {
  CuspidalLabel self{"one", 1};
  self.self_dual = true;
  const TadicParameter plain({{SpehBlock{self, 1, 3, 0}, BlockKind::Plain}});
  CHECK(contragredient(plain) == plain);
  const TadicParameter pair({{block(1, 2, 2, Rational(1, 4)), BlockKind::Paired}});
  const TadicParameter dual = contragredient(pair);
  CHECK(dual.blocks()[0].block.alpha == Rational(1, 4));
  CHECK(dual.blocks()[0].block.rho.dual);
  const TadicParameter twisted({{block(1, 1, 2, Rational(1, 3)), BlockKind::Plain}});
  CHECK(contragredient(twisted).blocks()[0].block.alpha == Rational(-1, 3));
}

TEST_CASE("unitarity gate") {
  auto one = [](Rational a, BlockKind k) { return TadicParameter({{block(1, 1, 3, a), k}}); };
  CHECK(validate_unitary(one(0, BlockKind::Plain)));
  CHECK(validate_unitary(one(Rational(1, 4), BlockKind::Paired)));
  CHECK_FALSE(validate_unitary(one(Rational(1, 2), BlockKind::Paired)));
  CHECK_FALSE(validate_unitary(one(0, BlockKind::Paired)));
  CHECK_FALSE(validate_unitary(one(Rational(1, 4), BlockKind::Plain)));
  // Paired blocks are stored with the positive twist.
  CHECK(one(Rational(-1, 4), BlockKind::Paired) == one(Rational(1, 4), BlockKind::Paired));
}

TEST_CASE("dual model type flips the family only") {
  const KlyachkoType t{1, 1, 3};
  const KlyachkoType d = dual_model_type(t);
  CHECK(d.r == 1);
  CHECK(d.k == 1);
  CHECK(d.family == ModelFamily::HPrime);
  CHECK(dual_model_type(d) == t);
  CHECK(model_name(t) == "H_{1,2} with psi_1");
  CHECK(model_name(d) == "H'_{2,1} with conj(psi'_1)");
  CHECK(model_name(dual_model_type(KlyachkoType{4, 0, 4})) == "H'_{0,4} with conj(psi'_4)");
}
