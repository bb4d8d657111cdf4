#include <gtest/gtest.h>

#include "supermod/random.hpp"
#include "supermod/superring.hpp"

using namespace supermod;

namespace {

SuperElement b(const RingPtr& r, unsigned i) { return SuperElement::odd_generator(r, i); }
SuperElement c(const RingPtr& r, long v) { return SuperElement(r, Number(v)); }

RingPtr z6_ring() {
  return make_ring(CoeffRing(NumberDomain::integers_mod(6)), {"xi1", "xi2"});
}

SuperElement pair_sum(const RingPtr& r, unsigned L) {
  SuperElement x(r);
  for (unsigned i = 1; i <= L; ++i)
    for (unsigned j = i + 1; j <= L; ++j) x += b(r, i) * b(r, j);
  return x;
}

}  // namespace

TEST(SuperElement, OneMinusGeneratorInverse) {
  auto r = grassmann_ring(2);
  EXPECT_EQ((c(r, 1) + b(r, 1)) * (c(r, 1) - b(r, 1)), c(r, 1));
}

TEST(SuperElement, OddGeneratorsAnticommute) {
  auto r = z6_ring();
  auto xi1 = SuperElement::generator(r, "xi1"), xi2 = SuperElement::generator(r, "xi2");
  EXPECT_EQ((xi1 * xi2).to_string(), "xi1*xi2");
  EXPECT_EQ(xi2 * xi1, -(xi1 * xi2));
  EXPECT_TRUE((xi1 * xi1).is_zero());
  EXPECT_TRUE((xi1 * xi2 + xi2 * xi1).is_zero());
}

TEST(SuperElement, PairSumSquaredCoefficient) {
  auto r = grassmann_ring(4);
  auto x = pair_sum(r, 4);
  EXPECT_EQ((x * x).coefficient(Monomial{MultiIndex::prefix(4), {}}), Number(2));
}

TEST(SuperElement, PairSumPowersGiveFactorials) {
  auto r = grassmann_ring(10);
  auto x = pair_sum(r, 10);
  SuperElement power = x;
  mpz_class fact = 1;
  for (unsigned n = 1; n <= 5; ++n) {
    if (n > 1) power *= x;
    fact *= n;
    EXPECT_EQ(power.coefficient(Monomial{MultiIndex::prefix(2 * n), {}}), Number(fact)) << n;
  }
}

TEST(SuperElement, GradeSplit) {
  auto r = grassmann_ring(2);
  auto x = c(r, 3) + b(r, 1) + b(r, 1) * b(r, 2);
  auto [x0, x1] = grade_split(x);
  EXPECT_EQ(x0, c(r, 3) + b(r, 1) * b(r, 2));
  EXPECT_EQ(x1, b(r, 1));
  EXPECT_EQ(x0 + x1, x);
  EXPECT_FALSE(x.degree());

  auto z = z6_ring();
  auto xi12 = SuperElement::generator(z, "xi1") * SuperElement::generator(z, "xi2");
  EXPECT_EQ(grade_split(xi12).first, xi12);
  EXPECT_TRUE(grade_split(xi12).second.is_zero());

  auto [e, o] = grade_split(SuperElement(r));
  EXPECT_TRUE(e.is_zero());
  EXPECT_TRUE(o.is_zero());
}

TEST(SuperElement, BodyAndSoul) {
  auto r = grassmann_ring(2);
  auto x = c(r, 3) + (b(r, 1) * b(r, 2)).scaled(Number(2));
  EXPECT_EQ(body(x), Number(3));
  EXPECT_EQ(soul(x), (b(r, 1) * b(r, 2)).scaled(Number(2)));
  EXPECT_EQ(body((c(r, 1) + b(r, 1)) * (c(r, 1) + b(r, 2))), Number(1));
}

TEST(SuperElement, BodyUndefinedWithEvenGenerators) {
  auto r = make_ring(CoeffRing::sphere(NumberDomain::rational(), 1), {"b1"});
  EXPECT_THROW(body(c(r, 1)), Unsupported);
  EXPECT_THROW(soul(c(r, 1)), Unsupported);
}

TEST(SuperElement, Nilpotency) {
  auto r = grassmann_ring(2);
  auto x = b(r, 1) + b(r, 2);
  EXPECT_TRUE(is_nilpotent(x));
  EXPECT_TRUE(pow(x, 3).is_zero());
  EXPECT_FALSE(is_nilpotent(c(r, 1) + b(r, 1)));
  EXPECT_EQ(pow(x, 0), c(r, 1));
}

TEST(SuperElement, RingMismatch) {
  EXPECT_THROW(b(grassmann_ring(2), 1) * b(grassmann_ring(3), 1), RingMismatch);
  // structurally equal rings are the same ring
  EXPECT_NO_THROW(b(grassmann_ring(2), 1) * b(grassmann_ring(2), 2));
}

TEST(SuperElement, CanonicalText) {
  auto r = grassmann_ring(3);
  auto x = b(r, 2) * b(r, 1) + c(r, 2) - b(r, 3).scaled(Number(mpq_class(3, 4)));
  EXPECT_EQ(x.to_string(), "2 - 3/4*b3 - b1*b2");
}

TEST(Involution, GeneratorTable) {
  Involution inv{{{"a", "ad"}, {"eta", "etad"}}, DoubleInvolution::Graded};
  auto r = make_ring(CoeffRing(NumberDomain::gaussian(), {"a", "ad"}), {"eta", "etad"}, inv);
  auto a = SuperElement::generator(r, "a"), ad = SuperElement::generator(r, "ad");
  auto eta = SuperElement::generator(r, "eta"), etad = SuperElement::generator(r, "etad");
  EXPECT_EQ(involute(ad), a);
  EXPECT_EQ(involute(a), ad);
  EXPECT_EQ(involute(eta), etad);
  EXPECT_EQ(involute(etad), -eta);
  // (eta etad)◇ = (-1) etad◇ eta◇ = (-1)(-eta)(etad) = eta etad
  EXPECT_EQ(involute(eta * etad), eta * etad);
  EXPECT_EQ(involute(a * ad), a * ad);
  // conjugate-linear
  EXPECT_EQ(involute(a.scaled(Number::imaginary_unit())), ad.scaled(-Number::imaginary_unit()));
}

TEST(Involution, PlainConventionSquaresToIdentity) {
  Involution inv{{{"eta", "etad"}}, DoubleInvolution::Plain};
  auto r = make_ring(CoeffRing(NumberDomain::gaussian()), {"eta", "etad"}, inv);
  auto eta = SuperElement::generator(r, "eta");
  EXPECT_EQ(involute(involute(eta)), eta);
}

TEST(Involution, MissingTable) {
  EXPECT_THROW(involute(b(grassmann_ring(1), 1)), Unsupported);
}

TEST(InvolutionProperty, ProductRuleAndDoubleSign) {
  Involution inv{{{"a", "ad"}, {"eta", "etad"}, {"th", "thd"}}, DoubleInvolution::Graded};
  auto r = make_ring(CoeffRing(NumberDomain::gaussian(), {"a", "ad"}), {"eta", "etad", "th", "thd"},
                     inv);
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Parity px = rng.coin() ? Parity::Odd : Parity::Even;
    const Parity py = rng.coin() ? Parity::Odd : Parity::Even;
    auto x = random_element(rng, r, px), y = random_element(rng, r, py);
    EXPECT_EQ(involute(x * y), (involute(y) * involute(x)).scaled(Number(koszul_sign(px, py))));
    EXPECT_EQ(involute(involute(x)), px == Parity::Odd ? -x : x);
  }
}

class SuperLaws : public ::testing::TestWithParam<int> {};

TEST_P(SuperLaws, RandomHomogeneousTriples) {
  std::vector<RingPtr> rings = {
      grassmann_ring(5), z6_ring(),
      make_ring(CoeffRing::sphere(NumberDomain::rational(), 2), {"b1", "b2"}),
      make_ring(CoeffRing::trig(), {"b1", "b2", "b3"})};
  const auto& r = rings[GetParam()];
  Rng rng(40 + GetParam());
  for (int trial = 0; trial < 100; ++trial) {
    Parity p[3];
    SuperElement v[3] = {SuperElement(r), SuperElement(r), SuperElement(r)};
    for (int k = 0; k < 3; ++k) {
      p[k] = rng.coin() ? Parity::Odd : Parity::Even;
      v[k] = random_element(rng, r, p[k]);
    }
    EXPECT_EQ(v[0] * v[1], (v[1] * v[0]).scaled(Number(koszul_sign(p[0], p[1]))));
    EXPECT_EQ((v[0] * v[1]) * v[2], v[0] * (v[1] * v[2]));
    EXPECT_EQ(v[0] * (v[1] + v[2]), v[0] * v[1] + v[0] * v[2]);
    EXPECT_TRUE((v[0] * v[1]).has_parity(p[0] + p[1]));
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, SuperLaws, ::testing::Values(0, 1, 2, 3));

TEST(SuperElementProperty, BodyIsAHomomorphism) {
  auto r = grassmann_ring(5);
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_element(rng, r), y = random_element(rng, r);
    EXPECT_EQ(body(x * y), body(x) * body(y));
    EXPECT_EQ(body(x + y), body(x) + body(y));
  }
}

TEST(SuperElementProperty, SoulPowerVanishes) {
  for (unsigned L : {1u, 3u, 5u}) {
    auto r = grassmann_ring(L);
    Rng rng(L);
    for (int trial = 0; trial < 30; ++trial) {
      auto x = random_element(rng, r, std::nullopt, RandomSpec{6, 0, 5, 2});
      EXPECT_TRUE(pow(soul(x), L + 1).is_zero());
    }
  }
}
