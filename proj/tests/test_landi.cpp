#include <gtest/gtest.h>

#include "supermod/landi.hpp"

using namespace supermod;

namespace {

SuperElement gen(const RingPtr& r, const char* name) { return SuperElement::generator(r, name); }
Number q(long n, long d = 1) { return Number(mpq_class(mpz_class(n), mpz_class(d))); }

}  // namespace

TEST(UospRing, Relations) {
  auto r = uosp_ring();
  auto a = gen(r, "a"), ad = gen(r, "ad"), b = gen(r, "b"), bd = gen(r, "bd");
  auto eta = gen(r, "eta"), etad = gen(r, "etad");
  EXPECT_EQ(a * ad + b * bd, SuperElement::one(r));
  EXPECT_EQ(ad * a + bd * b, SuperElement::one(r));
  EXPECT_TRUE((eta * eta).is_zero());
  EXPECT_TRUE((etad * etad).is_zero());
  EXPECT_EQ(eta * etad, -(etad * eta));
  EXPECT_EQ(involute(a * ad + b * bd), a * ad + b * bd);
  EXPECT_EQ(involute(eta * etad), eta * etad);
}

TEST(Bra, NEqualsOneComponents) {
  auto bra = make_bra(1);
  auto r = bra.ring;
  auto eta = gen(r, "eta"), etad = gen(r, "etad");
  auto factor = SuperElement::one(r) - (eta * etad).scaled(q(1, 8));
  ASSERT_EQ(bra.even.size(), 2u);
  ASSERT_EQ(bra.odd.size(), 1u);
  EXPECT_EQ(bra.even[0], factor * gen(r, "ad"));
  EXPECT_EQ(bra.even[1], factor * gen(r, "bd"));
  EXPECT_EQ(bra.odd[0], etad.scaled(q(1, 2)));
}

TEST(Bra, NEqualsTwoCarriesSqrt2) {
  auto bra = make_bra(2);
  auto r = bra.ring;
  auto factor = SuperElement::one(r) - (gen(r, "eta") * gen(r, "etad")).scaled(q(1, 8));
  EXPECT_EQ(bra.even[1], (factor * gen(r, "ad") * gen(r, "bd")).scaled(Number::sqrt_of(2)));
  EXPECT_EQ(bra.even[1].to_string(), "sqrt(2)*ad*bd - 1/8*sqrt(2)*ad*bd*eta*etad");
  EXPECT_EQ(bra.odd.size(), 2u);
  EXPECT_THROW(make_bra(0), PreconditionError);
}

TEST(Inner, EqualsOneForSmallN) {
  for (unsigned n = 1; n <= 3; ++n) {
    auto bra = make_bra(n);
    EXPECT_EQ(inner(bra), SuperElement::one(bra.ring)) << n;
  }
}

TEST(Inner, EvenBlockOnly) {
  auto r = uosp_ring();
  BraVector bra{1, r, {gen(r, "ad"), gen(r, "bd")}, {SuperElement(r)}};
  EXPECT_EQ(inner(bra), SuperElement::one(r));
}

TEST(Inner, OtherOrderAndOtherConventionMissTheGate) {
  // the graded sign on (etad)^involuted is what cancels the even-block defect
  auto bra = make_bra(1);
  auto r = bra.ring;
  auto eta_etad = gen(r, "eta") * gen(r, "etad");
  EXPECT_EQ(inner_conjugate_first(bra), SuperElement::one(r) - eta_etad.scaled(q(1, 2)));
  auto plain = make_bra(1, DoubleInvolution::Plain);
  auto pr = plain.ring;
  EXPECT_EQ(inner(plain),
            SuperElement::one(pr) - (gen(pr, "eta") * gen(pr, "etad")).scaled(q(1, 4)));
  EXPECT_FALSE(landi_report(1, 1, 2, DoubleInvolution::Plain).pass());
}

TEST(Projector, TopLeftEntry) {
  auto bra = make_bra(1);
  auto r = bra.ring;
  auto p = projector_p(bra);
  EXPECT_EQ(p.source(), (FreeType{2, 1}));
  // (1 - 1/8 eta etad)^2 = 1 - 1/4 eta etad
  auto expected = (SuperElement::one(r) - (gen(r, "eta") * gen(r, "etad")).scaled(q(1, 4))) *
                  gen(r, "a") * gen(r, "ad");
  EXPECT_EQ(p.at(0, 0), expected);
}

TEST(Projector, IdempotentEvenSelfAdjoint) {
  for (unsigned n = 1; n <= 3; ++n) {
    auto p = projector_p(n);
    EXPECT_TRUE(is_idempotent(p)) << n;
    EXPECT_EQ(p.degree(), Parity::Even) << n;
    EXPECT_EQ(superadjoint(p), p) << n;
    for (std::size_t i = 0; i < p.rows(); ++i)
      for (std::size_t j = 0; j < p.cols(); ++j)
        EXPECT_TRUE(p.at(i, j).has_parity(p.target().basis_parity(i) + p.source().basis_parity(j)));
  }
}

TEST(Superadjoint, EntrySigns) {
  auto r = uosp_ring();
  const FreeType t{1, 1};
  auto m = SuperMorphism::from_rows(r, t, t, {{gen(r, "a"), gen(r, "eta")}, {gen(r, "etad"), gen(r, "b")}});
  auto adj = superadjoint(m);
  EXPECT_EQ(adj.at(0, 0), gen(r, "ad"));
  EXPECT_EQ(adj.at(1, 1), gen(r, "bd"));
  // sign (-1)^(|j|(|i|+1)) falls on the even-row, odd-column entry
  EXPECT_EQ(adj.at(0, 1), -involute(gen(r, "etad")));
  EXPECT_EQ(adj.at(1, 0), involute(gen(r, "eta")));
  EXPECT_EQ(adj.at(0, 1), gen(r, "eta"));
}

TEST(Pi, Examples) {
  auto bra = make_bra(1);
  ModElement psi(bra.ring, bra.type(), ket(bra));
  EXPECT_EQ(pi_apply(bra, psi), psi);
  EXPECT_TRUE(pi_apply(bra, ModElement(bra.ring, bra.type())).is_zero());
  EXPECT_THROW(pi_apply(bra, ModElement(bra.ring, {1, 1})), ShapeError);
}

TEST(PiProperty, IdempotentOnRandomVectors) {
  auto bra = make_bra(1);
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    auto v = random_landi_vector(rng, bra);
    auto w = pi_apply(bra, v);
    EXPECT_EQ(pi_apply(bra, w), w);
    EXPECT_EQ(apply(projector_p(bra), v), w);
  }
}

TEST(LandiReport, PassesForSmallN) {
  for (unsigned n = 1; n <= 3; ++n) {
    auto rep = landi_report(n, 7, 5);
    EXPECT_TRUE(rep.pass()) << rep.to_text();
  }
  auto rep = landi_report(1, 7, 2);
  EXPECT_EQ(rep.to_json(false)["clauses"][2]["witness"], "residual 0");
}
