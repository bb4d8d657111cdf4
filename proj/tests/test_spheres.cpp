#include <gtest/gtest.h>

#include "supermod/spheres.hpp"

using namespace supermod;

class SphereProjector : public ::testing::TestWithParam<std::tuple<unsigned, unsigned>> {};

TEST_P(SphereProjector, CertificatePasses) {
  const auto [n, L] = GetParam();
  auto bundle = make_sphere_projector(grassmann_ring(L), n);
  auto report = stably_free_certificate(bundle);
  EXPECT_TRUE(report.pass()) << report.to_text();
  EXPECT_EQ(report.clauses.back().name, "stably_free");
}

INSTANTIATE_TEST_SUITE_P(NAndBase, SphereProjector,
                         ::testing::Combine(::testing::Values(1u, 2u, 3u, 4u),
                                            ::testing::Values(0u, 2u)));

TEST(Sphere, RotationVectorInKernel) {
  auto b = make_sphere_projector(grassmann_ring(0), 1);
  auto v = b.basis(0).times(b.coordinate(1)) - b.basis(1).times(b.coordinate(0));
  EXPECT_TRUE(apply(b.g, v).is_zero());
  EXPECT_FALSE(v.is_zero());
}

TEST(Sphere, ProjectorEntriesAreCoordinateProducts) {
  auto b = make_sphere_projector(grassmann_ring(0), 2);
  for (unsigned i = 0; i <= 2; ++i)
    for (unsigned j = 0; j <= 2; ++j)
      EXPECT_EQ(b.g.at(i, j), b.coordinate(i) * b.coordinate(j));
  // x0^2 is rewritten through the relation
  EXPECT_EQ(b.g.at(0, 0).to_string(), "1 - x1^2 - x2^2");
}

TEST(Sphere, RejectsNZeroAndEvenBase) {
  EXPECT_THROW(make_sphere_projector(grassmann_ring(0), 0), PreconditionError);
  auto trig = make_ring(CoeffRing::trig(), {});
  EXPECT_THROW(make_sphere_projector(trig, 1), PreconditionError);
}

TEST(Sphere, CertificateNotesAndWitness) {
  auto r = stably_free_certificate(make_sphere_projector(grassmann_ring(0), 2));
  ASSERT_FALSE(r.notes.empty());
  bool found = false;
  for (const auto& c : r.clauses)
    if (c.name == "image_generated_by_alpha") {
      found = true;
      EXPECT_EQ(c.witness, "multipliers (x0, x1, x2)");
    }
  EXPECT_TRUE(found);
}

TEST(Z6, ExampleCounts) {
  auto r = z6_example();
  EXPECT_TRUE(r.pass()) << r.to_text();
  EXPECT_EQ(r.params["elements"], 1296);
}

TEST(Z6, ImageOfThreeIsMultiplesOfThree) {
  auto ring = z6_ring();
  auto e = SuperMorphism::scalar(ring, {1, 0}, SuperElement(ring, Number(3)));
  auto xi1 = SuperElement::generator(ring, "xi1");
  ModElement v(ring, {1, 0}, {SuperElement(ring, Number(5)) + xi1});
  EXPECT_EQ(apply(e, v)[0], SuperElement(ring, Number(3)) + xi1.scaled(Number(3)));
  EXPECT_TRUE(apply(e, apply(SuperMorphism::identity(ring, {1, 0}) - e, v)).is_zero());
}
