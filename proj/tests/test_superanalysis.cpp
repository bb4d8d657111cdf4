#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "supermod/random.hpp"
#include "supermod/superanalysis.hpp"

using namespace supermod;

namespace {

SuperElement b(const RingPtr& r, unsigned i) { return SuperElement::odd_generator(r, i); }
SuperElement c(const RingPtr& r, const Number& v) { return SuperElement(r, v); }
Number q(long n, long d = 1) { return Number(mpq_class(mpz_class(n), mpz_class(d))); }

// x^2 computed letter by letter: every product of basis words is sorted by
// adjacent swaps, each swap flipping the sign, and repeated letters kill it.
std::map<std::vector<unsigned>, mpq_class> square_by_words(const SuperElement& x) {
  std::vector<std::pair<std::vector<unsigned>, mpq_class>> terms;
  for (const auto& [m, v] : x.terms()) terms.emplace_back(m.odd.indices(), *v.as_rational());
  std::map<std::vector<unsigned>, mpq_class> out;
  for (const auto& [wa, ca] : terms)
    for (const auto& [wb, cb] : terms) {
      std::vector<unsigned> w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      int sign = 1;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
          if (w[j] > w[j + 1]) {
            std::swap(w[j], w[j + 1]);
            sign = -sign;
          }
      if (std::adjacent_find(w.begin(), w.end()) != w.end()) continue;
      out[w] += sign * ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

std::map<std::vector<unsigned>, mpq_class> coefficients(const SuperElement& z) {
  std::map<std::vector<unsigned>, mpq_class> out;
  for (const auto& [m, v] : z.terms()) out[m.odd.indices()] = *v.as_rational();
  return out;
}

// Inverse of an element with nonzero body through the geometric series.
SuperElement inverse(const SuperElement& u) {
  const Number b0 = body(u);
  const Number inv0 = u.ring()->domain().inverse(b0);
  const SuperElement t = soul(u).scaled(-inv0);
  SuperElement sum = SuperElement::one(u.ring()), p = sum;
  for (unsigned k = 1; k <= u.ring()->odd_count(); ++k) {
    p *= t;
    sum += p;
  }
  return sum.scaled(inv0);
}

// Newton iteration for the square root, run to a fixed point.
SuperElement newton_sqrt(const SuperElement& z, const Number& root0) {
  SuperElement x = c(z.ring(), root0);
  for (int step = 0; step < 12; ++step) {
    SuperElement next = (x + z * inverse(x)).scaled(q(1, 2));
    if (next == x) break;
    x = next;
  }
  return x;
}

const std::pair<long, long> kPythagorean[] = {{3, 5}, {4, 5}, {-3, 5}, {5, 13}, {-12, 13},
                                              {8, 17}, {7, 25}, {20, 29}, {0, 1}, {-9, 41}};

}  // namespace

TEST(MultiDegree, EnumerationCounts) {
  int count = 0;
  for_each_multidegree(2, 3, [&](const MultiDegree&) { ++count; });
  EXPECT_EQ(count, 10);
  count = 0;
  for_each_multidegree(3, 2, [&](const MultiDegree& a) {
    ++count;
    EXPECT_LE(a[0] + a[1] + a[2], 2u);
  });
  EXPECT_EQ(count, 10);
}

TEST(BodyPoint, Examples) {
  auto r = grassmann_ring(2);
  EXPECT_EQ(body_point(make_super_point({c(r, q(3)) + b(r, 1) * b(r, 2)}, {b(r, 1)})),
            std::vector<Number>{q(3)});
  EXPECT_EQ(body_point(make_super_point({c(r, q(0))}, {SuperElement(r)})), std::vector<Number>{q(0)});
  auto e = (c(r, q(1)) + b(r, 1)) * (c(r, q(1)) - b(r, 1));
  EXPECT_EQ(body_point(make_super_point({e}, {b(r, 2)})), std::vector<Number>{q(1)});
  EXPECT_THROW(make_super_point({b(r, 1)}), PreconditionError);
}

TEST(Continuation, SquareJetMatchesDirectProduct) {
  auto r = grassmann_ring(4);
  const Number base = q(3, 2);
  auto f = Jet::polynomial(NumberDomain::rational(), 1, {{{2}, q(1)}}, {base}, 4);
  EXPECT_EQ(f.at({0}).to_string(), "9/4");
  EXPECT_EQ(f.at({1}).to_string(), "3");
  EXPECT_EQ(f.at({2}).to_string(), "2");
  EXPECT_TRUE(f.at({3}).is_zero());
  auto x = c(r, base) + b(r, 1) * b(r, 2) - (b(r, 3) * b(r, 4)).scaled(q(5));
  EXPECT_EQ(continue_analytically(f, {x}), x * x);
}

TEST(Continuation, ConstantAndIdentity) {
  auto r = grassmann_ring(2);
  auto x = c(r, q(2)) + b(r, 1) * b(r, 2);
  auto constant = Jet::polynomial(NumberDomain::rational(), 1, {{{0}, q(7)}}, {q(2)}, 2);
  EXPECT_EQ(continue_analytically(constant, {x}), c(r, q(7)));
  auto id = Jet::coordinate(NumberDomain::rational(), 1, 0, {q(2)}, 2);
  EXPECT_EQ(continue_analytically(id, {x}), x);
}

TEST(Continuation, Errors) {
  auto r = grassmann_ring(4);
  auto id = Jet::coordinate(NumberDomain::rational(), 1, 0, {q(2)}, 4);
  EXPECT_THROW(continue_analytically(id, {c(r, q(1))}), PreconditionError);
  EXPECT_THROW(continue_analytically(id, {b(r, 1)}), PreconditionError);
  auto low = Jet::coordinate(NumberDomain::rational(), 1, 0, {q(2)}, 1);
  EXPECT_THROW(continue_analytically(low, {c(r, q(2))}), PreconditionError);
  EXPECT_NO_THROW(continue_analytically(Jet::coordinate(NumberDomain::rational(), 1, 0, {q(2)}, 2),
                                        {c(r, q(2))}));
}

TEST(ContinuationProperty, ProductOfJetsContinuesToProduct) {
  auto r = grassmann_ring(6);
  Rng rng(21);
  const auto dom = NumberDomain::rational();
  for (int trial = 0; trial < 30; ++trial) {
    const unsigned arity = 1 + rng.uniform(0, 1);
    std::vector<Number> base;
    std::vector<SuperElement> x;
    for (unsigned k = 0; k < arity; ++k) {
      base.push_back(q(rng.uniform(-3, 3), rng.uniform(1, 3)));
      x.push_back(c(r, base.back()) + random_soul(rng, r, Parity::Even));
    }
    auto random_poly_terms = [&] {
      std::vector<std::pair<MultiDegree, Number>> terms;
      for (int t = 0; t < 3; ++t) {
        MultiDegree e(arity, 0);
        unsigned deg = rng.uniform(0, 3);
        for (unsigned d = 0; d < deg; ++d) ++e[rng.uniform(0, arity - 1)];
        terms.emplace_back(e, q(rng.uniform(-4, 4)));
      }
      return terms;
    };
    auto f = Jet::polynomial(dom, arity, random_poly_terms(), base, 6);
    auto g = Jet::polynomial(dom, arity, random_poly_terms(), base, 6);
    EXPECT_EQ(continue_analytically(f * g, x), continue_analytically(f, x) * continue_analytically(g, x));
    EXPECT_EQ(continue_analytically(f + g, x), continue_analytically(f, x) + continue_analytically(g, x));
  }
}

TEST(GInfinity, Examples) {
  auto r = grassmann_ring(3);
  const auto dom = NumberDomain::rational();
  auto x = c(r, q(1)) + b(r, 1) * b(r, 2);
  auto p = make_super_point({x}, {b(r, 3), b(r, 1)});

  SuperSmoothFn only_body{1, 2, {}};
  auto sq = Jet::polynomial(dom, 1, {{{2}, q(1)}}, {q(1)}, 3);
  only_body.components.emplace(MultiIndex{}, sq);
  EXPECT_EQ(eval_g_infinity(only_body, p), continue_analytically(sq, {x}));

  SuperSmoothFn xi1{1, 2, {}};
  xi1.components.emplace(MultiIndex::from_indices({1}), Jet::polynomial(dom, 1, {{{0}, q(1)}}, {q(1)}, 3));
  EXPECT_EQ(eval_g_infinity(xi1, p), b(r, 3));

  SuperSmoothFn xi12{1, 2, {}};
  xi12.components.emplace(MultiIndex::from_indices({1, 2}), Jet::coordinate(dom, 1, 0, {q(1)}, 3));
  EXPECT_EQ(eval_g_infinity(xi12, p), x * b(r, 3) * b(r, 1));

  EXPECT_THROW(eval_g_infinity(xi12, make_super_point({x}, {b(r, 3)})), ShapeError);
}

TEST(SuperTrig, SeriesAtZeroBody) {
  auto r = grassmann_ring(2);
  auto theta = b(r, 1) * b(r, 2);
  EXPECT_EQ(super_sin(theta), theta);
  EXPECT_EQ(super_cos(theta), c(r, q(1)));
  EXPECT_TRUE(super_sin(SuperElement(r)).is_zero());
  EXPECT_EQ(super_cos(SuperElement(r)), c(r, q(1)));
  EXPECT_THROW(super_sin(b(r, 1)), PreconditionError);
  EXPECT_THROW(super_sin(c(r, q(1))), Unsupported);
}

TEST(SuperTrig, SeriesAtZeroBodyFourGenerators) {
  auto r = grassmann_ring(4);
  auto theta = b(r, 1) * b(r, 2) + b(r, 3) * b(r, 4);
  // theta^2 = 2 b1b2b3b4, theta^3 = 0
  EXPECT_EQ(super_sin(theta), theta);
  EXPECT_EQ(super_cos(theta), c(r, q(1)) - b(r, 1) * b(r, 2) * b(r, 3) * b(r, 4));
}

TEST(SuperTrig, SymbolicBodyValues) {
  auto r = grassmann_ring(2);
  SymbolicAngle zero{SuperElement(r)};
  EXPECT_EQ(super_sin(zero).to_string(), "S");
  EXPECT_EQ(super_cos(zero).to_string(), "C");
  SymbolicAngle theta{b(r, 1) * b(r, 2)};
  EXPECT_EQ(super_sin(theta).to_string(), "S + C*b1*b2");
  EXPECT_EQ(super_cos(theta).to_string(), "C - S*b1*b2");
}

TEST(SuperTrigProperty, PythagoreanAndAdditionFormula) {
  Rng rng(22);
  for (unsigned L : {2u, 4u, 6u}) {
    auto r = grassmann_ring(L);
    for (int trial = 0; trial < 10; ++trial) {
      SymbolicAngle theta{random_soul(rng, r, Parity::Even)};
      auto s = super_sin(theta), co = super_cos(theta);
      EXPECT_EQ(s * s + co * co, SuperElement::one(s.ring()));
      // sin(t0 + u) = S cos u + C sin u via the zero-body series
      auto ring = s.ring();
      auto S = SuperElement::generator(ring, "S"), C = SuperElement::generator(ring, "C");
      auto su = lift(super_sin(theta.soul), ring), cu = lift(super_cos(theta.soul), ring);
      EXPECT_EQ(s, S * cu + C * su);
      EXPECT_EQ(co, C * cu - S * su);
    }
  }
}

TEST(Superderivation, ReportPasses) {
  Rng rng(23);
  for (unsigned L : {0u, 1u, 2u, 4u, 6u}) {
    auto r = grassmann_ring(L);
    SymbolicAngle theta{L >= 2 ? random_soul(rng, r, Parity::Even) : SuperElement(r)};
    auto rep = superderivation_check(theta);
    EXPECT_TRUE(rep.pass()) << rep.to_text();
  }
}

TEST(JetAlgebra, DerivativeCycle) {
  auto s = Jet::sin_symbolic(5), co = Jet::cos_symbolic(5);
  EXPECT_EQ(s.derivative(), Jet::cos_symbolic(4));
  EXPECT_TRUE((co.derivative() + Jet::sin_symbolic(4)).is_zero());
  EXPECT_TRUE((s * s + co * co).derivative().is_zero());
  EXPECT_EQ((s * s + co * co).at({0}).to_string(), "1");
  EXPECT_THROW(Jet::sin_symbolic(0).derivative(), PreconditionError);
}

TEST(SqrtEven, PythagoreanExample) {
  auto r = grassmann_ring(2);
  auto y = c(r, q(3, 5)) + b(r, 1) * b(r, 2);
  auto x = sqrt_even(c(r, q(1)) - y * y, q(4, 5));
  EXPECT_EQ(x, c(r, q(4, 5)) - (b(r, 1) * b(r, 2)).scaled(q(3, 4)));
  EXPECT_EQ(x * x + y * y, c(r, q(1)));
}

TEST(SqrtEven, TrivialAndFourGenerators) {
  auto r = grassmann_ring(4);
  EXPECT_EQ(sqrt_even(c(r, q(1)), q(1)), c(r, q(1)));
  auto z = c(r, q(1)) + b(r, 1) * b(r, 2) + b(r, 3) * b(r, 4);
  auto x = sqrt_even(z, q(1));
  EXPECT_EQ(x * x, z);
  EXPECT_EQ(body(x), q(1));
  EXPECT_EQ(sqrt_even(z, q(-1)), -x);
}

TEST(SqrtEven, Errors) {
  auto r = grassmann_ring(2);
  EXPECT_THROW(sqrt_even(c(r, q(2)), q(1)), PreconditionError);
  EXPECT_THROW(sqrt_even(b(r, 1), q(0)), PreconditionError);
  EXPECT_THROW(sqrt_even(b(r, 1) * b(r, 2), q(0)), PreconditionError);
  EXPECT_THROW(sqrt_even(c(make_ring(CoeffRing::trig()), q(1)), q(1)), Unsupported);
}

TEST(SqrtEvenProperty, MatchesNewtonAndWordExpansion) {
  auto r = grassmann_ring(6);
  Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const auto [n, d] = kPythagorean[trial % 10];
    auto y = c(r, q(n, d)) + random_soul(rng, r, Parity::Even);
    auto z = c(r, q(1)) - y * y;
    const mpq_class root = *rational_sqrt(1 - mpq_class(n, d) * mpq_class(n, d));
    auto x = sqrt_even(z, Number(root));
    EXPECT_EQ(x * x + y * y, c(r, q(1)));
    EXPECT_EQ(square_by_words(x), coefficients(z));
    EXPECT_EQ(x, newton_sqrt(z, Number(root)));
  }
}

TEST(Supercircle, ChartExamples) {
  auto r = grassmann_ring(2);
  auto p0 = supercircle_chart(SuperElement(r));
  EXPECT_EQ(p0.even[0], c(r, q(1)));
  EXPECT_TRUE(p0.even[1].is_zero());
  auto y = c(r, q(3, 5)) + b(r, 1) * b(r, 2);
  auto p = supercircle_chart(y);
  EXPECT_EQ(p.even[0], c(r, q(4, 5)) - (b(r, 1) * b(r, 2)).scaled(q(3, 4)));
  EXPECT_TRUE(on_circle(p));
  auto m = supercircle_chart(y, -1);
  EXPECT_EQ(body(m.even[0]), q(-4, 5));
  EXPECT_TRUE(on_circle(m));
  EXPECT_THROW(supercircle_chart(c(r, q(1, 2))), PreconditionError);
  EXPECT_THROW(supercircle_chart(c(r, q(1))), PreconditionError);
}

TEST(SupercircleProperty, AllFourChartsRoundTrip) {
  auto r = grassmann_ring(4);
  Rng rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [n, d] = kPythagorean[trial % 10];
    auto t = c(r, q(n, d)) + random_soul(rng, r, Parity::Even);
    for (CircleAxis axis : {CircleAxis::X, CircleAxis::Y})
      for (int sign : {1, -1}) {
        CircleChart chart{axis, sign};
        auto p = chart_inverse(chart, t);
        EXPECT_TRUE(on_circle(p)) << chart.name();
        EXPECT_EQ(chart_forward(chart, p), t);
        EXPECT_THROW(chart_forward(CircleChart{axis, -sign}, p), PreconditionError);
        auto v = circle_tangent(p, random_element(rng, r, Parity::Even));
        EXPECT_TRUE(tangency(p, v).is_zero());
      }
  }
}

TEST(CircleTangent, Examples) {
  auto r = grassmann_ring(0);
  auto p = make_super_point({c(r, q(1)), SuperElement(r)});
  auto v = circle_tangent(p, c(r, q(1)));
  EXPECT_TRUE(v[0].is_zero());
  EXPECT_EQ(v[1], c(r, q(1)));
  EXPECT_THROW(circle_tangent(make_super_point({c(r, q(1)), c(r, q(1))}), c(r, q(1))),
               PreconditionError);

  auto g = grassmann_ring(2);
  SymbolicAngle theta{b(g, 1) * b(g, 2)};
  auto s = super_sin(theta), co = super_cos(theta);
  auto tp = make_super_point({co, s});
  auto tv = circle_tangent(tp, SuperElement::one(s.ring()));
  EXPECT_EQ(tv[0], -s);
  EXPECT_EQ(tv[1], co);
  EXPECT_TRUE(tangency(tp, tv).is_zero());
}
