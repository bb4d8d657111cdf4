#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "io.hpp"
#include "landi.hpp"
#include "random.hpp"
#include "report.hpp"
#include "spheres.hpp"
#include "superanalysis.hpp"
#include "supermodule.hpp"

namespace supermod {

struct SuiteParams {
  std::optional<unsigned> L;
  std::optional<unsigned> n;
  std::optional<unsigned> max_n;
  std::optional<unsigned> count;
};

namespace oracle {

/// Coefficients of x^2 by expanding every product of basis words letter by
/// letter: adjacent transpositions flip the sign, repeated letters vanish.
inline std::map<std::vector<unsigned>, Number> square_by_words(const SuperElement& x) {
  const NumberDomain& dom = x.ring()->domain();
  std::map<std::vector<unsigned>, Number> out;
  for (const auto& [ma, ca] : x.terms())
    for (const auto& [mb, cb] : x.terms()) {
      std::vector<unsigned> w = ma.odd.indices();
      const auto tail = mb.odd.indices();
      w.insert(w.end(), tail.begin(), tail.end());
      bool negative = false;
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = 0; j + 1 < w.size() - i; ++j)
          if (w[j] > w[j + 1]) {
            std::swap(w[j], w[j + 1]);
            negative = !negative;
          }
      if (std::adjacent_find(w.begin(), w.end()) != w.end()) continue;
      const Number p = dom.mul(ca, cb);
      out[w] = negative ? dom.sub(out[w], p) : dom.add(out[w], p);
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<std::vector<unsigned>, Number> coefficients(const SuperElement& z) {
  std::map<std::vector<unsigned>, Number> out;
  for (const auto& [m, c] : z.terms()) out[m.odd.indices()] = c;
  return out;
}

/// Inverse of an element with invertible body by the geometric series.
inline SuperElement inverse(const SuperElement& u) {
  const Number inv0 = u.ring()->domain().inverse(body(u));
  const SuperElement t = soul(u).scaled(-inv0);
  SuperElement sum = SuperElement::one(u.ring()), p = sum;
  for (unsigned k = 1; k <= u.ring()->odd_count() && !p.is_zero(); ++k) {
    p *= t;
    sum += p;
  }
  return sum.scaled(inv0);
}

/// Newton iteration x <- (x + z/x)/2 from the body root, to a fixed point.
inline SuperElement newton_sqrt(const SuperElement& z, const Number& root0) {
  const Number half = z.ring()->domain().inverse(Number(2));
  SuperElement x(z.ring(), root0);
  for (unsigned step = 0; step < 2 * z.ring()->odd_count() + 2; ++step) {
    const SuperElement next = (x + z * inverse(x)).scaled(half);
    if (next == x) break;
    x = next;
  }
  return x;
}

}  // namespace oracle

namespace suite_detail {

inline Parity random_parity(Rng& rng) { return rng.coin() ? Parity::Odd : Parity::Even; }

inline SuperMorphism random_morphism(Rng& rng, const RingPtr& ring, FreeType src, FreeType dst,
                                     std::optional<Parity> degree = std::nullopt) {
  SuperMorphism phi(ring, src, dst);
  for (std::size_t i = 0; i < dst.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      std::optional<Parity> p;
      if (degree) p = dst.basis_parity(i) + src.basis_parity(j) + *degree;
      phi.at(i, j) = random_element(rng, ring, p, RandomSpec{3, 1, 5, 1});
    }
  return phi;
}

inline ModElement random_vector(Rng& rng, const RingPtr& ring, FreeType t,
                                std::optional<Parity> degree = std::nullopt) {
  ModElement x(ring, t);
  for (std::size_t k = 0; k < t.dim(); ++k) {
    std::optional<Parity> p;
    if (degree) p = t.basis_parity(k) + *degree;
    x[k] = random_element(rng, ring, p, RandomSpec{3, 1, 5, 1});
  }
  return x;
}

/// Counts failures of a repeated check and keeps the first witness.
struct Tally {
  unsigned trials = 0;
  unsigned failures = 0;
  std::string first_witness;

  void check(bool ok, const std::function<std::string()>& witness) {
    ++trials;
    if (!ok && failures++ == 0) first_witness = witness();
  }
  std::string summary() const {
    if (failures == 0) return std::to_string(trials) + "/" + std::to_string(trials) + " hold";
    return std::to_string(failures) + "/" + std::to_string(trials) + " fail; first: " + first_witness;
  }
  void report(Report& r, const std::string& name) const { r.add(name, failures == 0, summary()); }
};

inline const std::pair<long, long> kPythagoreanBodies[] = {
    {3, 5}, {4, 5}, {-3, 5}, {5, 13}, {-12, 13}, {8, 17}, {7, 25}, {-20, 29}, {0, 1}, {9, 41}};

inline Number pythagorean_body(std::size_t k, Number* root) {
  const auto [n, d] = kPythagoreanBodies[k % std::size(kPythagoreanBodies)];
  const mpq_class b(n, d);
  if (root) *root = Number(*rational_sqrt(1 - b * b));
  return Number(b);
}

}  // namespace suite_detail

/// The four rings the algebraic-law suite draws from.
inline std::vector<std::pair<std::string, RingPtr>> featured_rings(unsigned L = 5) {
  return {{"grassmann(" + std::to_string(L) + ")", grassmann_ring(L)},
          {"z6[xi1,xi2]", z6_ring()},
          {"sphere(2) x grassmann(2)", make_ring(CoeffRing::sphere(NumberDomain::rational(), 2), {"b1", "b2"})},
          {"trig x grassmann(3)", make_ring(CoeffRing::trig(), {"b1", "b2", "b3"})}};
}

inline Report suite_grassmann_laws(const SuiteParams& p, std::uint64_t seed) {
  using namespace suite_detail;
  Report r;
  const unsigned triples = p.count.value_or(500);
  const unsigned L = p.L.value_or(5);
  r.params["triples_per_ring"] = triples;
  r.params["L"] = L;
  Rng rng(seed);
  for (const auto& [name, ring] : featured_rings(L)) {
    Tally comm, assoc, dist, grading;
    for (unsigned t = 0; t < triples; ++t) {
      Parity pa[3];
      std::vector<SuperElement> v;
      for (int k = 0; k < 3; ++k) {
        pa[k] = random_parity(rng);
        v.push_back(random_element(rng, ring, pa[k]));
      }
      const SuperElement xy = v[0] * v[1];
      const SuperElement yx = (v[1] * v[0]).scaled(Number(koszul_sign(pa[0], pa[1])));
      comm.check(xy == yx, [&] { return "x=" + v[0].to_string() + ", y=" + v[1].to_string(); });
      const SuperElement lhs = xy * v[2], rhs = v[0] * (v[1] * v[2]);
      assoc.check(lhs == rhs, [&] { return "residual " + (lhs - rhs).to_string(); });
      const SuperElement d = v[0] * (v[1] + v[2]) - (xy + v[0] * v[2]);
      dist.check(d.is_zero(), [&] { return "residual " + d.to_string(); });
      grading.check(xy.has_parity(pa[0] + pa[1]), [&] { return "xy=" + xy.to_string(); });
    }
    comm.report(r, name + ": super_commutativity");
    assoc.report(r, name + ": associativity");
    dist.report(r, name + ": distributivity");
    grading.report(r, name + ": grading_multiplicative");
  }
  return r;
}

inline Report suite_example_2_6(const SuiteParams& p, std::uint64_t) {
  Report r;
  const unsigned L = p.L.value_or(10), max_n = p.max_n.value_or(5);
  if (2 * max_n > L) throw UsageError("example-2-6 needs 2*max-n <= L");
  r.params["L"] = L;
  r.params["max_n"] = max_n;
  const RingPtr ring = grassmann_ring(L);
  SuperElement x(ring);
  for (unsigned i = 1; i <= L; ++i)
    for (unsigned j = i + 1; j <= L; ++j)
      x += SuperElement::odd_generator(ring, i) * SuperElement::odd_generator(ring, j);
  SuperElement power = SuperElement::one(ring);
  for (unsigned n = 1; n <= max_n; ++n) {
    power *= x;
    const Number coeff = power.coefficient(Monomial{MultiIndex::prefix(2 * n), {}});
    const Number expected(factorial(n));
    r.add("coeff_x^" + std::to_string(n), coeff == expected,
          "coeff(x^" + std::to_string(n) + ", b1..b" + std::to_string(2 * n) + ") = " + coeff.to_string() +
              (coeff == expected ? "" : ", expected " + expected.to_string()));
  }
  r.notes.push_back("checked degreewise at finite L; non-nilpotency concerns the infinite algebra");
  return r;
}

inline Report suite_nilpotency(const SuiteParams& p, std::uint64_t seed) {
  Report r;
  const unsigned L = p.L.value_or(6), count = p.count.value_or(200);
  r.params["L"] = L;
  r.params["samples"] = count;
  const RingPtr ring = grassmann_ring(L);
  Rng rng(seed);
  suite_detail::Tally vanish, predicate, before;
  for (unsigned t = 0; t < count; ++t) {
    const SuperElement x = random_soul(rng, ring, RandomSpec{6, 0, 5, 3});
    const SuperElement top = pow(x, L + 1);
    vanish.check(top.is_zero(), [&] { return "x=" + x.to_string() + ", x^(L+1)=" + top.to_string(); });
    predicate.check(is_nilpotent(x), [&] { return "x=" + x.to_string(); });
    const SuperElement unit = SuperElement::one(ring) + x;
    before.check(!is_nilpotent(unit), [&] { return "1+x=" + unit.to_string(); });
  }
  vanish.report(r, "soul^(L+1)_is_0");
  predicate.report(r, "is_nilpotent_on_souls");
  before.report(r, "unit_body_not_nilpotent");
  return r;
}

inline Report suite_hom_grading(const SuiteParams& p, std::uint64_t seed) {
  using namespace suite_detail;
  Report r;
  const unsigned count = p.count.value_or(100);
  r.params["ring"] = "z6[xi1,xi2]";
  r.params["morphisms"] = count;
  const RingPtr ring = z6_ring();
  const FreeType src{2, 1}, dst{1, 2};
  Rng rng(seed);
  Tally sum, even_deg, odd_deg, preserve, flip, projector_formula;
  for (unsigned t = 0; t < count; ++t) {
    const SuperMorphism phi = random_morphism(rng, ring, src, dst);
    const auto [phi0, phi1] = grade_split_morphism(phi);
    sum.check(phi0 + phi1 == phi, [&] { return phi.to_string(); });
    even_deg.check(phi0.degree() == Parity::Even, [&] { return phi0.to_string(); });
    odd_deg.check(phi1.is_zero() || phi1.degree() == Parity::Odd, [&] { return phi1.to_string(); });
    for (Parity a : {Parity::Even, Parity::Odd}) {
      const ModElement x = random_vector(rng, ring, src, a);
      const ModElement y0 = apply(phi0, x), y1 = apply(phi1, x);
      preserve.check(y0.part(a + Parity::Odd).is_zero(), [&] { return "phi0(x)=" + y0.to_string(); });
      flip.check(y1.part(a).is_zero(), [&] { return "phi1(x)=" + y1.to_string(); });
      const ModElement px = apply(phi, x);
      projector_formula.check(y0 == px.part(a) && y1 == px.part(a + Parity::Odd),
                              [&] { return "x=" + x.to_string(); });
    }
  }
  sum.report(r, "phi0_plus_phi1_eq_phi");
  even_deg.report(r, "phi0_even");
  odd_deg.report(r, "phi1_odd");
  preserve.report(r, "phi0_preserves_parity");
  flip.report(r, "phi1_flips_parity");
  projector_formula.report(r, "matches_parity_projectors");
  return r;
}

inline Report suite_universal_property(const SuiteParams& p, std::uint64_t seed) {
  using namespace suite_detail;
  Report r;
  const unsigned count = p.count.value_or(50);
  r.params["samples"] = count;
  const RingPtr ring = grassmann_ring(4);
  const FreeType src{2, 2}, dst{1, 2};
  Rng rng(seed);
  Tally on_basis, linear, unique;
  for (unsigned t = 0; t < count; ++t) {
    std::vector<ModElement> images;
    for (std::size_t k = 0; k < src.dim(); ++k) images.push_back(random_vector(rng, ring, dst));
    const SuperMorphism phi = extend_basis_map(ring, src, images);
    bool agrees = true;
    for (std::size_t k = 0; k < src.dim(); ++k)
      agrees = agrees && apply(phi, ModElement::basis(ring, src, k)) == images[k];
    on_basis.check(agrees, [&] { return phi.to_string(); });
    const ModElement x = random_vector(rng, ring, src);
    const SuperElement a = random_element(rng, ring);
    linear.check(apply(phi, x.times(a)) == apply(phi, x).times(a), [&] { return "x=" + x.to_string(); });
    // any right-linear map agreeing on the basis has the same matrix
    SuperMorphism other(ring, src, dst);
    for (std::size_t k = 0; k < src.dim(); ++k) {
      const ModElement col = apply(phi, ModElement::basis(ring, src, k));
      for (std::size_t i = 0; i < dst.dim(); ++i) other.at(i, k) = col[i];
    }
    unique.check(other == phi, [&] { return phi.to_string(); });
  }
  on_basis.report(r, "agrees_on_basis");
  linear.report(r, "right_linear");
  unique.report(r, "determined_by_basis_images");

  const SphereProjectorBundle b = make_sphere_projector(grassmann_ring(0), 2);
  std::vector<ModElement> images;
  for (unsigned i = 0; i <= 2; ++i) images.push_back(b.alpha.times(b.coordinate(i)));
  r.add("sphere_images_give_g", extend_basis_map(b.ring, b.free_type(), images) == b.g,
        "g(s_i) = sum_j s_j x_i x_j, n = 2");
  return r;
}

inline Report suite_sphere_projector(const SuiteParams& p, std::uint64_t) {
  Report r;
  std::vector<unsigned> ns;
  if (p.n) ns.push_back(*p.n);
  else ns = {1, 2, 3, 4};
  r.params["n"] = p.n ? Json(*p.n) : Json("1..4");
  for (unsigned n : ns) {
    if (n < 1) throw UsageError("sphere-projector needs n >= 1");
    for (unsigned L : {0u, 2u}) {
      const auto bundle = make_sphere_projector(grassmann_ring(L), n);
      const std::string tag = "n=" + std::to_string(n) + (L ? " over Q x grassmann(2): " : " over Q: ");
      Report cert = stably_free_certificate(bundle);
      r.absorb(cert, tag);
      bool images = true;
      for (unsigned i = 0; i <= n; ++i)
        images = images && apply(bundle.g, bundle.basis(i)) == bundle.alpha.times(bundle.coordinate(i));
      r.add(tag + "g(s_i)=x_i alpha", images);
    }
  }
  if (std::find(ns.begin(), ns.end(), 1u) != ns.end()) {
    const auto b = make_sphere_projector(grassmann_ring(0), 1);
    const ModElement v = b.basis(0).times(b.coordinate(1)) - b.basis(1).times(b.coordinate(0));
    r.add("n=1: g(x1 s0 - x0 s1) = 0", apply(b.g, v).is_zero(), "g(v) = " + apply(b.g, v).to_string());
  }
  r.notes.clear();
  r.notes.push_back("basis s0..sn taken even");
  r.notes.push_back("non-freeness of P_n for n != 0,1,3,7 is cited, not machine-checked");
  return r;
}

inline Report suite_z6(const SuiteParams&, std::uint64_t) {
  Report r = z6_example();
  r.subject_key = "suite";
  return r;
}

inline Report suite_splitting(const SuiteParams& p, std::uint64_t seed) {
  using namespace suite_detail;
  Report r;
  std::vector<std::pair<std::string, SuperMorphism>> idempotents;
  for (unsigned n = 1; n <= 3; ++n)
    idempotents.emplace_back("sphere g n=" + std::to_string(n), make_sphere_projector(grassmann_ring(0), n).g);
  const RingPtr z6 = z6_ring();
  idempotents.emplace_back("3 on z6", SuperMorphism::scalar(z6, {1, 0}, SuperElement(z6, Number(3))));
  const RingPtr g2 = grassmann_ring(2);
  SuperMorphism odd_basis(g2, {1, 1}, {1, 1});
  odd_basis.at(0, 0) = SuperElement::one(g2);
  odd_basis.at(0, 1) = SuperElement::odd_generator(g2, 1);
  idempotents.emplace_back("[[1,b1],[0,0]] on (1,1)", odd_basis);
  idempotents.emplace_back("identity (2,1)", SuperMorphism::identity(g2, {2, 1}));
  idempotents.emplace_back("zero (1,1)", SuperMorphism(g2, {1, 1}, {1, 1}));
  idempotents.emplace_back("tensor of [[1,b1],[0,0]] with itself", tensor(odd_basis, odd_basis));
  idempotents.emplace_back("landi p_1", projector_p(1));

  Rng rng(seed);
  const unsigned conjugates = p.count.value_or(10);
  const FreeType f{2, 1};
  for (unsigned t = 0; t < conjugates; ++t) {
    // u e u^-1 for the coordinate projection e and a unipotent u
    SuperMorphism n = random_morphism(rng, z6, f, f, Parity::Even);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j <= i; ++j) n.at(i, j) = SuperElement(z6);
    const SuperMorphism u = SuperMorphism::identity(z6, f) + n;
    const SuperMorphism uinv = SuperMorphism::identity(z6, f) - n + compose(n, n);
    SuperMorphism e(z6, f, f);
    e.at(0, 0) = SuperElement::one(z6);
    idempotents.emplace_back("conjugated projection #" + std::to_string(t), compose(u, compose(e, uinv)));
  }

  for (const auto& [name, g] : idempotents) {
    if (!is_idempotent(g)) {
      r.add(name + ": idempotent", false, "g^2 - g = " + (compose(g, g) - g).to_string());
      continue;
    }
    const IdempotentSplit s = split_idempotent(g);
    bool summands = true;
    Rng vr(seed + 1);
    for (int k = 0; k < 5; ++k) {
      const ModElement x = random_vector(vr, g.ring(), g.source());
      const auto [img, ker] = split_sum(apply(s.iso, x), g.source(), g.source());
      summands = summands && apply(g, img) == img && apply(g, ker).is_zero();
    }
    r.add(name + ": round_trips", s.round_trip_on_source() && s.round_trip_on_summands());
    r.add(name + ": summands_in_image_and_kernel", summands);
  }

  for (unsigned n = 1; n <= 3; ++n) {
    const auto b = make_sphere_projector(grassmann_ring(0), n);
    const SectionSplit s = section_splitting(b.retraction(), b.inclusion());
    r.add("section splitting sphere n=" + std::to_string(n), s.round_trip_on_source() && s.round_trip_on_summands());
    const SuperMorphism h = compose(b.retraction(), b.g);
    r.add("lift sphere n=" + std::to_string(n),
          compose(b.retraction(), lift_through_split_surjection(h, b.retraction(), b.inclusion())) == h);
  }
  r.params["idempotents"] = idempotents.size();
  return r;
}

inline Report suite_tensor_types(const SuiteParams&, std::uint64_t) {
  Report r;
  bool sums = true, tensors = true;
  std::string witness;
  for (std::size_t p1 = 0; p1 <= 3; ++p1)
    for (std::size_t q1 = 0; q1 <= 3; ++q1)
      for (std::size_t p2 = 0; p2 <= 3; ++p2)
        for (std::size_t q2 = 0; q2 <= 3; ++q2) {
          const FreeType a{p1, q1}, b{p2, q2};
          // count basis parities of the actual layouts
          std::size_t even = 0;
          const TensorLayout t{a, b};
          for (auto [i, j] : t.pairs()) even += a.basis_parity(i) + b.basis_parity(j) == Parity::Even;
          const FreeType counted{even, t.pairs().size() - even};
          if (!(counted == FreeType{p1 * p2 + q1 * q2, p1 * q2 + q1 * p2}) || !(tensor(a, b) == counted)) {
            tensors = false;
            witness = a.to_string() + " x " + b.to_string();
          }
          const DirectSumLayout d{a, b};
          std::size_t even_sum = 0;
          for (std::size_t k = 0; k < a.dim(); ++k) even_sum += d.type().basis_parity(d.first_slot(k)) == Parity::Even;
          for (std::size_t k = 0; k < b.dim(); ++k) even_sum += d.type().basis_parity(d.second_slot(k)) == Parity::Even;
          if (!(direct_sum(a, b) == FreeType{p1 + p2, q1 + q2}) || even_sum != p1 + p2) {
            sums = false;
            witness = a.to_string() + " + " + b.to_string();
          }
        }
  r.add("direct_sum_types", sums, sums ? "256 pairs with p,q <= 3" : witness);
  r.add("tensor_types", tensors, tensors ? "256 pairs with p,q <= 3" : witness);

  const auto b = make_sphere_projector(grassmann_ring(0), 1);
  const EndProjector e = end_projector(b.g);
  r.add("end_projector_sphere_n1_idempotent", is_idempotent(e.projector()),
        "Hom type " + e.hom_type().to_string());
  r.add("tensor_of_idempotents_idempotent", is_idempotent(tensor(b.g, b.g)));
  r.add("sum_of_idempotents_idempotent", is_idempotent(direct_sum(b.g, b.g)));
  const RingPtr g2 = grassmann_ring(2);
  SuperMorphism odd_basis(g2, {1, 1}, {1, 1});
  odd_basis.at(0, 0) = SuperElement::one(g2);
  odd_basis.at(0, 1) = SuperElement::odd_generator(g2, 1);
  r.add("end_projector_odd_basis_idempotent", is_idempotent(end_projector(odd_basis).projector()));
  return r;
}

inline Report suite_supercircle(const SuiteParams& p, std::uint64_t seed) {
  using namespace suite_detail;
  Report r;
  const unsigned L = p.L.value_or(4), count = p.count.value_or(20);
  r.params["L"] = L;
  r.params["samples"] = count;
  const RingPtr ring = grassmann_ring(L);
  if (L >= 2) {
    const SuperElement y = SuperElement(ring, Number(mpq_class(3, 5))) +
                           SuperElement::odd_generator(ring, 1) * SuperElement::odd_generator(ring, 2);
    const SuperPoint pt = supercircle_chart(y);
    r.add("example_y=3/5+b1b2", pt.even[0].to_string() == "4/5 - 3/4*b1*b2" && on_circle(pt),
          "x = " + pt.even[0].to_string());
  }
  Rng rng(seed);
  Tally relation, round_trip, tangent;
  for (unsigned t = 0; t < count; ++t) {
    const SuperElement s = SuperElement(ring, pythagorean_body(t, nullptr)) + random_soul(rng, ring, Parity::Even);
    for (CircleAxis axis : {CircleAxis::X, CircleAxis::Y})
      for (int sign : {1, -1}) {
        const CircleChart chart{axis, sign};
        const SuperPoint pt = chart_inverse(chart, s);
        relation.check(on_circle(pt), [&] { return chart.name() + " at " + s.to_string(); });
        round_trip.check(chart_forward(chart, pt) == s, [&] { return chart.name() + " at " + s.to_string(); });
        const auto v = circle_tangent(pt, random_element(rng, ring, Parity::Even));
        const SuperElement res = tangency(pt, v);
        tangent.check(res.is_zero(), [&] { return "residual " + res.to_string(); });
      }
  }
  relation.report(r, "x^2+y^2=1");
  round_trip.report(r, "chart_round_trip");
  tangent.report(r, "tangent_is_tangent");
  return r;
}

inline Report suite_trig(const SuiteParams& p, std::uint64_t seed) {
  Report r;
  const unsigned L = p.L.value_or(6), count = p.count.value_or(10);
  r.params["L"] = L;
  r.params["samples"] = count;
  const RingPtr ring = grassmann_ring(L);
  Rng rng(seed);
  suite_detail::Tally all;
  std::string failing;
  for (unsigned t = 0; t < count; ++t) {
    const SymbolicAngle theta{random_soul(rng, ring, Parity::Even)};
    const Report rep = superderivation_check(theta);
    all.check(rep.pass(), [&] {
      for (const auto& c : rep.clauses)
        if (!c.pass) return "soul " + theta.soul.to_string() + ": " + c.name + " " + c.witness;
      return std::string();
    });
  }
  all.report(r, "D_sin=cos, D_cos=-sin, sin^2+cos^2=1, D(sin^2+cos^2)=0");
  if (L >= 2) {
    const SuperElement theta = SuperElement::odd_generator(ring, 1) * SuperElement::odd_generator(ring, 2);
    r.add("zero_body_series", super_sin(theta) == theta && super_cos(theta) == SuperElement::one(ring),
          "sin(b1b2) = " + super_sin(theta).to_string());
  }
  r.add("sin0=0,cos0=1", super_sin(SuperElement(ring)).is_zero() && super_cos(SuperElement(ring)) == SuperElement::one(ring));
  return r;
}

inline Report suite_sqrt(const SuiteParams& p, std::uint64_t seed) {
  using namespace suite_detail;
  Report r;
  const unsigned L = p.L.value_or(6), count = p.count.value_or(100);
  r.params["L"] = L;
  r.params["samples"] = count;
  const RingPtr ring = grassmann_ring(L);
  const SuperElement one = SuperElement::one(ring);
  Rng rng(seed);
  Tally circle, words, newton;
  for (unsigned t = 0; t < count; ++t) {
    Number root;
    const SuperElement y = SuperElement(ring, pythagorean_body(t, &root)) + random_soul(rng, ring, Parity::Even);
    const SuperElement z = one - y * y;
    const SuperElement x = sqrt_even(z, root);
    circle.check(x * x + y * y == one, [&] { return "y=" + y.to_string(); });
    words.check(oracle::square_by_words(x) == oracle::coefficients(z), [&] { return "y=" + y.to_string(); });
    newton.check(oracle::newton_sqrt(z, root) == x, [&] { return "y=" + y.to_string(); });
  }
  circle.report(r, "sqrt(1-y^2)^2+y^2=1");
  words.report(r, "matches_coefficient_expansion");
  newton.report(r, "matches_newton_iteration");
  return r;
}

inline Report suite_landi(const SuiteParams& p, std::uint64_t seed) {
  Report r;
  std::vector<unsigned> ns;
  if (p.n) ns.push_back(*p.n);
  else ns = {1, 2, 3};
  const unsigned vectors = p.count.value_or(20);
  r.params["n"] = p.n ? Json(*p.n) : Json("1..3");
  r.params["vectors"] = vectors;
  r.params["double_sign"] = "graded";
  for (unsigned n : ns) {
    if (n < 1) throw UsageError("landi needs n >= 1");
    r.absorb(landi_report(n, seed + n, vectors), "n=" + std::to_string(n) + ": ");
  }
  r.notes.clear();
  r.notes.push_back("inner product taken as sum bra_i * (bra_i)^involuted");
  return r;
}

using SuiteFn = Report (*)(const SuiteParams&, std::uint64_t);

struct SuiteEntry {
  const char* name;
  SuiteFn fn;
  const char* summary;
};

inline const std::vector<SuiteEntry>& suite_registry() {
  static const std::vector<SuiteEntry> entries = {
      {"grassmann-laws", suite_grassmann_laws, "super commutativity, associativity, distributivity, grading"},
      {"example-2-6", suite_example_2_6, "coefficient of b1..b2n in x^n is n!"},
      {"nilpotency", suite_nilpotency, "souls satisfy x^(L+1) = 0"},
      {"hom-grading", suite_hom_grading, "morphisms split into even and odd parts"},
      {"universal-property", suite_universal_property, "maps are determined by basis images"},
      {"sphere-projector", suite_sphere_projector, "tangent projector over the sphere ring"},
      {"z6", suite_z6, "idempotent 3 on Z/6[xi1,xi2]"},
      {"splitting", suite_splitting, "idempotent and section splittings round-trip"},
      {"tensor-types", suite_tensor_types, "direct sum and tensor types, end projector"},
      {"supercircle", suite_supercircle, "charts and tangents of x^2 + y^2 = 1"},
      {"trig", suite_trig, "super sin and cos identities"},
      {"sqrt", suite_sqrt, "even square roots"},
      {"landi", suite_landi, "<psi|psi> = 1 and p^2 = p"},
  };
  return entries;
}

inline Report run_suite(const std::string& name, const SuiteParams& params, std::uint64_t seed) {
  for (const auto& e : suite_registry()) {
    if (name != e.name) continue;
    const auto start = std::chrono::steady_clock::now();
    Report r = e.fn(params, seed);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.subject_key = "suite";
    r.subject = name;
    r.seed = seed;
    return r;
  }
  throw UsageError("unknown suite \"" + name + "\"");
}

/// g^2 = g plus split data and parity analysis for a user-supplied morphism.
inline Report certify_idempotent(const SuperMorphism& g) {
  Report r;
  r.subject_key = "certificate";
  r.subject = "idempotent";
  r.params["ring"] = g.ring()->describe();
  r.params["type"] = g.source().to_string();
  if (!g.is_square()) throw ShapeError("certify needs a square matrix, got " + g.target().to_string() +
                                       " x " + g.source().to_string());
  const SuperMorphism residual = compose(g, g) - g;
  std::string witness = "residual 0";
  if (!residual.is_zero()) {
    witness.clear();
    for (std::size_t i = 0; i < residual.rows() && witness.empty(); ++i)
      for (std::size_t j = 0; j < residual.cols() && witness.empty(); ++j)
        if (!residual.at(i, j).is_zero())
          witness = "(g^2 - g)[" + std::to_string(i) + "][" + std::to_string(j) + "] = " + residual.at(i, j).to_string();
  }
  r.add("idempotent", residual.is_zero(), witness);
  const auto degree = g.degree();
  r.params["degree"] = degree ? to_string(*degree) : "inhomogeneous";
  if (!residual.is_zero()) return r;
  const IdempotentSplit s = split_idempotent(g);
  r.add("iso_round_trip_on_F", s.round_trip_on_source());
  r.add("iso_round_trip_on_Im_plus_Ker", s.round_trip_on_summands());
  r.add("complement_idempotent", is_idempotent(s.kernel_projector));
  r.add("orthogonal", compose(g, s.kernel_projector).is_zero() && compose(s.kernel_projector, g).is_zero());
  const auto [g0, g1] = grade_split_morphism(g);
  r.notes.push_back("even part zero: " + std::string(g0.is_zero() ? "yes" : "no") +
                    ", odd part zero: " + std::string(g1.is_zero() ? "yes" : "no"));
  return r;
}

}  // namespace supermod
