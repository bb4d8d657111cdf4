#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "report.hpp"
#include "supermodule.hpp"

namespace supermod {

/// Tangent-bundle projector over Lambda_n = R[x0..xn]/(sum xi^2 - 1):
/// g(s_i) = sum_j s_j x_i x_j on the free module with even basis s_0..s_n.
struct SphereProjectorBundle {
  unsigned n = 0;
  RingPtr ring;
  SuperMorphism g;
  ModElement alpha;  // sum_j s_j x_j

  FreeType free_type() const { return {n + 1, 0}; }
  SuperElement coordinate(unsigned i) const {
    return SuperElement::generator(ring, "x" + std::to_string(i));
  }
  ModElement basis(unsigned i) const { return ModElement::basis(ring, free_type(), i); }

  /// r: F -> Lambda, r(v) = sum_i x_i v_i. Satisfies r(alpha) = 1 and g = incl o r.
  SuperMorphism retraction() const {
    SuperMorphism r(ring, free_type(), FreeType{1, 0});
    for (unsigned i = 0; i <= n; ++i) r.at(0, i) = coordinate(i);
    return r;
  }

  /// incl: Lambda -> F, 1 |-> alpha.
  SuperMorphism inclusion() const {
    SuperMorphism s(ring, FreeType{1, 0}, free_type());
    for (unsigned i = 0; i <= n; ++i) s.at(i, 0) = coordinate(i);
    return s;
  }
};

/// Lambda_n over the number domain and odd generators of a Grassmann base.
inline RingPtr sphere_ring(const RingPtr& base, unsigned n) {
  if (!base->is_pure_grassmann())
    throw PreconditionError("sphere base ring must not have even generators");
  return make_ring(CoeffRing::sphere(base->domain(), n), base->odd_names());
}

inline SphereProjectorBundle make_sphere_projector(const RingPtr& base, unsigned n) {
  if (n < 1) throw PreconditionError("sphere projector needs n >= 1");
  RingPtr ring = sphere_ring(base, n);
  const FreeType f{n + 1, 0};
  std::vector<SuperElement> x;
  for (unsigned i = 0; i <= n; ++i) x.push_back(SuperElement::generator(ring, "x" + std::to_string(i)));

  SuperMorphism g(ring, f, f);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= n; ++j) g.at(j, i) = x[i] * x[j];
  ModElement alpha(ring, f, x);

  SphereProjectorBundle bundle{n, ring, g, alpha};
  if (!is_idempotent(g)) throw InvariantError("sphere projector is not idempotent");
  if (apply(g, alpha) != alpha) throw InvariantError("sphere projector does not fix alpha");
  for (unsigned i = 0; i <= n; ++i)
    if (apply(g, bundle.basis(i)) != alpha.times(x[i]))
      throw InvariantError("g(s_i) != alpha x_i for i = " + std::to_string(i));
  return bundle;
}

/// Certifies Im g = alpha Lambda (free of rank 1) and P_n (+) Im g = F, hence
/// P_n (+) Lambda^1 = Lambda^(n+1).
inline Report stably_free_certificate(const SphereProjectorBundle& b) {
  Report r;
  r.subject_key = "example";
  r.subject = "sphere";
  r.params["n"] = b.n;
  r.params["ring"] = b.ring->describe();
  r.notes.push_back("basis s0..sn taken even: free type (" + std::to_string(b.n + 1) + ",0)");
  r.notes.push_back("non-freeness of P_n for n != 0,1,3,7 is cited, not machine-checked");

  r.add("idempotent", is_idempotent(b.g));
  r.add("fixes_alpha", apply(b.g, b.alpha) == b.alpha);

  bool multiples = true;
  std::string multipliers = "(";
  for (unsigned i = 0; i <= b.n; ++i) {
    const SuperElement m = b.coordinate(i);
    multiples = multiples && apply(b.g, b.basis(i)) == b.alpha.times(m);
    multipliers += (i ? ", " : "") + m.to_string();
  }
  r.add("image_generated_by_alpha", multiples, "multipliers " + multipliers + ")");

  const SuperMorphism retract = b.retraction();
  const SuperMorphism incl = b.inclusion();
  r.add("alpha_free_rank_1",
        compose(retract, incl) == SuperMorphism::identity(b.ring, FreeType{1, 0}) &&
            compose(incl, retract) == b.g,
        "r(alpha) = sum x_i^2 = 1 and g = incl o r");

  bool kernel = true;
  std::string kernel_witness;
  for (unsigned i = 0; i <= b.n; ++i)
    for (unsigned j = i + 1; j <= b.n; ++j) {
      const ModElement v = b.basis(i).times(b.coordinate(j)) - b.basis(j).times(b.coordinate(i));
      const ModElement image = apply(b.g, v);
      if (!image.is_zero()) {
        kernel = false;
        kernel_witness = "g(" + v.to_string() + ") = " + image.to_string();
      }
    }
  if (kernel && b.n >= 1) kernel_witness = "g(x1 s0 - x0 s1) = 0";
  r.add("kernel_contains_rotations", kernel, kernel_witness);

  const IdempotentSplit split = split_idempotent(b.g);
  r.add("kernel_image_split", split.round_trip_on_source() && split.round_trip_on_summands());

  const SectionSplit sec = section_splitting(retract, incl);
  r.add("section_split", sec.round_trip_on_source() && sec.round_trip_on_summands());

  const bool all = r.pass();
  r.add("stably_free", all,
        "P_" + std::to_string(b.n) + " (+) Lambda^1 = Lambda^" + std::to_string(b.n + 1));
  return r;
}

/// Z/6[xi1, xi2] as a module over itself split by the idempotent 3.
inline RingPtr z6_ring() {
  return make_ring(CoeffRing(NumberDomain::integers_mod(6)), {"xi1", "xi2"});
}

inline Report z6_example() {
  Report r;
  r.subject_key = "example";
  r.subject = "z6";
  const RingPtr ring = z6_ring();
  const FreeType rank1{1, 0};
  const SuperMorphism e = SuperMorphism::scalar(ring, rank1, SuperElement(ring, Number(3)));
  const SuperMorphism id = SuperMorphism::identity(ring, rank1);
  const SuperMorphism f = id - e;

  r.add("idempotent", is_idempotent(e), "3 * 3 = 9 = 3 mod 6");
  r.add("complement_idempotent", is_idempotent(f));
  r.add("orthogonal", compose(e, f).is_zero() && compose(f, e).is_zero());

  const std::array<MultiIndex, 4> monomials = {MultiIndex{}, MultiIndex::from_indices({1}),
                                               MultiIndex::from_indices({2}),
                                               MultiIndex::from_indices({1, 2})};
  auto residues = [&](const ModElement& v) {
    std::array<long, 4> out{};
    for (std::size_t k = 0; k < 4; ++k)
      out[k] = v[0].coefficient(Monomial{monomials[k], {}}).as_rational()->get_num().get_si();
    return out;
  };

  std::set<std::array<long, 4>> image, complement;
  bool decomposes = true;
  std::size_t count = 0;
  for (long c0 = 0; c0 < 6; ++c0)
    for (long c1 = 0; c1 < 6; ++c1)
      for (long c2 = 0; c2 < 6; ++c2)
        for (long c3 = 0; c3 < 6; ++c3) {
          SuperElement x(ring);
          const long cs[] = {c0, c1, c2, c3};
          for (std::size_t k = 0; k < 4; ++k)
            x += SuperElement::odd_monomial(ring, monomials[k], Number(cs[k]));
          const ModElement v(ring, rank1, {x});
          const ModElement ev = apply(e, v), fv = apply(f, v);
          image.insert(residues(ev));
          complement.insert(residues(fv));
          decomposes = decomposes && (ev + fv == v);
          ++count;
        }

  std::vector<std::array<long, 4>> both;
  for (const auto& v : image)
    if (complement.count(v)) both.push_back(v);

  r.params["elements"] = count;
  r.add("image_cardinality", image.size() == 16, "|Im e| = " + std::to_string(image.size()));
  r.add("complement_cardinality", complement.size() == 81,
        "|Im(1-e)| = " + std::to_string(complement.size()));
  r.add("intersection_trivial",
        both.size() == 1 && both.front() == std::array<long, 4>{0, 0, 0, 0},
        "|Im e n Im(1-e)| = " + std::to_string(both.size()));
  r.add("decomposition", decomposes && count == 1296,
        "x = e(x) + (1-e)(x) for " + std::to_string(count) + " elements");
  r.notes.push_back("non-freeness of Im e is a counting argument over all free modules; only the "
                    "cardinalities are checked");
  return r;
}

}  // namespace supermod
