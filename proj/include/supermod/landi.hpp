#pragma once

#include <string>
#include <vector>

#include "random.hpp"
#include "report.hpp"
#include "supermodule.hpp"

namespace supermod {

/// Coordinate ring of UOSP(1,2): even a, ad, b, bd with a*ad = 1 - b*bd, odd
/// eta, etad, over Q(i) with formal square roots. The involution swaps each
/// generator with its partner.
inline RingPtr uosp_ring(DoubleInvolution convention = DoubleInvolution::Graded) {
  const std::vector<std::string> vars = {"a", "ad", "b", "bd"};
  Relation rel;
  rel.lead = {1, 1, 0, 0};
  rel.rhs = {{{0, 0, 0, 0}, Number(1)}, {{0, 0, 1, 1}, Number(-1)}};
  Involution inv{{{"a", "ad"}, {"b", "bd"}, {"eta", "etad"}}, convention};
  return make_ring(CoeffRing(NumberDomain::gaussian_radical(), vars, std::move(rel)), {"eta", "etad"},
                   std::move(inv));
}

/// <psi_n| as n+1 even components followed by n odd components.
struct BraVector {
  unsigned n = 0;
  RingPtr ring;
  std::vector<SuperElement> even;
  std::vector<SuperElement> odd;

  FreeType type() const { return {n + 1, n}; }

  /// Components in basis order: even block, then odd block.
  std::vector<SuperElement> components() const {
    std::vector<SuperElement> all = even;
    all.insert(all.end(), odd.begin(), odd.end());
    return all;
  }
};

inline BraVector make_bra(const RingPtr& ring, unsigned n) {
  if (n < 1) throw PreconditionError("make_bra needs n >= 1");
  const SuperElement ad = SuperElement::generator(ring, "ad"), bd = SuperElement::generator(ring, "bd");
  const SuperElement eta = SuperElement::generator(ring, "eta");
  const SuperElement etad = SuperElement::generator(ring, "etad");
  const SuperElement one = SuperElement::one(ring);
  const SuperElement even_factor = one - (eta * etad).scaled(Number(mpq_class(1, 8)));
  const SuperElement odd_factor = etad.scaled(Number(mpq_class(1, 2)));

  auto monomial = [&](unsigned m, unsigned k) {
    const Number root = Number::sqrt_of(binomial(m, k).get_ui());
    return (pow(ad, m - k) * pow(bd, k)).scaled(root);
  };

  BraVector bra{n, ring, {}, {}};
  for (unsigned k = 0; k <= n; ++k) bra.even.push_back(even_factor * monomial(n, k));
  for (unsigned k = 0; k + 1 <= n; ++k) bra.odd.push_back(odd_factor * monomial(n - 1, k));
  return bra;
}

inline BraVector make_bra(unsigned n, DoubleInvolution convention = DoubleInvolution::Graded) {
  return make_bra(uosp_ring(convention), n);
}

/// |psi_n>: the involuted components.
inline std::vector<SuperElement> ket(const BraVector& bra) {
  std::vector<SuperElement> out;
  for (const auto& c : bra.components()) out.push_back(involute(c));
  return out;
}

/// <psi|psi> = sum_i bra_i * bra_i^involuted.
inline SuperElement inner(const BraVector& bra) {
  const auto k = ket(bra);
  const auto comps = bra.components();
  SuperElement sum(bra.ring);
  for (std::size_t i = 0; i < comps.size(); ++i) sum += comps[i] * k[i];
  return sum;
}

/// The same sum with the involuted factor on the left.
inline SuperElement inner_conjugate_first(const BraVector& bra) {
  const auto k = ket(bra);
  const auto comps = bra.components();
  SuperElement sum(bra.ring);
  for (std::size_t i = 0; i < comps.size(); ++i) sum += k[i] * comps[i];
  return sum;
}

/// p_n = |psi_n><psi_n| on the free module of type (n+1, n): entry (i,j) is
/// ket_i * bra_j.
inline SuperMorphism projector_p(const BraVector& bra) {
  const auto k = ket(bra);
  const auto comps = bra.components();
  SuperMorphism p(bra.ring, bra.type(), bra.type());
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = 0; j < comps.size(); ++j) p.at(i, j) = k[i] * comps[j];
  return p;
}

inline SuperMorphism projector_p(unsigned n, DoubleInvolution convention = DoubleInvolution::Graded) {
  return projector_p(make_bra(n, convention));
}

/// <psi_n|v> = sum_j bra_j v_j.
inline SuperElement pairing(const BraVector& bra, const ModElement& v) {
  if (v.type() != bra.type()) throw ShapeError("vector type does not match (n+1, n)");
  const auto comps = bra.components();
  SuperElement sum(bra.ring);
  for (std::size_t j = 0; j < comps.size(); ++j) sum += comps[j] * v[j];
  return sum;
}

/// pi_n(v) = |psi_n> <psi_n|v>.
inline ModElement pi_apply(const BraVector& bra, const ModElement& v) {
  const SuperElement c = pairing(bra, v);
  const auto k = ket(bra);
  ModElement out(bra.ring, bra.type());
  for (std::size_t i = 0; i < k.size(); ++i) out[i] = k[i] * c;
  return out;
}

/// (M^adj)_ij = (-1)^(|j|(|i|+1)) (M_ji)^involuted.
inline SuperMorphism superadjoint(const SuperMorphism& m) {
  SuperMorphism out(m.ring(), m.target(), m.source());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j) {
      const Parity pi = out.target().basis_parity(i), pj = out.source().basis_parity(j);
      SuperElement e = involute(m.at(j, i));
      if (pj == Parity::Odd && pi == Parity::Even) e = -e;
      out.at(i, j) = e;
    }
  return out;
}

inline ModElement random_landi_vector(Rng& rng, const BraVector& bra) {
  ModElement v(bra.ring, bra.type());
  const RandomSpec spec{3, 1, 3, 2};
  for (std::size_t k = 0; k < bra.type().dim(); ++k)
    v[k] = random_element(rng, bra.ring, bra.type().basis_parity(k), spec);
  return v;
}

inline std::string convention_name(DoubleInvolution c) {
  return c == DoubleInvolution::Graded ? "graded" : "plain";
}

inline Report landi_report(unsigned n, std::uint64_t seed, unsigned vectors = 20,
                           DoubleInvolution convention = DoubleInvolution::Graded) {
  Report r;
  r.subject = "landi";
  r.seed = seed;
  r.params["n"] = n;
  r.params["double_sign"] = convention_name(convention);
  const BraVector bra = make_bra(n, convention);
  const SuperElement one = SuperElement::one(bra.ring);

  const SuperElement ip = inner(bra);
  r.add("inner_is_1", ip == one, "<psi|psi> = " + ip.to_string());

  const SuperMorphism p = projector_p(bra);
  r.add("p_even", p.degree() == Parity::Even);
  const SuperMorphism residual = compose(p, p) - p;
  r.add("p_idempotent", residual.is_zero(), "residual " + (residual.is_zero() ? std::string("0") : residual.to_string()));
  r.add("p_self_adjoint", superadjoint(p) == p);

  Rng rng(seed);
  bool idem = true, rank_one = true, matches_matrix = true;
  for (unsigned t = 0; t < vectors; ++t) {
    const ModElement v = random_landi_vector(rng, bra);
    const ModElement w = pi_apply(bra, v);
    idem = idem && pi_apply(bra, w) == w;
    matches_matrix = matches_matrix && apply(p, v) == w;
    ModElement ketv(bra.ring, bra.type(), ket(bra));
    rank_one = rank_one && ketv.times(pairing(bra, v)) == w;
  }
  r.add("pi_idempotent", idem, std::to_string(vectors) + " random vectors");
  r.add("pi_is_p", matches_matrix);
  r.add("pi_rank_one", rank_one);
  r.notes.push_back("inner product taken as sum bra_i * (bra_i)^involuted");
  return r;
}

}  // namespace supermod
