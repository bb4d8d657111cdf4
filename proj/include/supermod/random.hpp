#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "coeff_ring.hpp"
#include "superring.hpp"

namespace supermod {

/// Seeded generator with draws that do not depend on the standard library's
/// distribution implementations, so reports are reproducible across builds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Shape of randomly drawn elements.
struct RandomSpec {
  unsigned max_terms = 4;
  unsigned max_even_degree = 2;
  std::int64_t coeff_bound = 5;  // numerators in [-bound, bound]
  std::int64_t max_denominator = 1;
};

inline Number random_number(Rng& rng, const NumberDomain& domain, const RandomSpec& spec) {
  auto draw = [&] {
    const std::int64_t num = rng.uniform(-spec.coeff_bound, spec.coeff_bound);
    const std::int64_t max_den =
        domain.kind() == NumberKind::IntegerModN ? 1 : std::max<std::int64_t>(1, spec.max_denominator);
    const std::int64_t den = rng.uniform(1, max_den);
    return mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
  };
  mpq_class re = draw();
  re.canonicalize();
  if (domain.is_complex()) {
    mpq_class im = draw();
    im.canonicalize();
    return Number::gaussian(re, im);
  }
  return domain.reduce(Number(re));
}

inline Exponents random_exponents(Rng& rng, std::size_t vars, unsigned max_degree) {
  Exponents e(vars, 0);
  if (vars == 0 || max_degree == 0) return e;
  const auto degree = static_cast<unsigned>(rng.uniform(0, max_degree));
  for (unsigned d = 0; d < degree; ++d) ++e[static_cast<std::size_t>(rng.uniform(0, vars - 1))];
  return e;
}

inline PolyValue random_poly(Rng& rng, const CoeffRingPtr& ring, const RandomSpec& spec = {}) {
  std::vector<std::pair<Exponents, Number>> raw;
  const auto terms = rng.uniform(0, spec.max_terms);
  for (std::int64_t t = 0; t < terms; ++t)
    raw.emplace_back(random_exponents(rng, ring->var_count(), spec.max_even_degree),
                     random_number(rng, ring->domain(), spec));
  return PolyValue::from_terms(ring, raw);
}

/// Random multi-index over `generators` odd generators, optionally of a
/// fixed parity.
inline MultiIndex random_multi_index(Rng& rng, unsigned generators,
                                     std::optional<Parity> parity = std::nullopt) {
  if (generators == 0) return MultiIndex{};
  const std::uint64_t full =
      generators == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << generators) - 1;
  for (;;) {
    auto m = MultiIndex::from_mask(rng.next() & full);
    if (!parity || m.parity() == *parity) return m;
  }
}

/// Random element; with a parity it is homogeneous of that degree. Odd
/// elements need at least one odd generator.
inline SuperElement random_element(Rng& rng, const RingPtr& ring,
                                   std::optional<Parity> parity = std::nullopt,
                                   const RandomSpec& spec = {}) {
  if (parity == Parity::Odd && ring->odd_count() == 0)
    throw PreconditionError("ring has no odd generators");
  std::vector<std::pair<Monomial, Number>> raw;
  const auto terms = rng.uniform(0, spec.max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    Monomial m{random_multi_index(rng, ring->odd_count(), parity),
               random_exponents(rng, ring->coeffs()->var_count(), spec.max_even_degree)};
    raw.emplace_back(std::move(m), random_number(rng, ring->domain(), spec));
  }
  return SuperElement::from_terms(ring, raw);
}

/// Random element with zero body: no term on the empty multi-index.
inline SuperElement random_soul(Rng& rng, const RingPtr& ring, const RandomSpec& spec = {}) {
  SuperElement x = random_element(rng, ring, std::nullopt, spec);
  return x - SuperElement::from_poly(ring, x.coefficient(MultiIndex{}));
}

inline SuperElement random_soul(Rng& rng, const RingPtr& ring, Parity parity,
                                const RandomSpec& spec = {}) {
  SuperElement x = random_element(rng, ring, parity, spec);
  return x - SuperElement::from_poly(ring, x.coefficient(MultiIndex{}));
}

}  // namespace supermod
