#pragma once

#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "coeff_ring.hpp"
#include "error.hpp"
#include "multiindex.hpp"
#include "number.hpp"

namespace supermod {

/// How the graded involution squares: Graded gives (x◇)◇ = (-1)^|x| x,
/// Plain gives (x◇)◇ = x.
enum class DoubleInvolution { Graded, Plain };

/// Involutive pairing of generator names, e.g. a <-> ad, eta <-> etad.
struct Involution {
  std::vector<std::pair<std::string, std::string>> pairs;
  DoubleInvolution convention = DoubleInvolution::Graded;

  bool operator==(const Involution&) const = default;
};

/// Where a generator name lives.
struct GeneratorRef {
  Parity parity;
  std::size_t index;  // even: variable slot (0-based); odd: multi-index entry (1-based)
};

/// Super commutative ring: a CoeffRing (even part, commuting) tensored with a
/// Grassmann algebra on the odd generators.
class SuperRing {
 public:
  SuperRing(CoeffRing coeffs, std::vector<std::string> odd_names,
            std::optional<Involution> involution = std::nullopt)
      : coeffs_(std::make_shared<const CoeffRing>(std::move(coeffs))),
        odd_(std::move(odd_names)),
        involution_(std::move(involution)) {
    validate();
  }

  const CoeffRingPtr& coeffs() const noexcept { return coeffs_; }
  const NumberDomain& domain() const noexcept { return coeffs_->domain(); }
  const std::vector<std::string>& odd_names() const noexcept { return odd_; }
  unsigned odd_count() const noexcept { return static_cast<unsigned>(odd_.size()); }
  const std::optional<Involution>& involution() const noexcept { return involution_; }

  /// No even polynomial generators: a Grassmann algebra over a number domain.
  bool is_pure_grassmann() const noexcept { return coeffs_->var_count() == 0; }

  std::optional<GeneratorRef> find(const std::string& name) const {
    if (auto k = coeffs_->var_index(name)) return GeneratorRef{Parity::Even, *k};
    for (std::size_t k = 0; k < odd_.size(); ++k)
      if (odd_[k] == name) return GeneratorRef{Parity::Odd, k + 1};
    return std::nullopt;
  }

  bool operator==(const SuperRing& o) const {
    return *coeffs_ == *o.coeffs_ && odd_ == o.odd_ && involution_ == o.involution_;
  }

  std::string describe() const {
    std::string s = coeffs_->describe();
    if (!odd_.empty()) {
      s += " x Grassmann(";
      for (std::size_t k = 0; k < odd_.size(); ++k) s += (k ? "," : "") + odd_[k];
      s += ")";
    }
    return s;
  }

 private:
  void validate() const {
    if (odd_.size() > kMaxGenerators)
      throw CapacityError("at most 64 odd generators are supported");
    std::vector<std::string> all = coeffs_->vars();
    all.insert(all.end(), odd_.begin(), odd_.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
      throw PreconditionError("generator names must be unique");
    if (!involution_) return;
    std::vector<std::string> seen;
    for (const auto& [u, v] : involution_->pairs) {
      auto gu = find(u), gv = find(v);
      if (!gu || !gv) throw PreconditionError("involution names unknown generator");
      if (gu->parity != gv->parity)
        throw PreconditionError("involution pairs generators of different parity");
      if (u == v && gu->parity == Parity::Odd &&
          involution_->convention == DoubleInvolution::Graded)
        throw PreconditionError("odd generator cannot be self-paired under graded convention");
      for (const auto& n : {u, v}) {
        if (std::find(seen.begin(), seen.end(), n) != seen.end() && u != v)
          throw PreconditionError("generator " + n + " paired twice");
        seen.push_back(n);
      }
    }
  }

  CoeffRingPtr coeffs_;
  std::vector<std::string> odd_;
  std::optional<Involution> involution_;
};

using RingPtr = std::shared_ptr<const SuperRing>;

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

inline RingPtr make_ring(CoeffRing coeffs, std::vector<std::string> odd = {},
                         std::optional<Involution> involution = std::nullopt) {
  return std::make_shared<const SuperRing>(std::move(coeffs), std::move(odd),
                                           std::move(involution));
}

inline std::vector<std::string> numbered_names(const std::string& prefix, unsigned count) {
  std::vector<std::string> names;
  for (unsigned k = 1; k <= count; ++k) names.push_back(prefix + std::to_string(k));
  return names;
}

/// Grassmann algebra on generators b1..bL over a number domain.
inline RingPtr grassmann_ring(unsigned generators,
                              NumberDomain domain = NumberDomain::rational(),
                              const std::string& prefix = "b") {
  return make_ring(CoeffRing(domain), numbered_names(prefix, generators));
}

/// Monomial of a super polynomial ring: odd part (multi-index) and even part.
struct Monomial {
  MultiIndex odd;
  Exponents even;

  bool operator==(const Monomial&) const = default;
};

/// Canonical term order: by odd multi-index (graded lex), then even part.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.odd != b.odd) return a.odd < b.odd;
    return ExponentOrder{}(a.even, b.even);
  }
};

/// Finite sum of coefficient * even monomial * odd monomial, in normal form.
class SuperElement {
 public:
  using Terms = std::map<Monomial, Number, MonomialOrder>;

  explicit SuperElement(RingPtr ring) : ring_(std::move(ring)) {}

  SuperElement(RingPtr ring, const Number& c) : ring_(std::move(ring)) {
    add_term({MultiIndex{}, ring_->coeffs()->unit_exponents()}, c);
  }

  static SuperElement zero(RingPtr ring) { return SuperElement(std::move(ring)); }
  static SuperElement one(RingPtr ring) { return SuperElement(std::move(ring), Number(1)); }

  /// Generator by name, even or odd.
  static SuperElement generator(RingPtr ring, const std::string& name) {
    auto ref = ring->find(name);
    if (!ref) throw PreconditionError("unknown generator " + name);
    Monomial m{MultiIndex{}, ring->coeffs()->unit_exponents()};
    if (ref->parity == Parity::Even)
      m.even[ref->index] = 1;
    else
      m.odd = MultiIndex::from_mask(std::uint64_t{1} << (ref->index - 1));
    SuperElement x(std::move(ring));
    x.add_term(m, Number(1));
    return x;
  }

  /// Odd generator by 1-based position.
  static SuperElement odd_generator(RingPtr ring, unsigned index) {
    if (index == 0 || index > ring->odd_count())
      throw PreconditionError("odd generator index out of range");
    return odd_monomial(std::move(ring), MultiIndex::from_mask(std::uint64_t{1} << (index - 1)));
  }

  /// beta_mu with coefficient c.
  static SuperElement odd_monomial(RingPtr ring, MultiIndex mu, const Number& c = Number(1)) {
    if (mu.max_index() > ring->odd_count())
      throw PreconditionError("multi-index exceeds odd generator count");
    SuperElement x(ring);
    x.add_term({mu, ring->coeffs()->unit_exponents()}, c);
    return x;
  }

  /// Embeds an even coefficient-ring value.
  static SuperElement from_poly(RingPtr ring, const PolyValue& p) {
    if (!same_ring(ring->coeffs(), p.ring()))
      throw RingMismatch("polynomial does not belong to the ring's coefficients");
    SuperElement x(std::move(ring));
    for (const auto& [e, c] : p.terms()) x.terms_.emplace(Monomial{MultiIndex{}, e}, c);
    return x;
  }

  /// Builds from arbitrary (possibly non-normal) terms.
  static SuperElement from_terms(RingPtr ring, const std::vector<std::pair<Monomial, Number>>& raw) {
    SuperElement x(std::move(ring));
    for (const auto& [m, c] : raw) {
      if (m.even.size() != x.ring_->coeffs()->var_count())
        throw ShapeError("even exponent vector has wrong arity");
      if (m.odd.max_index() > x.ring_->odd_count())
        throw PreconditionError("multi-index exceeds odd generator count");
      x.add_term(m, c);
    }
    return x;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }

  /// Coefficient of the odd monomial beta_mu, as an element of the CoeffRing.
  PolyValue coefficient(MultiIndex mu) const {
    std::vector<std::pair<Exponents, Number>> raw;
    for (const auto& [m, c] : terms_)
      if (m.odd == mu) raw.emplace_back(m.even, c);
    return PolyValue::from_terms(ring_->coeffs(), raw);
  }

  /// Number coefficient of a full monomial.
  Number coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Number{} : it->second;
  }

  /// Degree of a homogeneous element; nullopt when inhomogeneous. Zero
  /// reports Even.
  std::optional<Parity> degree() const {
    if (terms_.empty()) return Parity::Even;
    const Parity p = terms_.begin()->first.odd.parity();
    for (const auto& [m, c] : terms_)
      if (m.odd.parity() != p) return std::nullopt;
    return p;
  }

  /// True when the element lies in the given homogeneous component (zero lies
  /// in both).
  bool has_parity(Parity p) const {
    for (const auto& [m, c] : terms_)
      if (m.odd.parity() != p) return false;
    return true;
  }

  bool is_homogeneous() const { return degree().has_value(); }

  /// Component of the given parity.
  SuperElement part(Parity p) const {
    SuperElement out(ring_);
    for (const auto& [m, c] : terms_)
      if (m.odd.parity() == p) out.terms_.emplace(m, c);
    return out;
  }

  SuperElement even_part() const { return part(Parity::Even); }
  SuperElement odd_part() const { return part(Parity::Odd); }

  SuperElement& operator+=(const SuperElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_reduced(m, c);
    return *this;
  }

  SuperElement& operator-=(const SuperElement& o) {
    check(o);
    for (const auto& [m, c] : o.terms_) add_reduced(m, ring_->domain().neg(c));
    return *this;
  }

  SuperElement operator-() const {
    SuperElement out(ring_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, ring_->domain().neg(c));
    return out;
  }

  friend SuperElement operator+(SuperElement a, const SuperElement& b) { return a += b; }
  friend SuperElement operator-(SuperElement a, const SuperElement& b) { return a -= b; }

  friend SuperElement operator*(const SuperElement& a, const SuperElement& b) {
    a.check(b);
    SuperElement out(a.ring_);
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        auto merged = merge_sign(ma.odd, mb.odd);
        if (!merged) continue;
        Number c = ca * cb;
        if (merged->sign < 0) c = -c;
        out.add_term({merged->index, add_exponents(ma.even, mb.even)}, c);
      }
    }
    return out;
  }

  SuperElement& operator*=(const SuperElement& o) { return *this = *this * o; }

  SuperElement scaled(const Number& c) const {
    SuperElement out(ring_);
    for (const auto& [m, v] : terms_) out.add_reduced(m, v * c);
    return out;
  }

  bool operator==(const SuperElement& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }

  /// Canonical text, terms sorted by odd multi-index then even monomial.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) append_term(s, c, monomial_text(m));
    return s;
  }

  std::string monomial_text(const Monomial& m) const {
    std::string s = supermod::monomial_text(ring_->coeffs()->vars(), m.even);
    for (unsigned i : m.odd.indices()) {
      if (!s.empty()) s += "*";
      s += ring_->odd_names()[i - 1];
    }
    return s;
  }

 private:
  void add_term(const Monomial& m, const Number& c) {
    ring_->coeffs()->accumulate(terms_, m.even, c,
                                [&](const Exponents& e) { return Monomial{m.odd, e}; });
  }

  // For terms already in normal form.
  void add_reduced(const Monomial& m, const Number& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      Number v = ring_->domain().reduce(c);
      if (!v.is_zero()) terms_.emplace(m, std::move(v));
    } else {
      it->second = ring_->domain().add(it->second, c);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void check(const SuperElement& o) const {
    if (!same_ring(ring_, o.ring_))
      throw RingMismatch("operands belong to different rings: " + ring_->describe() +
                         " vs " + o.ring_->describe());
  }

  RingPtr ring_;
  Terms terms_;
};

inline SuperElement operator*(const Number& c, const SuperElement& x) { return x.scaled(c); }

/// (even, odd) components; their sum is x.
inline std::pair<SuperElement, SuperElement> grade_split(const SuperElement& x) {
  return {x.even_part(), x.odd_part()};
}

inline void require_pure_grassmann(const SuperElement& x, const char* what) {
  if (!x.ring()->is_pure_grassmann())
    throw Unsupported(std::string(what) +
                      " is only defined on Grassmann algebras without even generators");
}

/// Body map: coefficient of the empty multi-index.
inline Number body(const SuperElement& x) {
  require_pure_grassmann(x, "body");
  return x.coefficient(Monomial{MultiIndex{}, {}});
}

/// Soul map: x - body(x).
inline SuperElement soul(const SuperElement& x) {
  require_pure_grassmann(x, "soul");
  return x - SuperElement(x.ring(), body(x));
}

/// In a Grassmann algebra over a field, x is nilpotent iff its body is zero.
inline bool is_nilpotent(const SuperElement& x) {
  require_pure_grassmann(x, "is_nilpotent");
  if (!x.ring()->domain().is_field())
    throw Unsupported("is_nilpotent needs a coefficient field");
  return body(x).is_zero();
}

/// Exact power by repeated squaring; x^0 = 1.
inline SuperElement pow(const SuperElement& x, unsigned n) {
  SuperElement result = SuperElement::one(x.ring());
  SuperElement base = x;
  while (n > 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

/// Image of a single generator under the ring's involution.
inline SuperElement involute_generator(const RingPtr& ring, const std::string& name) {
  const auto& inv = ring->involution();
  if (!inv) throw Unsupported("ring has no involution table");
  const auto ref = ring->find(name);
  for (const auto& [u, v] : inv->pairs) {
    if (u == name) return SuperElement::generator(ring, v);
    if (v == name) {
      // Second member maps back to the first, with the double-involution sign.
      SuperElement img = SuperElement::generator(ring, u);
      if (ref->parity == Parity::Odd && inv->convention == DoubleInvolution::Graded && u != v)
        img = -img;
      return img;
    }
  }
  throw PreconditionError("generator " + name + " has no involution partner");
}

/// Graded involution: conjugate-linear, generators swapped per the table,
/// (xy)◇ = (-1)^(|x||y|) y◇ x◇.
inline SuperElement involute(const SuperElement& x) {
  const RingPtr& ring = x.ring();
  if (!ring->involution()) throw Unsupported("ring has no involution table");
  const auto& vars = ring->coeffs()->vars();
  std::vector<SuperElement> even_img, odd_img;
  for (const auto& v : vars) even_img.push_back(involute_generator(ring, v));
  for (const auto& o : ring->odd_names()) odd_img.push_back(involute_generator(ring, o));

  SuperElement out(ring);
  for (const auto& [m, c] : x.terms()) {
    SuperElement term(ring, ring->domain().conj(c));
    for (std::size_t k = 0; k < m.even.size(); ++k)
      for (unsigned e = 0; e < m.even[k]; ++e) term *= even_img[k];
    // (t1 t2 ... tk)◇ = (-1)^(k(k-1)/2) tk◇ ... t1◇
    const auto idx = m.odd.indices();
    const std::size_t k = idx.size();
    if ((k * (k - 1) / 2) % 2 == 1) term = -term;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) term *= odd_img[*it - 1];
    out += term;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const SuperElement& x) { return os << x.to_string(); }

}  // namespace supermod
