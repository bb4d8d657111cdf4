#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "number.hpp"

namespace supermod {

/// Exponent vector of a commutative monomial, one slot per ring variable.
using Exponents = std::vector<std::uint16_t>;

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

inline unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

/// Graded order: lower total degree first, then larger leading exponents first
/// (so x0 comes before x1).
struct ExponentOrder {
  bool operator()(const Exponents& a, const Exponents& b) const {
    const unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  }
};

/// Rewrite rule lead -> rhs. The rhs must not mention any variable that
/// occurs in lead, which makes repeated substitution terminate and (being a
/// single rule) confluent.
struct Relation {
  Exponents lead;
  std::vector<std::pair<Exponents, Number>> rhs;

  bool operator==(const Relation&) const = default;
};

/// Commutative coefficient ring: polynomials over a number domain in zero or
/// more variables, modulo at most one relation. With no variables this is
/// just the number domain itself.
class CoeffRing {
 public:
  explicit CoeffRing(NumberDomain domain, std::vector<std::string> vars = {},
                     std::optional<Relation> relation = std::nullopt)
      : domain_(domain), vars_(std::move(vars)), relation_(std::move(relation)) {
    validate();
  }

  static CoeffRing rational() { return CoeffRing(NumberDomain::rational()); }

  /// domain[x0..xn] / (x0^2 + ... + xn^2 - 1), written as x0^2 -> 1 - sum xi^2.
  static CoeffRing sphere(NumberDomain domain, unsigned n) {
    std::vector<std::string> vars;
    for (unsigned i = 0; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    Relation rel;
    rel.lead = Exponents(n + 1, 0);
    rel.lead[0] = 2;
    rel.rhs.push_back({Exponents(n + 1, 0), Number(1)});
    for (unsigned i = 1; i <= n; ++i) {
      Exponents e(n + 1, 0);
      e[i] = 2;
      rel.rhs.push_back({e, domain.neg(Number(1))});
    }
    return CoeffRing(domain, std::move(vars), std::move(rel));
  }

  /// Q[S, C] / (S^2 + C^2 - 1): values of sin and cos at a symbolic angle.
  static CoeffRing trig() {
    Relation rel;
    rel.lead = {2, 0};
    rel.rhs = {{{0, 0}, Number(1)}, {{0, 2}, Number(-1)}};
    return CoeffRing(NumberDomain::rational(), {"S", "C"}, std::move(rel));
  }

  const NumberDomain& domain() const noexcept { return domain_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  std::size_t var_count() const noexcept { return vars_.size(); }
  const std::optional<Relation>& relation() const noexcept { return relation_; }

  std::optional<std::size_t> var_index(const std::string& name) const {
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
  }

  Exponents unit_exponents() const { return Exponents(vars_.size(), 0); }

  bool operator==(const CoeffRing&) const = default;

  /// Rewrites c * x^e into normal form and hands each resulting term to
  /// emit(exponents, coefficient). Coefficients are not reduced here.
  template <class Emit>
  void rewrite(const Exponents& e, const Number& c, Emit&& emit) const {
    if (!relation_ || !divides(relation_->lead, e)) {
      emit(e, c);
      return;
    }
    Exponents rest(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) rest[k] = e[k] - relation_->lead[k];
    for (const auto& [m, coeff] : relation_->rhs)
      rewrite(add_exponents(rest, m), c * coeff, emit);
  }

  /// Adds c * x^e (rewritten to normal form) into a term map keyed by Key,
  /// where make_key turns an exponent vector into a Key.
  template <class Map, class MakeKey>
  void accumulate(Map& terms, const Exponents& e, const Number& c, MakeKey&& make_key) const {
    rewrite(e, c, [&](const Exponents& ne, const Number& nc) {
      auto key = make_key(ne);
      auto it = terms.find(key);
      if (it == terms.end()) {
        Number v = domain_.reduce(nc);
        if (!v.is_zero()) terms.emplace(std::move(key), std::move(v));
      } else {
        it->second = domain_.add(it->second, nc);
        if (it->second.is_zero()) terms.erase(it);
      }
    });
  }

  std::string describe() const {
    if (vars_.empty()) return domain_.name();
    std::string s = domain_.name() + "[";
    for (std::size_t k = 0; k < vars_.size(); ++k) s += (k ? "," : "") + vars_[k];
    s += "]";
    if (relation_) s += "/(1 relation)";
    return s;
  }

 private:
  void validate() const {
    for (std::size_t a = 0; a < vars_.size(); ++a)
      for (std::size_t b = a + 1; b < vars_.size(); ++b)
        if (vars_[a] == vars_[b]) throw PreconditionError("duplicate variable " + vars_[a]);
    if (!relation_) return;
    const auto& rel = *relation_;
    if (rel.lead.size() != vars_.size())
      throw PreconditionError("relation lead has wrong arity");
    if (total_degree(rel.lead) == 0)
      throw PreconditionError("relation lead must be a non-constant monomial");
    for (const auto& [m, c] : rel.rhs) {
      if (m.size() != vars_.size()) throw PreconditionError("relation rhs has wrong arity");
      for (std::size_t k = 0; k < m.size(); ++k)
        if (rel.lead[k] > 0 && m[k] > 0)
          throw PreconditionError("relation rhs mentions leading variable " + vars_[k]);
      domain_.reduce(c);
    }
  }

  NumberDomain domain_;
  std::vector<std::string> vars_;
  std::optional<Relation> relation_;
};

using CoeffRingPtr = std::shared_ptr<const CoeffRing>;

inline bool same_ring(const CoeffRingPtr& a, const CoeffRingPtr& b) {
  return a == b || (a && b && *a == *b);
}

/// Element of a CoeffRing, always kept in normal form.
class PolyValue {
 public:
  using Terms = std::map<Exponents, Number, ExponentOrder>;

  explicit PolyValue(CoeffRingPtr ring) : ring_(std::move(ring)) {}

  PolyValue(CoeffRingPtr ring, const Number& c) : ring_(std::move(ring)) {
    add_term(ring_->unit_exponents(), c);
  }

  /// Builds from arbitrary (possibly non-normal) terms.
  static PolyValue from_terms(CoeffRingPtr ring,
                              const std::vector<std::pair<Exponents, Number>>& raw) {
    PolyValue p(std::move(ring));
    for (const auto& [e, c] : raw) {
      if (e.size() != p.ring_->var_count())
        throw ShapeError("exponent vector has wrong arity");
      p.add_term(e, c);
    }
    return p;
  }

  static PolyValue variable(CoeffRingPtr ring, const std::string& name) {
    auto idx = ring->var_index(name);
    if (!idx) throw PreconditionError("unknown variable " + name);
    Exponents e = ring->unit_exponents();
    e[*idx] = 1;
    return from_terms(ring, {{e, Number(1)}});
  }

  const CoeffRingPtr& ring() const noexcept { return ring_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Constant value when the polynomial has no variable terms.
  std::optional<Number> as_constant() const {
    if (terms_.empty()) return Number{};
    if (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0)
      return terms_.begin()->second;
    return std::nullopt;
  }

  Number constant_term() const {
    auto it = terms_.find(ring_->unit_exponents());
    return it == terms_.end() ? Number{} : it->second;
  }

  PolyValue& operator+=(const PolyValue& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  PolyValue& operator-=(const PolyValue& o) { return *this += -o; }

  PolyValue operator-() const {
    PolyValue out(ring_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, ring_->domain().neg(c));
    return out;
  }

  friend PolyValue operator+(PolyValue a, const PolyValue& b) { return a += b; }
  friend PolyValue operator-(PolyValue a, const PolyValue& b) { return a -= b; }

  friend PolyValue operator*(const PolyValue& a, const PolyValue& b) {
    a.check(b);
    PolyValue out(a.ring_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
    return out;
  }

  PolyValue scaled(const Number& c) const {
    PolyValue out(ring_);
    for (const auto& [e, v] : terms_) out.add_term(e, v * c);
    return out;
  }

  bool operator==(const PolyValue& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Number& c) {
    ring_->accumulate(terms_, e, c, [](const Exponents& x) { return x; });
  }

  void check(const PolyValue& o) const {
    if (!same_ring(ring_, o.ring_))
      throw RingMismatch("operands belong to different coefficient rings");
  }

  CoeffRingPtr ring_;
  Terms terms_;
};

/// Re-normalizes p. Values are always normal already, so this is the
/// identity on well-formed inputs; it exists to state that contract.
inline PolyValue normal_form(const PolyValue& p) {
  std::vector<std::pair<Exponents, Number>> raw(p.terms().begin(), p.terms().end());
  return PolyValue::from_terms(p.ring(), raw);
}

/// "x0^2*x1" style monomial text; empty string for the unit monomial.
inline std::string monomial_text(const std::vector<std::string>& vars, const Exponents& e) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

/// Joins "coefficient * monomial" terms into canonical text.
inline void append_term(std::string& out, const Number& c, const std::string& monomial) {
  std::string coeff = c.to_string();
  bool negative = false;
  if (coeff.front() == '-') {
    negative = true;
    coeff.erase(0, 1);
  }
  std::string body;
  if (monomial.empty())
    body = coeff;
  else if (coeff == "1")
    body = monomial;
  else
    body = coeff + "*" + monomial;
  if (out.empty())
    out = negative ? "-" + body : body;
  else
    out += negative ? " - " + body : " + " + body;
}

inline std::string PolyValue::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) append_term(s, c, monomial_text(ring_->vars(), e));
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const PolyValue& x) { return os << x.to_string(); }

}  // namespace supermod
