#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "superanalysis.hpp"
#include "supermodule.hpp"

namespace supermod {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Expressions

/// Recursive-descent parser for ring expressions:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' integer)?
///   atom   := integer | name | 'i' | 'sqrt' '(' integer ')' | '(' expr ')'
/// Division is only by nonzero constants.
class ExpressionParser {
 public:
  ExpressionParser(std::string text, RingPtr ring) : text_(std::move(text)), ring_(std::move(ring)) {}

  SuperElement parse() {
    SuperElement x = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  SuperElement expr() {
    SuperElement x = term();
    for (;;) {
      if (accept('+'))
        x += term();
      else if (accept('-'))
        x -= term();
      else
        return x;
    }
  }

  SuperElement term() {
    SuperElement x = unary();
    for (;;) {
      if (accept('*')) {
        x *= unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        const SuperElement d = unary();
        const auto c = constant_of(d);
        if (!c) throw ParseError("can only divide by a constant", at);
        if (c->is_zero()) throw ParseError("division by zero", at);
        try {
          x = x.scaled(ring_->domain().inverse(*c));
        } catch (const Error& e) {
          throw ParseError(e.what(), at);
        }
      } else {
        return x;
      }
    }
  }

  SuperElement unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  SuperElement power() {
    SuperElement base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t at = pos_;
      const mpz_class e = integer();
      if (!e.fits_uint_p() || e > 4096) throw ParseError("exponent too large", at);
      return pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(text_.substr(start, pos_ - start));
  }

  SuperElement constant(const Number& v, std::size_t at) {
    try {
      return SuperElement(ring_, ring_->domain().reduce(v));
    } catch (const Error& e) {
      throw ParseError(e.what(), at);
    }
  }

  SuperElement atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const std::size_t at = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SuperElement x = expr();
      expect(')');
      return x;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(Number(integer()), at);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name = text_.substr(at, pos_ - at);
      if (ring_->find(name)) return SuperElement::generator(ring_, name);
      if (name == "i") return constant(Number::imaginary_unit(), at);
      if (name == "sqrt") {
        expect('(');
        skip_space();
        const std::size_t arg_at = pos_;
        const mpz_class k = integer();
        expect(')');
        if (!k.fits_ulong_p()) throw ParseError("radicand too large", arg_at);
        return constant(Number::sqrt_of(k.get_ui()), at);
      }
      throw ParseError("unknown generator '" + name + "'", at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  static std::optional<Number> constant_of(const SuperElement& x) {
    if (x.is_zero()) return Number{};
    if (x.term_count() != 1) return std::nullopt;
    const auto& [m, c] = *x.terms().begin();
    if (!m.odd.empty() || total_degree(m.even) != 0) return std::nullopt;
    return c;
  }

  std::string text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

inline SuperElement parse_expression(const std::string& text, const RingPtr& ring) {
  return ExpressionParser(text, ring).parse();
}

/// A constant of the domain written as an expression, e.g. "-3/4", "(1+2*i)", "2*sqrt(2)".
inline Number parse_number(const std::string& text, const NumberDomain& domain) {
  const RingPtr ring = make_ring(CoeffRing(domain));
  const SuperElement x = parse_expression(text, ring);
  return x.coefficient(Monomial{MultiIndex{}, {}});
}

/// Element of a CoeffRing written as an expression in its variables.
inline PolyValue parse_poly(const std::string& text, const CoeffRingPtr& coeffs) {
  return parse_expression(text, make_ring(*coeffs)).coefficient(MultiIndex{});
}

// ---------------------------------------------------------------------------
// JSON helpers

inline Json load_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_json_text(ss.str());
}

[[noreturn]] inline void json_fail(const std::string& msg) { throw ParseError(msg, 0); }

inline const Json& json_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) json_fail(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

inline std::string json_string(const Json& j, const char* what) {
  if (!j.is_string()) json_fail(std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline unsigned json_unsigned(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    json_fail(std::string(what) + " must be a non-negative integer");
  return j.get<unsigned>();
}

/// Coefficients may be given as JSON integers or as expression strings.
inline Number json_number(const Json& j, const NumberDomain& domain) {
  if (j.is_number_integer()) return domain.reduce(Number(static_cast<long>(j.get<long long>())));
  return parse_number(json_string(j, "coefficient"), domain);
}

// ---------------------------------------------------------------------------
// Rings

inline Json domain_to_json(const NumberDomain& d) {
  switch (d.kind()) {
    case NumberKind::Rational: return {{"kind", "rational"}};
    case NumberKind::GaussianRational: return {{"kind", "gaussian_rational"}};
    case NumberKind::GaussianRadical: return {{"kind", "gaussian_radical"}};
    case NumberKind::IntegerModN: return {{"kind", "integer_mod_n"}, {"n", d.modulus()}};
  }
  return {};
}

inline bool is_domain_kind(const std::string& k) {
  return k == "rational" || k == "gaussian_rational" || k == "gaussian_radical" || k == "integer_mod_n";
}

inline NumberDomain domain_from_json(const Json& j) {
  const std::string kind = json_string(json_field(j, "kind"), "kind");
  if (kind == "rational") return NumberDomain::rational();
  if (kind == "gaussian_rational") return NumberDomain::gaussian();
  if (kind == "gaussian_radical") return NumberDomain::gaussian_radical();
  if (kind == "integer_mod_n") {
    try {
      return NumberDomain::integers_mod(json_unsigned(json_field(j, "n"), "n"));
    } catch (const PreconditionError& e) {
      json_fail(e.what());
    }
  }
  json_fail("unknown number domain kind \"" + kind + "\"");
}

/// Monomial text "a*ad", "x0^2"; a bare variable name stands for its square.
inline Exponents parse_lead(const std::string& text, const std::vector<std::string>& vars) {
  Exponents e(vars.size(), 0);
  const bool bare = text.find('*') == std::string::npos && text.find('^') == std::string::npos;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(start, end - start);
    factor.erase(0, factor.find_first_not_of(' '));
    factor.erase(factor.find_last_not_of(' ') + 1);
    unsigned power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      try {
        power = static_cast<unsigned>(std::stoul(factor.substr(caret + 1)));
      } catch (const std::exception&) {
        throw ParseError("bad exponent in relation lead", start + caret + 1);
      }
      factor.erase(caret);
    }
    auto it = std::find(vars.begin(), vars.end(), factor);
    if (it == vars.end()) throw ParseError("relation lead names unknown variable '" + factor + "'", start);
    e[static_cast<std::size_t>(it - vars.begin())] += bare ? 2 : power;
    start = end + 1;
  }
  return e;
}

inline Json coeff_ring_to_json(const CoeffRing& c) {
  if (c.var_count() == 0) return domain_to_json(c.domain());
  Json j{{"kind", "poly_quotient"}, {"base", domain_to_json(c.domain())}, {"vars", c.vars()}};
  if (c.relation()) {
    const auto& rel = *c.relation();
    std::string rhs;
    for (const auto& [m, v] : rel.rhs) append_term(rhs, v, monomial_text(c.vars(), m));
    j["relation"] = {{"lead", monomial_text(c.vars(), rel.lead)}, {"rhs", rhs.empty() ? "0" : rhs}};
  }
  return j;
}

inline CoeffRing coeff_ring_from_json(const Json& j) {
  const std::string kind = json_string(json_field(j, "kind"), "kind");
  if (is_domain_kind(kind)) return CoeffRing(domain_from_json(j));
  const NumberDomain base = j.contains("base") ? domain_from_json(j.at("base")) : NumberDomain::rational();
  if (kind == "trig") return CoeffRing::trig();
  if (kind == "sphere") return CoeffRing::sphere(base, json_unsigned(json_field(j, "n"), "n"));
  if (kind != "poly_quotient") json_fail("unknown coefficient ring kind \"" + kind + "\"");
  std::vector<std::string> vars;
  for (const auto& v : json_field(j, "vars")) vars.push_back(json_string(v, "variable name"));
  std::optional<Relation> rel;
  if (j.contains("relation")) {
    const Json& r = j.at("relation");
    Relation out;
    out.lead = parse_lead(json_string(json_field(r, "lead"), "relation lead"), vars);
    const CoeffRingPtr free_ring = std::make_shared<const CoeffRing>(base, vars);
    const PolyValue rhs = parse_poly(json_string(json_field(r, "rhs"), "relation rhs"), free_ring);
    for (const auto& [e, v] : rhs.terms()) out.rhs.emplace_back(e, v);
    rel = std::move(out);
  }
  try {
    return CoeffRing(base, std::move(vars), std::move(rel));
  } catch (const PreconditionError& e) {
    json_fail(e.what());
  }
}

inline Json ring_to_json(const RingPtr& r) {
  Json j{{"coeffs", coeff_ring_to_json(*r->coeffs())}, {"odd", r->odd_names()}};
  if (const auto& inv = r->involution()) {
    Json pairs = Json::array();
    for (const auto& [u, v] : inv->pairs) pairs.push_back({u, v});
    j["involution"] = {{"pairs", pairs},
                       {"double_sign", inv->convention == DoubleInvolution::Graded ? "graded" : "plain"}};
  }
  return j;
}

/// Accepts {"coeffs":..., "odd":[...] or {"prefix":"b","count":L}, "involution":...}.
inline RingPtr ring_from_json(const Json& j) {
  if (!j.is_object()) json_fail("ring descriptor must be an object");
  const CoeffRing coeffs = j.contains("coeffs") ? coeff_ring_from_json(j.at("coeffs")) : CoeffRing::rational();
  std::vector<std::string> odd;
  if (j.contains("odd")) {
    const Json& o = j.at("odd");
    if (o.is_array()) {
      for (const auto& n : o) odd.push_back(json_string(n, "odd generator name"));
    } else {
      odd = numbered_names(o.contains("prefix") ? json_string(o.at("prefix"), "prefix") : "b",
                           json_unsigned(json_field(o, "count"), "count"));
    }
  }
  std::optional<Involution> inv;
  if (j.contains("involution")) {
    const Json& i = j.at("involution");
    Involution out;
    for (const auto& p : json_field(i, "pairs")) {
      if (!p.is_array() || p.size() != 2) json_fail("involution pair must be a two-element array");
      out.pairs.emplace_back(json_string(p[0], "generator"), json_string(p[1], "generator"));
    }
    const std::string sign = i.contains("double_sign") ? json_string(i.at("double_sign"), "double_sign") : "graded";
    if (sign != "graded" && sign != "plain") json_fail("double_sign must be \"graded\" or \"plain\"");
    out.convention = sign == "graded" ? DoubleInvolution::Graded : DoubleInvolution::Plain;
    inv = std::move(out);
  }
  try {
    return make_ring(coeffs, std::move(odd), std::move(inv));
  } catch (const CapacityError&) {
    throw;
  } catch (const PreconditionError& e) {
    json_fail(e.what());
  }
}

// ---------------------------------------------------------------------------
// Elements and morphisms

inline Json element_terms_to_json(const SuperElement& x) {
  Json terms = Json::array();
  const auto& vars = x.ring()->coeffs()->vars();
  for (const auto& [m, c] : x.terms()) {
    Json even = Json::object();
    for (std::size_t k = 0; k < m.even.size(); ++k)
      if (m.even[k]) even[vars[k]] = m.even[k];
    terms.push_back({{"odd", m.odd.indices()}, {"even", even}, {"coeff", c.to_string()}});
  }
  return terms;
}

inline Json element_to_json(const SuperElement& x) {
  return {{"ring", ring_to_json(x.ring())}, {"terms", element_terms_to_json(x)}};
}

inline SuperElement element_terms_from_json(const Json& terms, const RingPtr& ring) {
  if (terms.is_string()) return parse_expression(terms.get<std::string>(), ring);
  if (terms.is_object() && terms.contains("terms")) return element_terms_from_json(terms.at("terms"), ring);
  if (!terms.is_array()) json_fail("element terms must be an array or an expression string");
  std::vector<std::pair<Monomial, Number>> raw;
  const auto& coeffs = ring->coeffs();
  for (const auto& t : terms) {
    std::vector<unsigned> idx;
    if (t.contains("odd"))
      for (const auto& i : t.at("odd")) idx.push_back(json_unsigned(i, "odd index"));
    Exponents even = coeffs->unit_exponents();
    if (t.contains("even"))
      for (const auto& [name, power] : t.at("even").items()) {
        const auto k = coeffs->var_index(name);
        if (!k) json_fail("unknown even generator \"" + name + "\"");
        even[*k] = static_cast<std::uint16_t>(json_unsigned(power, "exponent"));
      }
    // signed reordering of an unsorted index list, e.g. [2,1] = -b1*b2
    SuperElement mono = SuperElement::one(ring);
    for (unsigned i : idx) {
      if (i < 1 || i > ring->odd_count()) json_fail("odd index " + std::to_string(i) + " out of range");
      mono *= SuperElement::odd_generator(ring, i);
    }
    const Number c = json_number(json_field(t, "coeff"), ring->domain());
    for (const auto& [m, v] : mono.terms()) raw.emplace_back(Monomial{m.odd, even}, v * c);
  }
  return SuperElement::from_terms(ring, raw);
}

inline SuperElement element_from_json(const Json& j) {
  return element_terms_from_json(json_field(j, "terms"), ring_from_json(json_field(j, "ring")));
}

inline FreeType free_type_from_json(const Json& j) {
  return {json_unsigned(json_field(j, "p"), "p"), json_unsigned(json_field(j, "q"), "q")};
}

inline Json free_type_to_json(FreeType t) { return {{"p", t.p}, {"q", t.q}}; }

inline Json morphism_to_json(const SuperMorphism& phi) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < phi.cols(); ++j) row.push_back(phi.at(i, j).to_string());
    rows.push_back(row);
  }
  return {{"ring", ring_to_json(phi.ring())},
          {"source", free_type_to_json(phi.source())},
          {"target", free_type_to_json(phi.target())},
          {"matrix", rows}};
}

inline SuperMorphism morphism_from_json(const Json& j) {
  const RingPtr ring = ring_from_json(json_field(j, "ring"));
  const FreeType source = free_type_from_json(json_field(j, "source"));
  const FreeType target = j.contains("target") ? free_type_from_json(j.at("target")) : source;
  const Json& m = json_field(j, "matrix");
  if (!m.is_array() || m.size() != target.dim()) json_fail("matrix must have one row per target basis vector");
  SuperMorphism phi(ring, source, target);
  for (std::size_t i = 0; i < target.dim(); ++i) {
    if (!m[i].is_array() || m[i].size() != source.dim())
      json_fail("matrix row " + std::to_string(i) + " must have one entry per source basis vector");
    for (std::size_t k = 0; k < source.dim(); ++k) phi.at(i, k) = element_terms_from_json(m[i][k], ring);
  }
  return phi;
}

// ---------------------------------------------------------------------------
// Jets

inline std::string multidegree_key(const MultiDegree& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

inline MultiDegree parse_multidegree(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')')
    throw ParseError("multi-degree key must look like \"(i1,...,im)\"", 0);
  MultiDegree a;
  std::stringstream ss(key.substr(1, key.size() - 2));
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(part, &used);
      if (v < 0 || part.find_first_not_of(" 0123456789") != std::string::npos) throw std::invalid_argument("");
      a.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      throw ParseError("bad multi-degree entry \"" + part + "\"", 0);
    }
  }
  return a;
}

/// {"order":L, "table":{"(2)":"-S"}, "values":<coeff ring, default trig>,
///  "base":[...] (optional)}
inline Json jet_to_json(const Jet& f) {
  Json table = Json::object();
  for (const auto& [a, v] : f.table()) table[multidegree_key(a)] = v.to_string();
  Json j{{"order", f.order()}, {"arity", f.arity()}, {"values", coeff_ring_to_json(*f.values())}};
  if (f.base()) {
    Json base = Json::array();
    for (const auto& b : *f.base()) base.push_back(b.to_string());
    j["base"] = base;
  }
  j["table"] = table;
  return j;
}

inline Jet jet_from_json(const Json& j) {
  const unsigned order = json_unsigned(json_field(j, "order"), "order");
  const CoeffRingPtr values = std::make_shared<const CoeffRing>(
      j.contains("values") ? coeff_ring_from_json(j.at("values")) : CoeffRing::trig());
  const Json& table = json_field(j, "table");
  unsigned arity = j.contains("arity") ? json_unsigned(j.at("arity"), "arity") : 0;
  if (arity == 0)
    for (const auto& [k, v] : table.items()) arity = static_cast<unsigned>(parse_multidegree(k).size());
  if (arity == 0) arity = 1;
  std::optional<std::vector<Number>> base;
  if (j.contains("base")) {
    base.emplace();
    for (const auto& b : j.at("base")) base->push_back(json_number(b, values->domain()));
  }
  Jet f(values, arity, order, base);
  for (const auto& [k, v] : table.items()) {
    const MultiDegree a = parse_multidegree(k);
    if (a.size() != arity) json_fail("multi-degree " + k + " has wrong arity");
    f.set(a, parse_poly(json_string(v, "jet value"), values));
  }
  return f;
}

}  // namespace supermod
