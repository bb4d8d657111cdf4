#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace supermod {

/// Which number system the coefficients of a ring live in.
enum class NumberKind {
  Rational,
  GaussianRational,
  /// Gaussian rationals with square roots of positive integers adjoined.
  GaussianRadical,
  IntegerModN,
};

/// Exact scalar: a finite sum of (re + im*i) * sqrt(d) over squarefree d >= 1.
///
/// A rational is the single part d = 1 with im = 0. The representation is
/// closed under +, -, * for every kind, so only IntegerModN needs an extra
/// reduction step (see NumberDomain::reduce).
class Number {
 public:
  struct Part {
    std::uint64_t radicand;
    mpq_class re;
    mpq_class im;

    bool operator==(const Part& o) const {
      return radicand == o.radicand && re == o.re && im == o.im;
    }
  };

  Number() = default;
  Number(long v) : Number(mpq_class(v)) {}
  Number(int v) : Number(mpq_class(v)) {}
  Number(mpq_class q) {
    q.canonicalize();
    if (q != 0) parts_.push_back({1, std::move(q), 0});
  }
  Number(const mpz_class& z) : Number(mpq_class(z)) {}

  static Number gaussian(mpq_class re, mpq_class im) {
    Number n;
    re.canonicalize();
    im.canonicalize();
    if (re != 0 || im != 0) n.parts_.push_back({1, std::move(re), std::move(im)});
    return n;
  }

  static Number imaginary_unit() { return gaussian(0, 1); }

  /// sqrt(k) as s*sqrt(d) with d squarefree.
  static Number sqrt_of(std::uint64_t k) {
    if (k == 0) return Number{};
    std::uint64_t square = 1, rest = k;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
      while (rest % (p * p) == 0) {
        square *= p;
        rest /= p * p;
      }
    }
    Number n;
    n.parts_.push_back({rest, mpq_class(mpz_class(static_cast<unsigned long>(square))), 0});
    return n;
  }

  bool is_zero() const noexcept { return parts_.empty(); }
  const std::vector<Part>& parts() const noexcept { return parts_; }

  /// Value as a plain rational, if it is one.
  std::optional<mpq_class> as_rational() const {
    if (parts_.empty()) return mpq_class(0);
    if (parts_.size() == 1 && parts_[0].radicand == 1 && parts_[0].im == 0)
      return parts_[0].re;
    return std::nullopt;
  }

  bool is_rational() const { return as_rational().has_value(); }

  bool has_radicals() const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [](const Part& p) { return p.radicand != 1; });
  }

  bool has_imaginary() const {
    return std::any_of(parts_.begin(), parts_.end(),
                       [](const Part& p) { return p.im != 0; });
  }

  /// Complex conjugation; radicals are real.
  Number conj() const {
    Number out = *this;
    for (auto& p : out.parts_) p.im = -p.im;
    return out;
  }

  Number operator-() const {
    Number out = *this;
    for (auto& p : out.parts_) {
      p.re = -p.re;
      p.im = -p.im;
    }
    return out;
  }

  Number& operator+=(const Number& o) {
    std::vector<Part> merged;
    merged.reserve(parts_.size() + o.parts_.size());
    auto a = parts_.begin();
    auto b = o.parts_.begin();
    while (a != parts_.end() || b != o.parts_.end()) {
      if (b == o.parts_.end() || (a != parts_.end() && a->radicand < b->radicand)) {
        merged.push_back(*a++);
      } else if (a == parts_.end() || b->radicand < a->radicand) {
        merged.push_back(*b++);
      } else {
        Part p{a->radicand, a->re + b->re, a->im + b->im};
        if (p.re != 0 || p.im != 0) merged.push_back(std::move(p));
        ++a;
        ++b;
      }
    }
    parts_ = std::move(merged);
    return *this;
  }

  Number& operator-=(const Number& o) { return *this += -o; }

  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }

  friend Number operator*(const Number& a, const Number& b) {
    Number out;
    for (const auto& x : a.parts_) {
      for (const auto& y : b.parts_) {
        // sqrt(d1) sqrt(d2) = g sqrt((d1/g)(d2/g)) with g = gcd(d1, d2)
        const std::uint64_t g = std::gcd(x.radicand, y.radicand);
        const std::uint64_t d = (x.radicand / g) * (y.radicand / g);
        const mpq_class scale(mpz_class(static_cast<unsigned long>(g)));
        Number term;
        mpq_class re = (x.re * y.re - x.im * y.im) * scale;
        mpq_class im = (x.re * y.im + x.im * y.re) * scale;
        if (re != 0 || im != 0) term.parts_.push_back({d, std::move(re), std::move(im)});
        out += term;
      }
    }
    return out;
  }

  Number& operator*=(const Number& o) { return *this = *this * o; }

  bool operator==(const Number& o) const { return parts_ == o.parts_; }

  /// Canonical text: "3/4", "-2", "1/2*i", "(1+2*i)", "3*sqrt(2)",
  /// "(1+sqrt(2))". Parenthesized whenever more than one summand appears,
  /// so the result can be used as a factor.
  std::string to_string() const {
    if (parts_.empty()) return "0";
    std::vector<std::string> pieces;
    for (const auto& p : parts_) {
      const std::string rad =
          p.radicand == 1 ? "" : "sqrt(" + std::to_string(p.radicand) + ")";
      auto piece = [&](const mpq_class& q, const std::string& unit) {
        if (q == 0) return;
        std::string u = unit;
        if (!rad.empty()) u = u.empty() ? rad : u + "*" + rad;
        if (u.empty()) {
          pieces.push_back(q.get_str());
        } else if (q == 1) {
          pieces.push_back(u);
        } else if (q == -1) {
          pieces.push_back("-" + u);
        } else {
          pieces.push_back(q.get_str() + "*" + u);
        }
      };
      piece(p.re, "");
      piece(p.im, "i");
    }
    if (pieces.size() == 1) return pieces.front();
    std::string s = "(" + pieces.front();
    for (std::size_t k = 1; k < pieces.size(); ++k) {
      if (pieces[k].front() == '-')
        s += pieces[k];
      else
        s += "+" + pieces[k];
    }
    return s + ")";
  }

 private:
  std::vector<Part> parts_;  // sorted by radicand, no zero parts
};

/// Number system plus (for IntegerModN) the modulus. Arithmetic that must
/// respect the kind goes through here.
class NumberDomain {
 public:
  NumberDomain() = default;

  static NumberDomain rational() { return NumberDomain(NumberKind::Rational, 0); }
  static NumberDomain gaussian() { return NumberDomain(NumberKind::GaussianRational, 0); }
  static NumberDomain gaussian_radical() {
    return NumberDomain(NumberKind::GaussianRadical, 0);
  }
  static NumberDomain integers_mod(std::uint64_t n) {
    if (n < 2) throw PreconditionError("IntegerModN requires n >= 2");
    return NumberDomain(NumberKind::IntegerModN, n);
  }

  NumberKind kind() const noexcept { return kind_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept {
    return kind_ != NumberKind::IntegerModN;
  }
  bool is_complex() const noexcept {
    return kind_ == NumberKind::GaussianRational || kind_ == NumberKind::GaussianRadical;
  }

  bool operator==(const NumberDomain&) const = default;

  std::string name() const {
    switch (kind_) {
      case NumberKind::Rational: return "Q";
      case NumberKind::GaussianRational: return "Q(i)";
      case NumberKind::GaussianRadical: return "Q(i,sqrt)";
      case NumberKind::IntegerModN: return "Z/" + std::to_string(modulus_);
    }
    return "?";
  }

  /// Brings a value into canonical form for this domain, or throws if the
  /// value cannot live here (imaginary parts in Q, radicals in Q(i), ...).
  Number reduce(const Number& v) const {
    switch (kind_) {
      case NumberKind::Rational:
        if (!v.is_rational())
          throw PreconditionError("value " + v.to_string() + " is not rational");
        return v;
      case NumberKind::GaussianRational:
        if (v.has_radicals())
          throw PreconditionError("value " + v.to_string() + " is not a Gaussian rational");
        return v;
      case NumberKind::GaussianRadical:
        return v;
      case NumberKind::IntegerModN: {
        auto q = v.as_rational();
        if (!q) throw PreconditionError("value " + v.to_string() + " is not an integer residue");
        const mpz_class n(static_cast<unsigned long>(modulus_));
        mpz_class num = q->get_num() % n;
        if (num < 0) num += n;
        mpz_class den = q->get_den() % n;
        if (den != 1) {
          mpz_class inv;
          if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0)
            throw PreconditionError("denominator of " + q->get_str() +
                                    " is not invertible mod " + n.get_str());
          num = (num * inv) % n;
        }
        return Number(mpq_class(num));
      }
    }
    return v;
  }

  Number add(const Number& a, const Number& b) const { return finish(a + b); }
  Number sub(const Number& a, const Number& b) const { return finish(a - b); }
  Number mul(const Number& a, const Number& b) const { return finish(a * b); }
  Number neg(const Number& a) const { return finish(-a); }

  /// Multiplicative inverse. Supported for Gaussian rationals, single-radical
  /// values c*sqrt(d), and units mod n.
  Number inverse(const Number& a) const {
    if (a.is_zero()) throw PreconditionError("inverse of zero");
    if (kind_ == NumberKind::IntegerModN) {
      const mpz_class n(static_cast<unsigned long>(modulus_));
      const mpz_class v = a.as_rational()->get_num();
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t()) == 0)
        throw PreconditionError(v.get_str() + " is not a unit mod " + n.get_str());
      return Number(mpq_class(inv));
    }
    if (a.parts().size() != 1)
      throw Unsupported("inverse of multi-radical value " + a.to_string());
    const auto& p = a.parts().front();
    // 1 / ((re + i im) sqrt(d)) = (re - i im) sqrt(d) / ((re^2 + im^2) d)
    const mpq_class denom =
        (p.re * p.re + p.im * p.im) * mpq_class(mpz_class(static_cast<unsigned long>(p.radicand)));
    Number out = Number::gaussian(p.re / denom, -p.im / denom);
    if (p.radicand != 1) out = out * Number::sqrt_of(p.radicand);
    return out;
  }

  Number div(const Number& a, const Number& b) const { return mul(a, inverse(b)); }

  Number conj(const Number& a) const { return a.conj(); }

 private:
  NumberDomain(NumberKind k, std::uint64_t n) : kind_(k), modulus_(n) {}

  Number finish(const Number& v) const {
    return kind_ == NumberKind::IntegerModN ? reduce(v) : v;
  }

  NumberKind kind_ = NumberKind::Rational;
  std::uint64_t modulus_ = 0;
};

/// Exact square root of a non-negative rational, when it is a rational.
inline std::optional<mpq_class> rational_sqrt(const mpq_class& q) {
  if (q < 0) return std::nullopt;
  const mpz_class num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  mpq_class root(rn, rd);
  root.canonicalize();
  return root;
}

inline mpz_class factorial(unsigned n) {
  mpz_class f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Number& x) { return os << x.to_string(); }

}  // namespace supermod
