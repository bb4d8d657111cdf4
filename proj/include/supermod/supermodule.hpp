#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "multiindex.hpp"
#include "superring.hpp"

namespace supermod {

/// Type (p, q) of a finite free supermodule: p even basis vectors followed by
/// q odd ones.
struct FreeType {
  std::size_t p = 0;
  std::size_t q = 0;

  std::size_t dim() const noexcept { return p + q; }
  Parity basis_parity(std::size_t k) const noexcept {
    return k < p ? Parity::Even : Parity::Odd;
  }
  bool operator==(const FreeType&) const = default;
  std::string to_string() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
  }
};

inline FreeType direct_sum(FreeType a, FreeType b) { return {a.p + b.p, a.q + b.q}; }

inline FreeType tensor(FreeType a, FreeType b) {
  return {a.p * b.p + a.q * b.q, a.p * b.q + a.q * b.p};
}

/// Element sum_k b_k c_k of a free supermodule, coefficients on the right.
class ModElement {
 public:
  ModElement(RingPtr ring, FreeType type)
      : ring_(std::move(ring)), type_(type), coeffs_(type.dim(), SuperElement(ring_)) {}

  ModElement(RingPtr ring, FreeType type, std::vector<SuperElement> coeffs)
      : ring_(std::move(ring)), type_(type), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != type_.dim())
      throw ShapeError("module element needs " + std::to_string(type_.dim()) + " coefficients");
    for (const auto& c : coeffs_)
      if (!same_ring(c.ring(), ring_)) throw RingMismatch("coefficient from another ring");
  }

  /// k-th basis vector.
  static ModElement basis(RingPtr ring, FreeType type, std::size_t k) {
    if (k >= type.dim()) throw ShapeError("basis index out of range");
    ModElement x(ring, type);
    x.coeffs_[k] = SuperElement::one(ring);
    return x;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  FreeType type() const noexcept { return type_; }
  const std::vector<SuperElement>& coeffs() const noexcept { return coeffs_; }
  const SuperElement& operator[](std::size_t k) const { return coeffs_.at(k); }
  SuperElement& operator[](std::size_t k) { return coeffs_.at(k); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Homogeneous component: slot k keeps the part of c_k with parity
  /// |b_k| + p.
  ModElement part(Parity p) const {
    ModElement out(ring_, type_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      out.coeffs_[k] = coeffs_[k].part(type_.basis_parity(k) + p);
    return out;
  }

  std::optional<Parity> degree() const {
    if (part(Parity::Odd).is_zero()) return Parity::Even;
    if (part(Parity::Even).is_zero()) return Parity::Odd;
    return std::nullopt;
  }

  /// x * a
  ModElement times(const SuperElement& a) const {
    ModElement out(ring_, type_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = coeffs_[k] * a;
    return out;
  }

  ModElement& operator+=(const ModElement& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  ModElement& operator-=(const ModElement& o) {
    check(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  friend ModElement operator+(ModElement a, const ModElement& b) { return a += b; }
  friend ModElement operator-(ModElement a, const ModElement& b) { return a -= b; }
  ModElement operator-() const {
    ModElement out(ring_, type_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = -coeffs_[k];
    return out;
  }

  bool operator==(const ModElement& o) const {
    return same_ring(ring_, o.ring_) && type_ == o.type_ && coeffs_ == o.coeffs_;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) s += (k ? ", " : "") + coeffs_[k].to_string();
    return s + "]";
  }

 private:
  void check(const ModElement& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch("module elements over different rings");
    if (type_ != o.type_) throw ShapeError("module elements of different types");
  }

  RingPtr ring_;
  FreeType type_;
  std::vector<SuperElement> coeffs_;
};

/// Right-linear map between free supermodules. Column j holds the
/// coefficients of phi(b_j): phi(b_j) = sum_i b_i M(i, j).
class SuperMorphism {
 public:
  SuperMorphism(RingPtr ring, FreeType source, FreeType target)
      : ring_(std::move(ring)),
        source_(source),
        target_(target),
        m_(source.dim() * target.dim(), SuperElement(ring_)) {}

  static SuperMorphism identity(RingPtr ring, FreeType type) {
    return scalar(ring, type, SuperElement::one(ring));
  }

  /// phi(b_k) = b_k c for every k.
  static SuperMorphism scalar(RingPtr ring, FreeType type, const SuperElement& c) {
    SuperMorphism phi(ring, type, type);
    for (std::size_t k = 0; k < type.dim(); ++k) phi.at(k, k) = c;
    return phi;
  }

  static SuperMorphism from_rows(RingPtr ring, FreeType source, FreeType target,
                                 const std::vector<std::vector<SuperElement>>& rows) {
    SuperMorphism phi(ring, source, target);
    if (rows.size() != target.dim()) throw ShapeError("matrix row count != target dimension");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != source.dim())
        throw ShapeError("matrix column count != source dimension");
      for (std::size_t j = 0; j < rows[i].size(); ++j) {
        if (!same_ring(rows[i][j].ring(), ring)) throw RingMismatch("matrix entry from another ring");
        phi.at(i, j) = rows[i][j];
      }
    }
    return phi;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  FreeType source() const noexcept { return source_; }
  FreeType target() const noexcept { return target_; }
  std::size_t rows() const noexcept { return target_.dim(); }
  std::size_t cols() const noexcept { return source_.dim(); }

  SuperElement& at(std::size_t i, std::size_t j) { return m_.at(i * cols() + j); }
  const SuperElement& at(std::size_t i, std::size_t j) const { return m_.at(i * cols() + j); }

  /// Coefficients of phi(b_j).
  ModElement column(std::size_t j) const {
    std::vector<SuperElement> c;
    for (std::size_t i = 0; i < rows(); ++i) c.push_back(at(i, j));
    return ModElement(ring_, target_, std::move(c));
  }

  bool is_square() const noexcept { return source_ == target_; }

  bool is_zero() const {
    for (const auto& e : m_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// phi is homogeneous of degree d iff every entry M(i,j) lies in parity
  /// |b_i| + |b_j| + d. Zero reports Even.
  std::optional<Parity> degree() const {
    bool even = true, odd = true;
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) {
        const Parity base = target_.basis_parity(i) + source_.basis_parity(j);
        even = even && at(i, j).has_parity(base);
        odd = odd && at(i, j).has_parity(base + Parity::Odd);
      }
    }
    if (even) return Parity::Even;
    if (odd) return Parity::Odd;
    return std::nullopt;
  }

  SuperMorphism& operator+=(const SuperMorphism& o) {
    check(o);
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] += o.m_[k];
    return *this;
  }
  SuperMorphism& operator-=(const SuperMorphism& o) {
    check(o);
    for (std::size_t k = 0; k < m_.size(); ++k) m_[k] -= o.m_[k];
    return *this;
  }
  friend SuperMorphism operator+(SuperMorphism a, const SuperMorphism& b) { return a += b; }
  friend SuperMorphism operator-(SuperMorphism a, const SuperMorphism& b) { return a -= b; }

  bool operator==(const SuperMorphism& o) const {
    return same_ring(ring_, o.ring_) && source_ == o.source_ && target_ == o.target_ &&
           m_ == o.m_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows(); ++i) {
      s += "[";
      for (std::size_t j = 0; j < cols(); ++j) s += (j ? ", " : "") + at(i, j).to_string();
      s += "]\n";
    }
    return s;
  }

 private:
  void check(const SuperMorphism& o) const {
    if (!same_ring(ring_, o.ring_)) throw RingMismatch("morphisms over different rings");
    if (source_ != o.source_ || target_ != o.target_)
      throw ShapeError("morphisms of different shapes");
  }

  RingPtr ring_;
  FreeType source_, target_;
  std::vector<SuperElement> m_;
};

inline ModElement apply(const SuperMorphism& phi, const ModElement& x) {
  if (!same_ring(phi.ring(), x.ring())) throw RingMismatch("morphism and element rings differ");
  if (phi.source() != x.type())
    throw ShapeError("element of type " + x.type().to_string() + " fed to morphism from " +
                     phi.source().to_string());
  ModElement y(phi.ring(), phi.target());
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      if (!phi.at(i, j).is_zero() && !x[j].is_zero()) y[i] += phi.at(i, j) * x[j];
  return y;
}

/// phi after psi.
inline SuperMorphism compose(const SuperMorphism& phi, const SuperMorphism& psi) {
  if (!same_ring(phi.ring(), psi.ring())) throw RingMismatch("morphism rings differ");
  if (psi.target() != phi.source())
    throw ShapeError("cannot compose: " + psi.target().to_string() + " vs " +
                     phi.source().to_string());
  SuperMorphism out(phi.ring(), psi.source(), phi.target());
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t k = 0; k < phi.cols(); ++k) {
      if (phi.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < psi.cols(); ++j)
        if (!psi.at(k, j).is_zero()) out.at(i, j) += phi.at(i, k) * psi.at(k, j);
    }
  return out;
}

/// phi = phi0 + phi1 with phi0 even and phi1 odd: each entry keeps its
/// parity-matching component in phi0 and the rest in phi1.
inline std::pair<SuperMorphism, SuperMorphism> grade_split_morphism(const SuperMorphism& phi) {
  SuperMorphism even(phi.ring(), phi.source(), phi.target());
  SuperMorphism odd(phi.ring(), phi.source(), phi.target());
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j) {
      const Parity base = phi.target().basis_parity(i) + phi.source().basis_parity(j);
      even.at(i, j) = phi.at(i, j).part(base);
      odd.at(i, j) = phi.at(i, j).part(base + Parity::Odd);
    }
  return {std::move(even), std::move(odd)};
}

/// Unique right-linear map sending the k-th source basis vector to images[k].
inline SuperMorphism extend_basis_map(RingPtr ring, FreeType source,
                                      const std::vector<ModElement>& images) {
  if (images.size() != source.dim())
    throw ShapeError("need one image per basis vector: " + std::to_string(source.dim()) +
                     " expected, " + std::to_string(images.size()) + " given");
  if (images.empty()) return SuperMorphism(ring, source, FreeType{});
  const FreeType target = images.front().type();
  SuperMorphism phi(ring, source, target);
  for (std::size_t j = 0; j < images.size(); ++j) {
    if (images[j].type() != target) throw ShapeError("images live in different modules");
    if (!same_ring(images[j].ring(), ring)) throw RingMismatch("image from another ring");
    for (std::size_t i = 0; i < target.dim(); ++i) phi.at(i, j) = images[j][i];
  }
  return phi;
}

/// Left action a x := (-1)^(|x||a|) x a, applied per homogeneous part of x.
inline ModElement left_multiply(const SuperElement& a, const ModElement& x) {
  const auto da = a.degree();
  if (!da) throw PreconditionError("left action needs a homogeneous scalar");
  ModElement even = x.part(Parity::Even).times(a);
  ModElement odd = x.part(Parity::Odd).times(a);
  return *da == Parity::Odd ? even - odd : even + odd;
}

/// phi(a x) through the right-module core; equals (-1)^(|phi||a|) a phi(x).
inline ModElement left_evaluate(const SuperMorphism& phi, const SuperElement& a,
                                const ModElement& x) {
  if (!phi.degree()) throw PreconditionError("left_evaluate needs a homogeneous morphism");
  return apply(phi, left_multiply(a, x));
}

inline bool is_idempotent(const SuperMorphism& g) {
  if (!g.is_square()) throw ShapeError("idempotent test needs a square matrix");
  return compose(g, g) == g;
}

/// Placement of two free modules inside their direct sum, which again lists
/// even basis vectors first: evens of A, evens of B, odds of A, odds of B.
struct DirectSumLayout {
  FreeType first, second;

  FreeType type() const { return direct_sum(first, second); }
  std::size_t first_slot(std::size_t i) const {
    return i < first.p ? i : first.p + second.p + (i - first.p);
  }
  std::size_t second_slot(std::size_t j) const {
    return j < second.p ? first.p + j : first.p + second.p + first.q + (j - second.p);
  }
};

inline ModElement direct_sum(const ModElement& x, const ModElement& y) {
  if (!same_ring(x.ring(), y.ring())) throw RingMismatch("summands over different rings");
  DirectSumLayout layout{x.type(), y.type()};
  ModElement out(x.ring(), layout.type());
  for (std::size_t i = 0; i < x.type().dim(); ++i) out[layout.first_slot(i)] = x[i];
  for (std::size_t j = 0; j < y.type().dim(); ++j) out[layout.second_slot(j)] = y[j];
  return out;
}

/// Inverse of direct_sum on elements.
inline std::pair<ModElement, ModElement> split_sum(const ModElement& z, FreeType first,
                                                   FreeType second) {
  DirectSumLayout layout{first, second};
  if (z.type() != layout.type()) throw ShapeError("element does not live in the direct sum");
  ModElement x(z.ring(), first), y(z.ring(), second);
  for (std::size_t i = 0; i < first.dim(); ++i) x[i] = z[layout.first_slot(i)];
  for (std::size_t j = 0; j < second.dim(); ++j) y[j] = z[layout.second_slot(j)];
  return {std::move(x), std::move(y)};
}

/// Block-diagonal phi (+) psi.
inline SuperMorphism direct_sum(const SuperMorphism& phi, const SuperMorphism& psi) {
  if (!same_ring(phi.ring(), psi.ring())) throw RingMismatch("summands over different rings");
  DirectSumLayout src{phi.source(), psi.source()}, dst{phi.target(), psi.target()};
  SuperMorphism out(phi.ring(), src.type(), dst.type());
  for (std::size_t i = 0; i < phi.rows(); ++i)
    for (std::size_t j = 0; j < phi.cols(); ++j)
      out.at(dst.first_slot(i), src.first_slot(j)) = phi.at(i, j);
  for (std::size_t i = 0; i < psi.rows(); ++i)
    for (std::size_t j = 0; j < psi.cols(); ++j)
      out.at(dst.second_slot(i), src.second_slot(j)) = psi.at(i, j);
  return out;
}

/// Map A -> B (+) C stacking phi over psi.
inline SuperMorphism stack(const SuperMorphism& phi, const SuperMorphism& psi) {
  if (phi.source() != psi.source()) throw ShapeError("stacked maps need a common source");
  DirectSumLayout dst{phi.target(), psi.target()};
  SuperMorphism out(phi.ring(), phi.source(), dst.type());
  for (std::size_t j = 0; j < phi.cols(); ++j) {
    for (std::size_t i = 0; i < phi.rows(); ++i) out.at(dst.first_slot(i), j) = phi.at(i, j);
    for (std::size_t i = 0; i < psi.rows(); ++i) out.at(dst.second_slot(i), j) = psi.at(i, j);
  }
  return out;
}

/// Map B (+) C -> A given by (b, c) |-> phi(b) + psi(c).
inline SuperMorphism juxtapose(const SuperMorphism& phi, const SuperMorphism& psi) {
  if (phi.target() != psi.target()) throw ShapeError("juxtaposed maps need a common target");
  DirectSumLayout src{phi.source(), psi.source()};
  SuperMorphism out(phi.ring(), src.type(), phi.target());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    for (std::size_t j = 0; j < phi.cols(); ++j) out.at(i, src.first_slot(j)) = phi.at(i, j);
    for (std::size_t j = 0; j < psi.cols(); ++j) out.at(i, src.second_slot(j)) = psi.at(i, j);
  }
  return out;
}

/// Decomposition F = Im g (+) Ker g of an idempotent g, with Ker g presented
/// through the complementary projector 1 - g.
struct IdempotentSplit {
  SuperMorphism image_projector;   // g
  SuperMorphism kernel_projector;  // 1 - g
  SuperMorphism iso;               // F -> F (+) F, x |-> (g x, x - g x)
  SuperMorphism iso_inverse;       // F (+) F -> F, (p, h) |-> p + h

  /// iso_inverse o iso = id_F
  bool round_trip_on_source() const {
    return compose(iso_inverse, iso) ==
           SuperMorphism::identity(image_projector.ring(), image_projector.source());
  }

  /// iso o iso_inverse is the identity on Im g (+) Ker g, i.e. on the image
  /// of the projector g (+) (1 - g).
  bool round_trip_on_summands() const {
    const SuperMorphism summands = direct_sum(image_projector, kernel_projector);
    return compose(compose(iso, iso_inverse), summands) == summands;
  }
};

inline IdempotentSplit split_idempotent(const SuperMorphism& g) {
  if (!is_idempotent(g)) throw PreconditionError("split_idempotent: g o g != g");
  const SuperMorphism id = SuperMorphism::identity(g.ring(), g.source());
  SuperMorphism kernel = id - g;
  SuperMorphism iso = stack(g, kernel);
  SuperMorphism inverse = juxtapose(id, id);
  return {g, std::move(kernel), std::move(iso), std::move(inverse)};
}

/// F = P (+) Ker g from a surjection g: F -> P and a section s with g s = id.
struct SectionSplit {
  FreeType summand;                 // P
  SuperMorphism forward;            // F -> P (+) F, x |-> (g x, x - s g x)
  SuperMorphism backward;           // P (+) F -> F, (p, h) |-> s p + h
  SuperMorphism kernel_projector;   // 1 - s g, image = Ker g

  bool round_trip_on_source() const {
    return compose(backward, forward) ==
           SuperMorphism::identity(forward.ring(), forward.source());
  }

  /// forward o backward is the identity on P (+) Ker g.
  bool round_trip_on_summands() const {
    const SuperMorphism restrict =
        direct_sum(SuperMorphism::identity(forward.ring(), summand), kernel_projector);
    return compose(compose(forward, backward), restrict) == restrict;
  }
};

inline SectionSplit section_splitting(const SuperMorphism& g, const SuperMorphism& s) {
  const SuperMorphism gs = compose(g, s);
  if (gs != SuperMorphism::identity(g.ring(), g.target()))
    throw PreconditionError("section contract violated: g o s != id");
  const SuperMorphism id = SuperMorphism::identity(g.ring(), g.source());
  SuperMorphism kernel = id - compose(s, g);
  return {g.target(), stack(g, kernel), juxtapose(s, id), std::move(kernel)};
}

/// Lift of h: P -> N through g: M -> N along a section s of g: h~ = s o h.
inline SuperMorphism lift_through_split_surjection(const SuperMorphism& h, const SuperMorphism& g,
                                                   const SuperMorphism& s) {
  if (compose(g, s) != SuperMorphism::identity(g.ring(), g.target()))
    throw PreconditionError("section contract violated: g o s != id");
  return compose(s, h);
}

/// Ordering of tensor basis vectors b_i (x) b'_j: even pairs first, each
/// group in lexicographic (i, j) order.
struct TensorLayout {
  FreeType first, second;

  FreeType type() const { return tensor(first, second); }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> even, odd;
    for (std::size_t i = 0; i < first.dim(); ++i)
      for (std::size_t j = 0; j < second.dim(); ++j)
        (first.basis_parity(i) + second.basis_parity(j) == Parity::Even ? even : odd)
            .emplace_back(i, j);
    even.insert(even.end(), odd.begin(), odd.end());
    return even;
  }

  std::size_t slot(std::size_t i, std::size_t j) const {
    const auto all = pairs();
    for (std::size_t k = 0; k < all.size(); ++k)
      if (all[k] == std::pair{i, j}) return k;
    throw ShapeError("tensor index out of range");
  }
};

/// x (x) y with the Koszul rule: (b c) (x) (b' d) = (b (x) b') (-1)^(|c||b'|) c d.
inline ModElement tensor(const ModElement& x, const ModElement& y) {
  if (!same_ring(x.ring(), y.ring())) throw RingMismatch("tensor factors over different rings");
  TensorLayout layout{x.type(), y.type()};
  const auto pairs = layout.pairs();
  ModElement out(x.ring(), layout.type());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    if (x[i].is_zero() || y[j].is_zero()) continue;
    const Parity bj = y.type().basis_parity(j);
    const SuperElement even = x[i].even_part(), odd = x[i].odd_part();
    SuperElement c = even * y[j];
    const SuperElement odd_term = odd * y[j];
    if (bj == Parity::Odd)
      c -= odd_term;
    else
      c += odd_term;
    out[k] = c;
  }
  return out;
}

/// phi (x) psi for homogeneous psi, characterized by
/// (phi (x) psi)(x (x) y) = (-1)^(|psi||x|) phi(x) (x) psi(y).
inline SuperMorphism tensor(const SuperMorphism& phi, const SuperMorphism& psi) {
  if (!same_ring(phi.ring(), psi.ring())) throw RingMismatch("tensor factors over different rings");
  const auto dpsi = psi.degree();
  if (!dpsi) throw PreconditionError("tensor of morphisms needs a homogeneous second factor");
  TensorLayout src{phi.source(), psi.source()}, dst{phi.target(), psi.target()};
  const auto src_pairs = src.pairs();
  SuperMorphism out(phi.ring(), src.type(), dst.type());
  for (std::size_t col = 0; col < src_pairs.size(); ++col) {
    const auto [j, l] = src_pairs[col];
    ModElement image = tensor(phi.column(j), psi.column(l));
    if (koszul_sign(*dpsi, phi.source().basis_parity(j)) < 0) image = -image;
    for (std::size_t row = 0; row < image.type().dim(); ++row) out.at(row, col) = image[row];
  }
  return out;
}

/// Hom(F, F) realized as a free supermodule on the matrix units u_kl
/// (parity |b_k| + |b_l|), even units first, together with the projector
/// E(phi) = e o phi o e for an even idempotent e.
class EndProjector {
 public:
  explicit EndProjector(const SuperMorphism& e) : e_(e) {
    if (!e.is_square()) throw ShapeError("end_projector needs a square matrix");
    if (e.degree() != Parity::Even) throw PreconditionError("end_projector needs an even e");
    if (!is_idempotent(e)) throw PreconditionError("end_projector: e o e != e");
    const FreeType f = e.source();
    for (Parity want : {Parity::Even, Parity::Odd})
      for (std::size_t k = 0; k < f.dim(); ++k)
        for (std::size_t l = 0; l < f.dim(); ++l)
          if (f.basis_parity(k) + f.basis_parity(l) == want) units_.emplace_back(k, l);
    hom_type_ = {f.p * f.p + f.q * f.q, 2 * f.p * f.q};

    projector_ = SuperMorphism(e.ring(), hom_type_, hom_type_);
    for (std::size_t col = 0; col < units_.size(); ++col) {
      SuperMorphism unit(e.ring(), f, f);
      unit.at(units_[col].first, units_[col].second) = SuperElement::one(e.ring());
      const ModElement image = coordinates(compose(e, compose(unit, e)));
      for (std::size_t row = 0; row < units_.size(); ++row) projector_.at(row, col) = image[row];
    }
  }

  FreeType hom_type() const noexcept { return hom_type_; }
  const SuperMorphism& projector() const noexcept { return projector_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& units() const noexcept { return units_; }

  /// Right coordinates of phi: r_kl = sum over parity a of (-1)^(a |b_l|) M_kl^(a).
  ModElement coordinates(const SuperMorphism& phi) const {
    if (phi.source() != e_.source() || phi.target() != e_.source())
      throw ShapeError("morphism is not an endomorphism of F");
    ModElement out(e_.ring(), hom_type_);
    for (std::size_t k = 0; k < units_.size(); ++k) out[k] = signed_entry(phi, units_[k]);
    return out;
  }

  SuperMorphism from_coordinates(const ModElement& r) const {
    if (r.type() != hom_type_) throw ShapeError("coordinates of the wrong type");
    SuperMorphism phi(e_.ring(), e_.source(), e_.source());
    for (std::size_t k = 0; k < units_.size(); ++k) {
      const auto [i, j] = units_[k];
      const SuperElement& c = r[k];
      phi.at(i, j) = e_.source().basis_parity(j) == Parity::Odd ? c.even_part() - c.odd_part() : c;
    }
    return phi;
  }

 private:
  SuperElement signed_entry(const SuperMorphism& phi, std::pair<std::size_t, std::size_t> u) const {
    const SuperElement& m = phi.at(u.first, u.second);
    if (e_.source().basis_parity(u.second) == Parity::Even) return m;
    return m.even_part() - m.odd_part();
  }

  SuperMorphism e_;
  std::vector<std::pair<std::size_t, std::size_t>> units_;
  FreeType hom_type_;
  SuperMorphism projector_{e_.ring(), FreeType{}, FreeType{}};
};

inline EndProjector end_projector(const SuperMorphism& e) { return EndProjector(e); }

inline std::ostream& operator<<(std::ostream& os, const ModElement& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SuperMorphism& x) { return os << x.to_string(); }

}  // namespace supermod
