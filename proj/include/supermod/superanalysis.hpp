#pragma once

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "report.hpp"
#include "superring.hpp"

namespace supermod {

using MultiDegree = std::vector<unsigned>;

/// Calls fn on every multi-degree of the given arity with total degree <= order,
/// in graded order.
inline void for_each_multidegree(unsigned arity, unsigned order,
                                 const std::function<void(const MultiDegree&)>& fn) {
  MultiDegree a(arity, 0);
  for (unsigned total = 0; total <= order; ++total) {
    std::function<void(unsigned, unsigned)> rec = [&](unsigned k, unsigned left) {
      if (k + 1 == arity) {
        a[k] = left;
        fn(a);
        return;
      }
      for (unsigned v = left + 1; v-- > 0;) {
        a[k] = v;
        rec(k + 1, left - v);
      }
    };
    if (arity == 0) {
      if (total == 0) fn(a);
    } else {
      rec(0, total);
    }
  }
}

/// Truncated derivative table of a smooth function at a body point: entry a
/// holds d_1^a1 ... d_m^am f. Values live in a CoeffRing, so a jet can be
/// numeric (base point known) or symbolic such as (S, C, -S, -C) over the trig
/// ring. Only nonzero entries are stored.
class Jet {
 public:
  Jet(CoeffRingPtr values, unsigned arity, unsigned order,
      std::optional<std::vector<Number>> base = std::nullopt)
      : values_(std::move(values)), arity_(arity), order_(order), base_(std::move(base)) {
    if (arity_ == 0) throw PreconditionError("jet arity must be at least 1");
    if (base_ && base_->size() != arity_) throw ShapeError("jet base point has wrong arity");
  }

  /// Jet of a polynomial sum c * t^e at the base point, over the domain's constants.
  static Jet polynomial(NumberDomain domain, unsigned arity,
                        const std::vector<std::pair<MultiDegree, Number>>& terms,
                        std::vector<Number> base, unsigned order) {
    Jet j(std::make_shared<const CoeffRing>(domain), arity, order, base);
    for_each_multidegree(arity, order, [&](const MultiDegree& a) {
      Number sum;
      for (const auto& [e, c] : terms) {
        if (e.size() != arity) throw ShapeError("polynomial term has wrong arity");
        Number t = c;
        for (unsigned k = 0; k < arity && !t.is_zero(); ++k) {
          if (a[k] > e[k]) {
            t = Number{};
            break;
          }
          for (unsigned f = e[k]; f > e[k] - a[k]; --f) t = domain.mul(t, Number(static_cast<long>(f)));
          for (unsigned p = 0; p < e[k] - a[k]; ++p) t = domain.mul(t, base[k]);
        }
        sum = domain.add(sum, t);
      }
      j.set(a, PolyValue(j.values_, sum));
    });
    return j;
  }

  /// Jet of the k-th coordinate function t_k.
  static Jet coordinate(NumberDomain domain, unsigned arity, unsigned k, std::vector<Number> base,
                        unsigned order) {
    MultiDegree e(arity, 0);
    e.at(k) = 1;
    return polynomial(domain, arity, {{e, Number(1)}}, std::move(base), order);
  }

  /// sin at a symbolic angle: derivative cycle S, C, -S, -C over the trig ring.
  static Jet sin_symbolic(unsigned order) { return trig_cycle(order, 0); }
  static Jet cos_symbolic(unsigned order) { return trig_cycle(order, 1); }

  /// sin and cos at 0 over the constants of a domain: cycles 0,1,0,-1 and 1,0,-1,0.
  static Jet sin_at_zero(NumberDomain domain, unsigned order) { return zero_cycle(domain, order, 0); }
  static Jet cos_at_zero(NumberDomain domain, unsigned order) { return zero_cycle(domain, order, 1); }

  const CoeffRingPtr& values() const noexcept { return values_; }
  unsigned arity() const noexcept { return arity_; }
  unsigned order() const noexcept { return order_; }
  const std::optional<std::vector<Number>>& base() const noexcept { return base_; }
  const std::map<MultiDegree, PolyValue>& table() const noexcept { return table_; }

  PolyValue at(const MultiDegree& a) const {
    auto it = table_.find(a);
    return it == table_.end() ? PolyValue(values_) : it->second;
  }

  void set(const MultiDegree& a, const PolyValue& v) {
    if (a.size() != arity_) throw ShapeError("multi-degree has wrong arity");
    unsigned total = 0;
    for (unsigned x : a) total += x;
    if (total > order_) throw PreconditionError("multi-degree exceeds jet order");
    if (!same_ring(v.ring(), values_)) throw RingMismatch("jet value in a different ring");
    if (v.is_zero())
      table_.erase(a);
    else
      table_.insert_or_assign(a, v);
  }

  bool is_zero() const noexcept { return table_.empty(); }

  /// Formal partial derivative: shifts the table down by one in direction k.
  Jet derivative(unsigned k = 0) const {
    if (k >= arity_) throw PreconditionError("derivative direction out of range");
    if (order_ == 0) throw PreconditionError("cannot differentiate an order-0 jet");
    Jet d(values_, arity_, order_ - 1, base_);
    for (const auto& [a, v] : table_) {
      if (a[k] == 0) continue;
      MultiDegree b = a;
      --b[k];
      d.set(b, v);
    }
    return d;
  }

  friend Jet operator+(const Jet& f, const Jet& g) {
    Jet out = f.blank_like(g);
    for_each_multidegree(out.arity_, out.order_, [&](const MultiDegree& a) {
      out.set(a, f.at(a) + g.at(a));
    });
    return out;
  }

  friend Jet operator-(const Jet& f, const Jet& g) {
    Jet out = f.blank_like(g);
    for_each_multidegree(out.arity_, out.order_, [&](const MultiDegree& a) {
      out.set(a, f.at(a) - g.at(a));
    });
    return out;
  }

  /// Leibniz rule.
  friend Jet operator*(const Jet& f, const Jet& g) {
    Jet out = f.blank_like(g);
    for_each_multidegree(out.arity_, out.order_, [&](const MultiDegree& a) {
      PolyValue sum(out.values_);
      for (const auto& [b, fb] : f.table_) {
        bool below = true;
        Number weight(1);
        for (unsigned k = 0; k < a.size() && below; ++k) {
          if (b[k] > a[k]) below = false;
          else weight = weight * Number(mpz_class(binomial(a[k], b[k])));
        }
        if (!below) continue;
        MultiDegree c(a.size());
        for (unsigned k = 0; k < a.size(); ++k) c[k] = a[k] - b[k];
        auto gc = g.table_.find(c);
        if (gc == g.table_.end()) continue;
        sum += (fb * gc->second).scaled(weight);
      }
      out.set(a, sum);
    });
    return out;
  }

  bool operator==(const Jet& o) const {
    return same_ring(values_, o.values_) && arity_ == o.arity_ && order_ == o.order_ &&
           base_ == o.base_ && table_ == o.table_;
  }

  std::string to_string() const {
    std::string s = "jet(order " + std::to_string(order_) + ")";
    for (const auto& [a, v] : table_) {
      s += " (";
      for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
      s += "):" + v.to_string();
    }
    return s;
  }

 private:
  Jet blank_like(const Jet& g) const {
    if (!same_ring(values_, g.values_)) throw RingMismatch("jets over different value rings");
    if (arity_ != g.arity_) throw ShapeError("jets of different arity");
    if (base_ != g.base_) throw PreconditionError("jets at different base points");
    return Jet(values_, arity_, std::min(order_, g.order_), base_);
  }

  static Jet trig_cycle(unsigned order, unsigned phase) {
    auto trig = std::make_shared<const CoeffRing>(CoeffRing::trig());
    const PolyValue s = PolyValue::variable(trig, "S"), c = PolyValue::variable(trig, "C");
    const PolyValue cycle[4] = {s, c, -s, -c};
    Jet j(trig, 1, order);
    for (unsigned k = 0; k <= order; ++k) j.set({k}, cycle[(k + phase) % 4]);
    return j;
  }

  static Jet zero_cycle(NumberDomain domain, unsigned order, unsigned phase) {
    auto ring = std::make_shared<const CoeffRing>(domain);
    const long cycle[4] = {0, 1, 0, -1};
    Jet j(ring, 1, order, std::vector<Number>{Number{}});
    for (unsigned k = 0; k <= order; ++k) j.set({k}, PolyValue(ring, Number(cycle[(k + phase) % 4])));
    return j;
  }

  CoeffRingPtr values_;
  unsigned arity_;
  unsigned order_;
  std::optional<std::vector<Number>> base_;
  std::map<MultiDegree, PolyValue> table_;
};

/// Copies a pure Grassmann element into a ring with the same odd generators and
/// a richer coefficient ring over the same number domain.
inline SuperElement lift(const SuperElement& x, const RingPtr& target) {
  require_pure_grassmann(x, "lift");
  if (x.ring()->odd_names() != target->odd_names() || !(x.ring()->domain() == target->domain()))
    throw RingMismatch("cannot lift between rings with different generators or domains");
  SuperElement out(target);
  for (const auto& [m, c] : x.terms()) out += SuperElement::odd_monomial(target, m.odd, c);
  return out;
}

/// The ring in which continuations of jets with values in `values` live.
inline RingPtr continuation_ring(const CoeffRingPtr& values, const RingPtr& grassmann) {
  return make_ring(*values, grassmann->odd_names());
}

/// Smallest jet order for which the Taylor sum in even souls over L generators
/// is exact: an even soul has no term below degree 2, so s^k = 0 once 2k > L.
inline unsigned exact_order_bound(unsigned generators) { return generators / 2; }

/// sum_a (1/a!) d^a f * s^a for even souls s with zero body.
inline SuperElement continue_at_soul(const Jet& f, const std::vector<SuperElement>& souls) {
  if (souls.size() != f.arity()) throw ShapeError("jet arity does not match point dimension");
  const RingPtr grass = souls.front().ring();
  for (const auto& s : souls) {
    if (!same_ring(s.ring(), grass)) throw RingMismatch("soul coordinates in different rings");
    require_pure_grassmann(s, "continue_at_soul");
    if (!s.has_parity(Parity::Even)) throw PreconditionError("soul coordinate is not even");
    if (!body(s).is_zero()) throw PreconditionError("soul coordinate has nonzero body");
  }
  if (f.order() < exact_order_bound(grass->odd_count()))
    throw PreconditionError("jet order " + std::to_string(f.order()) +
                            " is too small for an exact expansion over " +
                            std::to_string(grass->odd_count()) + " generators");
  const RingPtr target = continuation_ring(f.values(), grass);
  const NumberDomain& dom = grass->domain();

  std::vector<std::vector<SuperElement>> powers(souls.size());
  for (std::size_t k = 0; k < souls.size(); ++k) {
    const SuperElement s = lift(souls[k], target);
    powers[k].push_back(SuperElement::one(target));
    for (unsigned p = 1; p <= f.order(); ++p) powers[k].push_back(powers[k].back() * s);
  }

  SuperElement out(target);
  for (const auto& [a, v] : f.table()) {
    SuperElement term = SuperElement::from_poly(target, v);
    mpz_class denom = 1;
    for (std::size_t k = 0; k < a.size() && !term.is_zero(); ++k) {
      term *= powers[k][a[k]];
      denom *= factorial(a[k]);
    }
    if (term.is_zero()) continue;
    out += term.scaled(dom.inverse(Number(denom)));
  }
  return out;
}

/// Grassmann analytic continuation at even coordinates x whose bodies equal the
/// jet's base point.
inline SuperElement continue_analytically(const Jet& f, const std::vector<SuperElement>& x) {
  if (!f.base()) throw PreconditionError("jet has no numeric base point");
  if (x.size() != f.arity()) throw ShapeError("jet arity does not match point dimension");
  std::vector<SuperElement> souls;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].has_parity(Parity::Even)) throw PreconditionError("even coordinate is not even");
    if (body(x[k]) != (*f.base())[k])
      throw PreconditionError("body " + body(x[k]).to_string() + " differs from jet base point " +
                              (*f.base())[k].to_string());
    souls.push_back(soul(x[k]));
  }
  return continue_at_soul(f, souls);
}

/// A point of R^{m,n}: m even and n odd coordinates in one ring.
struct SuperPoint {
  std::vector<SuperElement> even;
  std::vector<SuperElement> odd;
};

inline SuperPoint make_super_point(std::vector<SuperElement> even, std::vector<SuperElement> odd = {}) {
  const SuperElement* first = !even.empty() ? &even.front() : !odd.empty() ? &odd.front() : nullptr;
  for (const auto& e : even) {
    if (!same_ring(e.ring(), first->ring())) throw RingMismatch("point coordinates in different rings");
    if (!e.has_parity(Parity::Even)) throw PreconditionError("even coordinate " + e.to_string() + " is not even");
  }
  for (const auto& o : odd) {
    if (!same_ring(o.ring(), first->ring())) throw RingMismatch("point coordinates in different rings");
    if (!o.has_parity(Parity::Odd)) throw PreconditionError("odd coordinate " + o.to_string() + " is not odd");
  }
  return {std::move(even), std::move(odd)};
}

/// Componentwise body of the even coordinates; odd coordinates are discarded.
inline std::vector<Number> body_point(const SuperPoint& p) {
  std::vector<Number> out;
  for (const auto& e : p.even) out.push_back(body(e));
  return out;
}

/// G-infinity function sum_mu f_mu(x) xi_mu on R^{m,n}.
struct SuperSmoothFn {
  unsigned m = 0;
  unsigned n = 0;
  std::map<MultiIndex, Jet> components;
};

inline SuperElement eval_g_infinity(const SuperSmoothFn& f, const SuperPoint& p) {
  if (p.even.size() != f.m || p.odd.size() != f.n)
    throw ShapeError("point dimension does not match function arity");
  if (p.even.empty()) throw PreconditionError("G-infinity evaluation needs an even coordinate");
  std::optional<SuperElement> out;
  for (const auto& [mu, jet] : f.components) {
    if (jet.arity() != f.m) throw ShapeError("component jet arity does not match");
    if (mu.max_index() > f.n) throw PreconditionError("component multi-index exceeds odd dimension");
    SuperElement xi = SuperElement::one(p.even.front().ring());
    for (unsigned i : mu.indices()) xi *= p.odd[i - 1];
    SuperElement term = continue_analytically(jet, p.even);
    term *= lift(xi, term.ring());
    if (out)
      *out += term;
    else
      out = term;
  }
  return out ? *out : SuperElement(p.even.front().ring());
}

/// Angle with a symbolic body theta0 and a Grassmann soul; sin theta0 and
/// cos theta0 are the generators S and C of the trig ring.
struct SymbolicAngle {
  SuperElement soul;
};

inline unsigned default_order(const SuperElement& x) { return std::max(1u, x.ring()->odd_count()); }

inline void require_even_angle(const SuperElement& theta) {
  if (!theta.has_parity(Parity::Even)) throw PreconditionError("angle must be even");
}

/// Exact series at an angle with zero body (the series truncates).
inline SuperElement super_sin(const SuperElement& theta) {
  require_even_angle(theta);
  if (!body(theta).is_zero())
    throw Unsupported("sin of a nonzero numeric body is not exact; use a symbolic angle");
  return continue_at_soul(Jet::sin_at_zero(theta.ring()->domain(), default_order(theta)), {theta});
}

inline SuperElement super_cos(const SuperElement& theta) {
  require_even_angle(theta);
  if (!body(theta).is_zero())
    throw Unsupported("cos of a nonzero numeric body is not exact; use a symbolic angle");
  return continue_at_soul(Jet::cos_at_zero(theta.ring()->domain(), default_order(theta)), {theta});
}

/// Coefficients in Q[S,C]/(S^2 + C^2 - 1).
inline SuperElement super_sin(const SymbolicAngle& theta) {
  require_even_angle(theta.soul);
  return continue_at_soul(Jet::sin_symbolic(default_order(theta.soul)), {theta.soul});
}

inline SuperElement super_cos(const SymbolicAngle& theta) {
  require_even_angle(theta.soul);
  return continue_at_soul(Jet::cos_symbolic(default_order(theta.soul)), {theta.soul});
}

/// D sin = cos, D cos = -sin and sin^2 + cos^2 = 1 at a symbolic angle, where D
/// is the formal jet derivative.
inline Report superderivation_check(const SymbolicAngle& theta) {
  Report r;
  r.subject = "trig";
  r.params["generators"] = theta.soul.ring()->odd_count();
  r.params["soul"] = theta.soul.to_string();
  const unsigned order = default_order(theta.soul) + 1;
  const Jet sin_jet = Jet::sin_symbolic(order), cos_jet = Jet::cos_symbolic(order);
  const SuperElement s = super_sin(theta), c = super_cos(theta);
  const SuperElement ds = continue_at_soul(sin_jet.derivative(), {theta.soul});
  const SuperElement dc = continue_at_soul(cos_jet.derivative(), {theta.soul});
  auto residual = [](const SuperElement& x) { return "residual " + x.to_string(); };

  r.add("D_sin_eq_cos", ds == c, residual(ds - c));
  r.add("D_cos_eq_minus_sin", dc == -s, residual(dc + s));
  const SuperElement pyth = s * s + c * c - SuperElement::one(s.ring());
  r.add("sin2_plus_cos2_eq_1", pyth.is_zero(), residual(pyth));
  const Jet pyth_jet = sin_jet * sin_jet + cos_jet * cos_jet;
  r.add("D_sin2_plus_cos2_eq_0", pyth_jet.derivative().is_zero(), pyth_jet.derivative().to_string());
  const SuperElement zero_soul(theta.soul.ring());
  r.add("sin_at_body_is_S", super_sin(SymbolicAngle{zero_soul}).to_string() == "S");
  r.add("cos_at_body_is_C", super_cos(SymbolicAngle{zero_soul}).to_string() == "C");
  return r;
}

/// Even square root with prescribed body, by induction on multi-index length:
/// x_l = (z_l - sum over proper splits m+n=l of sign(m,n) x_m x_n) / (2 x_0).
inline SuperElement sqrt_even(const SuperElement& z, const Number& root0) {
  require_pure_grassmann(z, "sqrt_even");
  if (!z.has_parity(Parity::Even)) throw PreconditionError("sqrt_even needs an even element");
  const RingPtr& ring = z.ring();
  const NumberDomain& dom = ring->domain();
  const Number r0 = dom.reduce(root0);
  if (dom.mul(r0, r0) != body(z))
    throw PreconditionError("root0^2 = " + dom.mul(r0, r0).to_string() + " differs from body " +
                            body(z).to_string());
  Number inv;
  try {
    inv = dom.inverse(dom.add(r0, r0));
  } catch (const Error&) {
    throw PreconditionError("2*root0 is not invertible");
  }

  std::uint64_t support = 0;
  std::unordered_map<std::uint64_t, Number> zc;
  for (const auto& [m, c] : z.terms()) {
    support |= m.odd.mask();
    zc.emplace(m.odd.mask(), c);
  }
  const unsigned k = static_cast<unsigned>(std::popcount(support));
  if (k > 30) throw CapacityError("sqrt_even supports at most 30 active generators");

  // even-size submasks of the support, shortest first
  std::vector<std::uint64_t> lambdas;
  for (std::uint64_t sub = support;; sub = (sub - 1) & support) {
    if (sub != 0 && std::popcount(sub) % 2 == 0) lambdas.push_back(sub);
    if (sub == 0) break;
  }
  std::sort(lambdas.begin(), lambdas.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });

  std::unordered_map<std::uint64_t, Number> x;
  x.emplace(0, r0);
  for (std::uint64_t lambda : lambdas) {
    auto zit = zc.find(lambda);
    Number acc = zit == zc.end() ? Number{} : zit->second;
    for (std::uint64_t mu = (lambda - 1) & lambda; mu != 0; mu = (mu - 1) & lambda) {
      const std::uint64_t nu = lambda ^ mu;
      auto xm = x.find(mu), xn = x.find(nu);
      if (xm == x.end() || xn == x.end()) continue;
      const auto merged = merge_sign(MultiIndex::from_mask(mu), MultiIndex::from_mask(nu));
      const Number prod = dom.mul(xm->second, xn->second);
      acc = merged->sign > 0 ? dom.sub(acc, prod) : dom.add(acc, prod);
    }
    const Number v = dom.mul(acc, inv);
    if (!v.is_zero()) x.emplace(lambda, v);
  }

  SuperElement out(ring);
  for (const auto& [mask, c] : x) out += SuperElement::odd_monomial(ring, MultiIndex::from_mask(mask), c);
  if (out * out != z) throw InvariantError("sqrt_even result does not square back");
  return out;
}

/// Charts of the supercircle x^2 + y^2 = 1: U_{x+} = {body x > 0} etc.
enum class CircleAxis { X, Y };

struct CircleChart {
  CircleAxis axis = CircleAxis::X;
  int sign = 1;

  std::string name() const {
    return std::string(axis == CircleAxis::X ? "x" : "y") + (sign > 0 ? "+" : "-");
  }
};

inline bool on_circle(const SuperPoint& p) {
  if (p.even.size() != 2 || !p.odd.empty()) return false;
  return p.even[0] * p.even[0] + p.even[1] * p.even[1] == SuperElement::one(p.even[0].ring());
}

/// psi^{-1}: the free coordinate t to the point with the charted coordinate
/// +-sqrt(1 - t^2).
inline SuperPoint chart_inverse(const CircleChart& chart, const SuperElement& t) {
  require_pure_grassmann(t, "chart_inverse");
  if (!t.has_parity(Parity::Even)) throw PreconditionError("chart coordinate must be even");
  const auto b = body(t).as_rational();
  if (!b) throw Unsupported("chart body must be rational");
  if (!(*b > -1 && *b < 1)) throw PreconditionError("chart body " + body(t).to_string() + " not in (-1,1)");
  const mpq_class rad = 1 - *b * *b;
  const auto root = rational_sqrt(rad);
  if (!root)
    throw PreconditionError("1 - body^2 = " + Number(rad).to_string() + " is not a rational square");
  const SuperElement w =
      sqrt_even(SuperElement::one(t.ring()) - t * t, Number(chart.sign > 0 ? *root : mpq_class(-*root)));
  return chart.axis == CircleAxis::X ? make_super_point({w, t}) : make_super_point({t, w});
}

/// psi: projection to the free coordinate, after checking the point lies in the chart.
inline SuperElement chart_forward(const CircleChart& chart, const SuperPoint& p) {
  if (!on_circle(p)) throw PreconditionError("point is not on the supercircle");
  const SuperElement& charted = chart.axis == CircleAxis::X ? p.even[0] : p.even[1];
  const auto b = body(charted).as_rational();
  if (!b || sgn(*b) != chart.sign) throw PreconditionError("point is outside chart " + chart.name());
  return chart.axis == CircleAxis::X ? p.even[1] : p.even[0];
}

/// (+-sqrt(1 - y^2), y).
inline SuperPoint supercircle_chart(const SuperElement& y, int branch = 1) {
  return chart_inverse(CircleChart{CircleAxis::X, branch}, y);
}

/// Tangent vector (-l y, l x) at a point of the supercircle.
inline std::vector<SuperElement> circle_tangent(const SuperPoint& p, const SuperElement& lambda) {
  if (!on_circle(p)) throw PreconditionError("point is not on the supercircle");
  return {-(lambda * p.even[1]), lambda * p.even[0]};
}

/// x v_x + y v_y; zero exactly when v is tangent to the level set.
inline SuperElement tangency(const SuperPoint& p, const std::vector<SuperElement>& v) {
  if (p.even.size() != 2 || v.size() != 2) throw ShapeError("tangency needs planar vectors");
  return p.even[0] * v[0] + p.even[1] * v[1];
}

}  // namespace supermod
