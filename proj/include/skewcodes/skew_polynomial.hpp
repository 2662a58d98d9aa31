#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "skewcodes/errors.hpp"
#include "skewcodes/extension_ring.hpp"
#include "skewcodes/finite_field.hpp"

namespace skewcodes {

/// Coefficient domain for skew polynomials: F_q itself or R over F_q.
template <typename Ring>
concept CoefficientRing = requires(const Ring& r, const typename Ring::Elem& x,
                                   AutPower t, unsigned k) {
  { r.zero() } -> std::convertible_to<typename Ring::Elem>;
  { r.one() } -> std::convertible_to<typename Ring::Elem>;
  { r.add(x, x) } -> std::convertible_to<typename Ring::Elem>;
  { r.sub(x, x) } -> std::convertible_to<typename Ring::Elem>;
  { r.neg(x) } -> std::convertible_to<typename Ring::Elem>;
  { r.mul(x, x) } -> std::convertible_to<typename Ring::Elem>;
  { r.inv(x) } -> std::convertible_to<typename Ring::Elem>;
  { r.theta_pow(t, k, x) } -> std::convertible_to<typename Ring::Elem>;
  { r.is_zero(x) } -> std::convertible_to<bool>;
  { r.is_unit(x) } -> std::convertible_to<bool>;
  { r.index_of(x) } -> std::convertible_to<std::uint64_t>;
  { r.to_string(x) } -> std::convertible_to<std::string>;
  { r == r } -> std::convertible_to<bool>;
};

/// Element of S[x; theta_t]: coefficients low -> high over S, multiplied by
/// the twisted rule (a x^i)(b x^j) = a theta_t^i(b) x^{i+j}.  The coefficient
/// list is kept normalized (no trailing zeros); the zero polynomial is the
/// empty list and reports degree() == -1.
template <CoefficientRing Ring>
class SkewPoly {
 public:
  using Elem = typename Ring::Elem;

  SkewPoly(Ring ring, AutPower t)
      : ring_(std::move(ring)), t_(t) {}

  SkewPoly(Ring ring, AutPower t, std::vector<Elem> coeffs)
      : ring_(std::move(ring)), t_(t), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && ring_.is_zero(coeffs_.back()))
      coeffs_.pop_back();
  }

  const Ring& ring() const { return ring_; }
  AutPower aut() const { return t_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const {
    return !coeffs_.empty() && coeffs_.back() == ring_.one();
  }

  Elem coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : ring_.zero();
  }
  Elem leading() const {
    return coeffs_.empty() ? ring_.zero() : coeffs_.back();
  }

  friend bool operator==(const SkewPoly& f, const SkewPoly& g) {
    return f.t_ == g.t_ && f.coeffs_ == g.coeffs_ && f.ring_ == g.ring_;
  }

 private:
  Ring ring_;
  AutPower t_;
  std::vector<Elem> coeffs_;
};

using SkewPolyFq = SkewPoly<FieldCtx>;
using SkewPolyR = SkewPoly<ExtensionRing>;

namespace detail {

template <CoefficientRing Ring>
void require_same_context(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  if (!(f.ring() == g.ring()) || !(f.aut() == g.aut()))
    throw Error(ErrorKind::ContextMismatch,
                "operands belong to different skew polynomial rings");
}

}  // namespace detail

template <CoefficientRing Ring>
SkewPoly<Ring> sp_constant(const Ring& ring, AutPower t,
                           typename Ring::Elem c) {
  return SkewPoly<Ring>(ring, t, {c});
}

/// c * x^k as a polynomial.
template <CoefficientRing Ring>
SkewPoly<Ring> sp_monomial(const Ring& ring, AutPower t,
                           typename Ring::Elem c, unsigned k) {
  std::vector<typename Ring::Elem> coeffs(k + 1, ring.zero());
  coeffs[k] = c;
  return SkewPoly<Ring>(ring, t, std::move(coeffs));
}

/// x^n - 1, the modulus of the quotient ring the codes live in.
template <CoefficientRing Ring>
SkewPoly<Ring> sp_x_pow_minus_one(const Ring& ring, AutPower t, unsigned n) {
  std::vector<typename Ring::Elem> coeffs(n + 1, ring.zero());
  coeffs[0] = ring.neg(ring.one());
  coeffs[n] = ring.one();
  return SkewPoly<Ring>(ring, t, std::move(coeffs));
}

template <CoefficientRing Ring>
SkewPoly<Ring> sp_add(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  detail::require_same_context(f, g);
  const Ring& R = f.ring();
  std::vector<typename Ring::Elem> out(
      std::max(f.coeffs().size(), g.coeffs().size()), R.zero());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = R.add(f.coeff(i), g.coeff(i));
  return SkewPoly<Ring>(R, f.aut(), std::move(out));
}

template <CoefficientRing Ring>
SkewPoly<Ring> sp_neg(const SkewPoly<Ring>& f) {
  const Ring& R = f.ring();
  std::vector<typename Ring::Elem> out(f.coeffs().size(), R.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.neg(f.coeff(i));
  return SkewPoly<Ring>(R, f.aut(), std::move(out));
}

template <CoefficientRing Ring>
SkewPoly<Ring> sp_sub(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  return sp_add(f, sp_neg(g));
}

/// Left multiplication by a ring constant: c * f.
template <CoefficientRing Ring>
SkewPoly<Ring> sp_scale(typename Ring::Elem c, const SkewPoly<Ring>& f) {
  const Ring& R = f.ring();
  std::vector<typename Ring::Elem> out(f.coeffs().size(), R.zero());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = R.mul(c, f.coeff(i));
  return SkewPoly<Ring>(R, f.aut(), std::move(out));
}

/// Left multiplication by the monomial c x^k:
/// (c x^k) f = sum_i c theta^k(f_i) x^{k+i}.
template <CoefficientRing Ring>
SkewPoly<Ring> sp_monomial_mul(typename Ring::Elem c, unsigned k,
                               const SkewPoly<Ring>& f) {
  const Ring& R = f.ring();
  if (f.is_zero() || R.is_zero(c)) return SkewPoly<Ring>(R, f.aut());
  std::vector<typename Ring::Elem> out(f.coeffs().size() + k, R.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i)
    out[k + i] = R.mul(c, R.theta_pow(f.aut(), k, f.coeff(i)));
  return SkewPoly<Ring>(R, f.aut(), std::move(out));
}

template <CoefficientRing Ring>
SkewPoly<Ring> sp_mul(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  detail::require_same_context(f, g);
  const Ring& R = f.ring();
  if (f.is_zero() || g.is_zero()) return SkewPoly<Ring>(R, f.aut());
  std::vector<typename Ring::Elem> out(
      f.coeffs().size() + g.coeffs().size() - 1, R.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (R.is_zero(f.coeff(i))) continue;
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) {
      const auto term =
          R.mul(f.coeff(i),
                R.theta_pow(f.aut(), static_cast<unsigned>(i), g.coeff(j)));
      out[i + j] = R.add(out[i + j], term);
    }
  }
  return SkewPoly<Ring>(R, f.aut(), std::move(out));
}

/// Right division f = q*g + r with deg r < deg g (quotient on the left).
/// Requires a unit leading coefficient on g; the cancellation step at
/// degree gap d needs (theta^d(lc g))^{-1}.
template <CoefficientRing Ring>
std::pair<SkewPoly<Ring>, SkewPoly<Ring>> sp_right_divide(
    const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  detail::require_same_context(f, g);
  const Ring& R = f.ring();
  const AutPower t = f.aut();
  if (g.is_zero())
    throw Error(ErrorKind::ZeroDivisor, "right division by zero");
  if (!R.is_unit(g.leading()))
    throw Error(ErrorKind::NonUnitLeadingCoeff,
                "right division needs a unit leading coefficient");

  const int dg = g.degree();
  std::vector<typename Ring::Elem> rem = f.coeffs();
  std::vector<typename Ring::Elem> quo;
  if (f.degree() >= dg)
    quo.assign(static_cast<std::size_t>(f.degree() - dg) + 1, R.zero());

  int dr = f.degree();
  while (dr >= dg) {
    const unsigned d = static_cast<unsigned>(dr - dg);
    const auto lead = rem[static_cast<std::size_t>(dr)];
    const auto c = R.mul(lead, R.inv(R.theta_pow(t, d, g.leading())));
    quo[d] = c;
    for (int j = 0; j <= dg; ++j) {
      const std::size_t at = d + static_cast<std::size_t>(j);
      const auto term =
          R.mul(c, R.theta_pow(t, d, g.coeff(static_cast<std::size_t>(j))));
      rem[at] = R.sub(rem[at], term);
    }
    --dr;
    while (dr >= 0 && R.is_zero(rem[static_cast<std::size_t>(dr)])) --dr;
  }
  return {SkewPoly<Ring>(R, t, std::move(quo)),
          SkewPoly<Ring>(R, t, std::move(rem))};
}

/// Does g right-divide f, i.e. f = q*g exactly?
template <CoefficientRing Ring>
bool sp_is_right_divisor(const SkewPoly<Ring>& g, const SkewPoly<Ring>& f) {
  return sp_right_divide(f, g).second.is_zero();
}

/// Canonical residue of f modulo the two-sided ideal (x^n - 1): fold every
/// coefficient of degree n+i onto degree i.  No twist is involved because
/// the quotient term sits on the left: (a x^i)(x^n - 1) = a x^{n+i} - a x^i.
template <CoefficientRing Ring>
SkewPoly<Ring> sp_mod_ideal(const SkewPoly<Ring>& f, unsigned n) {
  if (n < 1)
    throw Error(ErrorKind::DegreeMismatch, "ideal modulus needs n >= 1");
  const Ring& R = f.ring();
  std::vector<typename Ring::Elem> out = f.coeffs();
  for (std::size_t k = out.size(); k-- > n;) {
    out[k - n] = R.add(out[k - n], out[k]);
    out[k] = R.zero();
  }
  if (out.size() > n) out.resize(n);
  return SkewPoly<Ring>(R, f.aut(), std::move(out));
}

/// Lexicographic order: degree first, then coefficient encodings compared
/// low-index first.  Used wherever listings must be deterministic.
template <CoefficientRing Ring>
bool sp_less(const SkewPoly<Ring>& f, const SkewPoly<Ring>& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  const Ring& R = f.ring();
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const auto a = R.index_of(f.coeff(i));
    const auto b = R.index_of(g.coeff(i));
    if (a != b) return a < b;
  }
  return false;
}

template <CoefficientRing Ring>
std::string sp_to_string(const SkewPoly<Ring>& f) {
  if (f.is_zero()) return "0";
  const Ring& R = f.ring();
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ",";
    out += R.to_string(f.coeff(i));
  }
  return out;
}

}  // namespace skewcodes
