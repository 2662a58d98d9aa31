#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "skewcodes/skew_polynomial.hpp"

namespace skewcodes {

inline constexpr std::uint64_t kDefaultDivisorCap = 1ull << 20;

/// Elements of F_q fixed by theta_t, i.e. the subfield F_{p^t}; sorted by
/// encoding.
std::vector<FieldElement> fixed_subfield_elements(const FieldCtx& field,
                                                  AutPower t);

/// Monic right divisors of x^n - 1 in F_q[x;theta_t] of each requested
/// degree, found by exhaustive trial of all q^d monic candidates.  Output is
/// sorted by (degree, coefficients low-index first).  Throws CapExceeded if
/// any requested degree needs more than `cap` candidates.
std::vector<SkewPolyFq> enumerate_right_divisors(
    const FieldCtx& field, AutPower t, unsigned n,
    std::span<const unsigned> degrees, std::uint64_t cap = kDefaultDivisorCap);

/// x^n - 1 = prod base[i].first ^ base[i].second over the theta-fixed
/// subfield F_{p^t}, factors monic irreducible, pairwise distinct, sorted.
struct Factorization {
  unsigned n = 0;
  std::vector<std::pair<SkewPolyFq, unsigned>> base;
};

/// Factors x^n - 1 over the theta-fixed subfield by trial division in
/// increasing degree (so every factor found is irreducible there).
/// Requires gcd(n, m/t) = 1: under that condition every monic right divisor
/// of x^n - 1 in the skew ring already lies in F_{p^t}[x], so the
/// commutative factorization governs the whole divisor lattice.
Factorization factor_commutative(const FieldCtx& field, AutPower t, unsigned n);

/// Irreducibility over the theta-fixed subfield, by exhaustive trial
/// division against the subfield's monic polynomials of degree <= deg f / 2.
bool is_irreducible_commutative(const SkewPolyFq& f, AutPower t);

/// All products prod base[i]^{j_i}, 0 <= j_i <= s_i: the full lattice of
/// monic right divisors of x^n - 1 under the gcd condition.  Sorted; size
/// prod (s_i + 1).
std::vector<SkewPolyFq> component_divisor_lattice(const Factorization& fact);

/// Number of skew cyclic codes of length n over R: prod (s_i + 1)^3.
/// The count for F_q itself is prod (s_i + 1) = component_divisor_lattice
/// size.  Same gcd(n, m/t) = 1 precondition as factor_commutative.
std::uint64_t count_r_skew_cyclic(const FieldCtx& field, AutPower t,
                                  unsigned n);

}  // namespace skewcodes
