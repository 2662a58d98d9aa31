#include "skewcodes/divisor_search.hpp"

#include <algorithm>
#include <numeric>

namespace skewcodes {
namespace {

// Remainder check specialized for the hot loop: does the monic candidate g
// (coefficients low -> high, degree d) right-divide x^n - 1?  Works on a
// scratch buffer to avoid per-candidate allocations.
bool divides_x_pow_minus_one(const FieldCtx& F, AutPower t, unsigned n,
                             const std::vector<FieldElement>& g,
                             std::vector<FieldElement>& scratch) {
  const unsigned d = static_cast<unsigned>(g.size()) - 1;
  scratch.assign(n + 1, F.zero());
  scratch[0] = F.neg(F.one());
  scratch[n] = F.one();
  for (unsigned top = n; top >= d; --top) {
    const FieldElement c = scratch[top];
    if (F.is_zero(c)) {
      if (top == d) break;
      continue;
    }
    const unsigned shift = top - d;
    // candidate is monic: cancellation coefficient is c itself
    for (unsigned j = 0; j < d; ++j) {
      const FieldElement term = F.mul(c, F.theta_pow(t, shift, g[j]));
      scratch[shift + j] = F.sub(scratch[shift + j], term);
    }
    scratch[top] = F.zero();
    if (top == d) break;
  }
  for (unsigned i = 0; i < d; ++i)
    if (!F.is_zero(scratch[i])) return false;
  return true;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned e, ErrorKind kind,
                          const char* what) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (out > UINT64_MAX / base) throw Error(kind, what);
    out *= base;
  }
  return out;
}

}  // namespace

std::vector<FieldElement> fixed_subfield_elements(const FieldCtx& field,
                                                  AutPower t) {
  std::vector<FieldElement> out;
  for (std::uint32_t v = 0; v < field.size(); ++v) {
    const FieldElement x(v);
    if (field.frobenius(t, x) == x) out.push_back(x);
  }
  return out;
}

std::vector<SkewPolyFq> enumerate_right_divisors(
    const FieldCtx& field, AutPower t, unsigned n,
    std::span<const unsigned> degrees, std::uint64_t cap) {
  if (n < 1)
    throw Error(ErrorKind::DegreeMismatch, "length n must be >= 1");

  std::vector<unsigned> degs(degrees.begin(), degrees.end());
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());

  const std::uint64_t q = field.size();
  for (unsigned d : degs) {
    if (d > n) continue;
    const std::uint64_t candidates =
        checked_pow(q, d, ErrorKind::CapExceeded, "q^d overflows 64 bits");
    if (candidates > cap)
      throw Error(ErrorKind::CapExceeded,
                  "degree " + std::to_string(d) + " needs q^d = " +
                      std::to_string(candidates) + " candidates > cap " +
                      std::to_string(cap));
  }

  std::vector<SkewPolyFq> out;
  std::vector<FieldElement> scratch;
  for (unsigned d : degs) {
    if (d > n) continue;
    // odometer over the d free coefficients; the last one is least
    // significant, so candidates stream in lexicographic order
    std::vector<FieldElement> g(d + 1, field.zero());
    g[d] = field.one();
    while (true) {
      if (divides_x_pow_minus_one(field, t, n, g, scratch))
        out.emplace_back(field, t, g);
      bool advanced = false;
      for (std::size_t i = d; i-- > 0;) {
        if (g[i].value() + 1 < q) {
          g[i] = FieldElement(g[i].value() + 1);
          advanced = true;
          break;
        }
        g[i] = field.zero();
      }
      if (!advanced) break;
    }
  }
  return out;
}

bool is_irreducible_commutative(const SkewPolyFq& f, AutPower t) {
  const FieldCtx& F = f.ring();
  if (f.degree() < 1) return false;
  const auto sub = fixed_subfield_elements(F, t);
  for (const auto& c : f.coeffs())
    if (F.frobenius(t, c) != c)
      throw Error(ErrorKind::ContextMismatch,
                  "polynomial does not lie in the theta-fixed subfield");
  const unsigned df = static_cast<unsigned>(f.degree());
  for (unsigned d = 1; 2 * d <= df; ++d) {
    // all monic degree-d candidates over the fixed subfield
    std::vector<std::size_t> idx(d, 0);
    while (true) {
      std::vector<FieldElement> coeffs(d + 1, F.one());
      for (unsigned j = 0; j < d; ++j) coeffs[j] = sub[idx[j]];
      const SkewPolyFq cand(F, t, std::move(coeffs));
      if (sp_right_divide(f, cand).second.is_zero()) return false;
      std::size_t i = d;
      bool done = true;
      while (i-- > 0) {
        if (idx[i] + 1 < sub.size()) {
          ++idx[i];
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }
  return true;
}

Factorization factor_commutative(const FieldCtx& field, AutPower t,
                                 unsigned n) {
  if (n < 1)
    throw Error(ErrorKind::DegreeMismatch, "length n must be >= 1");
  if (std::gcd(n, t.order) != 1)
    throw Error(ErrorKind::GcdConditionViolated,
                "gcd(n, m/t) = " + std::to_string(std::gcd(n, t.order)) +
                    " != 1");

  const auto sub = fixed_subfield_elements(field, t);
  Factorization fact;
  fact.n = n;
  SkewPolyFq rest = sp_x_pow_minus_one(field, t, n);

  for (unsigned d = 1; rest.degree() > 0; ++d) {
    if (2 * d > static_cast<unsigned>(rest.degree())) {
      // no factor of degree <= deg/2 remains, so the rest is irreducible
      fact.base.emplace_back(rest, 1u);
      break;
    }
    std::vector<std::size_t> idx(d, 0);
    while (rest.degree() > 0) {
      std::vector<FieldElement> coeffs(d + 1, field.one());
      for (unsigned j = 0; j < d; ++j) coeffs[j] = sub[idx[j]];
      const SkewPolyFq cand(field, t, std::move(coeffs));
      unsigned mult = 0;
      while (true) {
        auto [quo, rem] = sp_right_divide(rest, cand);
        if (!rem.is_zero()) break;
        rest = quo;
        ++mult;
      }
      if (mult > 0) fact.base.emplace_back(cand, mult);
      std::size_t i = d;
      bool done = true;
      while (i-- > 0) {
        if (idx[i] + 1 < sub.size()) {
          ++idx[i];
          done = false;
          break;
        }
        idx[i] = 0;
      }
      if (done) break;
    }
  }

  std::sort(fact.base.begin(), fact.base.end(),
            [](const auto& lhs, const auto& rhs) {
              return sp_less(lhs.first, rhs.first);
            });
  return fact;
}

std::vector<SkewPolyFq> component_divisor_lattice(const Factorization& fact) {
  if (fact.base.empty())
    throw Error(ErrorKind::DegreeMismatch, "empty factorization");
  const FieldCtx& F = fact.base[0].first.ring();
  const AutPower t = fact.base[0].first.aut();

  std::vector<SkewPolyFq> out{sp_constant(F, t, F.one())};
  for (const auto& [g, s] : fact.base) {
    std::vector<SkewPolyFq> next;
    for (const auto& partial : out) {
      SkewPolyFq acc = partial;
      next.push_back(acc);
      for (unsigned j = 1; j <= s; ++j) {
        acc = sp_mul(acc, g);
        next.push_back(acc);
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& lhs, const auto& rhs) { return sp_less(lhs, rhs); });
  return out;
}

std::uint64_t count_r_skew_cyclic(const FieldCtx& field, AutPower t,
                                  unsigned n) {
  const Factorization fact = factor_commutative(field, t, n);
  std::uint64_t total = 1;
  for (const auto& [g, s] : fact.base) {
    const std::uint64_t per = static_cast<std::uint64_t>(s) + 1;
    for (int rep = 0; rep < 3; ++rep) {
      if (total > UINT64_MAX / per)
        throw Error(ErrorKind::CapExceeded, "code count overflows 64 bits");
      total *= per;
    }
  }
  return total;
}

}  // namespace skewcodes
