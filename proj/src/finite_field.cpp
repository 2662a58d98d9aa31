#include "skewcodes/finite_field.hpp"

#include <algorithm>
#include <cstdlib>

namespace skewcodes {
namespace {

// Coefficient lists over F_p, low -> high, used only while building tables.
using Digits = std::vector<unsigned>;

int deg(const Digits& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

// Remainder of f by a monic divisor g, both over F_p.
Digits poly_mod(Digits f, const Digits& g, unsigned p) {
  const int dg = deg(g);
  for (int k = deg(f); k >= dg && dg >= 0; k = deg(f)) {
    if (k < dg) break;
    const unsigned c = f[static_cast<std::size_t>(k)];
    f[static_cast<std::size_t>(k)] = 0;
    for (int j = 0; j < dg; ++j) {
      const std::size_t at = static_cast<std::size_t>(k - dg + j);
      const unsigned sub = (c * g[static_cast<std::size_t>(j)]) % p;
      f[at] = (f[at] + p - sub) % p;
    }
  }
  return f;
}

Digits poly_mul_mod(const Digits& a, const Digits& b, const Digits& modulus,
                    unsigned p) {
  Digits prod(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(prod), modulus, p);
}

// Enumerates monic degree-d candidates in lexicographic order (coefficient 0
// compared first) and reports whether any strictly divides `f`.
bool has_monic_divisor_of_degree(const Digits& f, unsigned d, unsigned p) {
  Digits g(d + 1, 0);
  g[d] = 1;
  while (true) {
    if (deg(poly_mod(f, g, p)) < 0) return true;
    // odometer: last coefficient is least significant
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && g[static_cast<std::size_t>(i)] == p - 1)
      g[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return false;
    ++g[static_cast<std::size_t>(i)];
  }
}

bool is_irreducible(const Digits& f, unsigned m, unsigned p) {
  for (unsigned d = 1; 2 * d <= m; ++d)
    if (has_monic_divisor_of_degree(f, d, p)) return false;
  return true;
}

}  // namespace

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct FieldCtx::Impl {
  unsigned p = 0;
  unsigned m = 0;
  std::uint32_t q = 0;
  std::vector<unsigned> modulus;  // monic, size m+1
  std::vector<std::uint32_t> exp;                // exp[i] = g^i, i in [0, q-1)
  std::vector<std::uint32_t> log;                // log[exp[i]] = i; log[0] unused
  std::vector<std::vector<std::uint32_t>> frob;  // frob[j][x] = x^{p^j}

  std::uint32_t encode(const Digits& ds) const {
    std::uint32_t v = 0;
    for (std::size_t i = ds.size(); i-- > 0;) v = v * p + ds[i];
    return v;
  }
  Digits decode(std::uint32_t v) const {
    Digits ds(m, 0);
    for (unsigned i = 0; i < m; ++i) {
      ds[i] = v % p;
      v /= p;
    }
    return ds;
  }
  std::uint32_t raw_mul(std::uint32_t a, std::uint32_t b) const {
    return encode(poly_mul_mod(decode(a), decode(b), modulus, p));
  }
};

FieldCtx FieldCtx::build(unsigned p, unsigned m,
                         const std::optional<std::vector<unsigned>>& modulus) {
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2)
    throw Error(ErrorKind::EvenCharacteristic,
                "characteristic 2 is not supported (v^3 - v needs odd p)");
  if (m < 1)
    throw Error(ErrorKind::DegreeMismatch, "extension degree m must be >= 1");

  std::uint64_t q64 = 1;
  for (unsigned i = 0; i < m; ++i) {
    q64 *= p;
    if (q64 > (1u << 16))
      throw Error(ErrorKind::DegreeMismatch,
                  "field size p^m exceeds the supported bound 2^16");
  }

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->m = m;
  impl->q = static_cast<std::uint32_t>(q64);

  if (modulus) {
    const auto& md = *modulus;
    if (md.size() != m + 1 || md[m] != 1)
      throw Error(ErrorKind::DegreeMismatch,
                  "modulus must be monic of degree m (coefficients low -> high)");
    for (unsigned c : md)
      if (c >= p)
        throw Error(ErrorKind::DegreeMismatch,
                    "modulus coefficient out of range [0, p)");
    if (m > 1 && !is_irreducible(md, m, p))
      throw Error(ErrorKind::ReducibleModulus,
                  "modulus is reducible over F_p");
    impl->modulus = md;
  } else {
    // lexicographically smallest monic irreducible, coefficients compared
    // low-index first
    Digits cand(m + 1, 0);
    cand[m] = 1;
    while (true) {
      if (m == 1 || is_irreducible(cand, m, p)) break;
      int i = static_cast<int>(m) - 1;
      while (i >= 0 && cand[static_cast<std::size_t>(i)] == p - 1)
        cand[static_cast<std::size_t>(i--)] = 0;
      if (i < 0)
        throw Error(ErrorKind::ReducibleModulus,
                    "no irreducible modulus found");  // unreachable
      ++cand[static_cast<std::size_t>(i)];
    }
    impl->modulus = cand;
  }

  // discrete-log tables from the first primitive element
  const std::uint32_t q = impl->q;
  impl->exp.assign(q - 1, 1);
  impl->log.assign(q, 0);
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    std::uint32_t x = 1;
    std::uint32_t period = 0;
    for (std::uint32_t i = 1; i < q; ++i) {
      x = impl->raw_mul(x, cand);
      if (x == 1) {
        period = i;
        break;
      }
    }
    if (period == q - 1) {
      x = 1;
      for (std::uint32_t i = 0; i < q - 1; ++i) {
        impl->exp[i] = x;
        impl->log[x] = i;
        x = impl->raw_mul(x, cand);
      }
      break;
    }
  }

  // frob[j][x] = x^{p^j}; frob[0] is the identity
  impl->frob.assign(m, std::vector<std::uint32_t>(q, 0));
  for (std::uint32_t x = 0; x < q; ++x) impl->frob[0][x] = x;
  if (m > 1) {
    for (std::uint32_t x = 1; x < q; ++x) {
      const std::uint64_t e = (static_cast<std::uint64_t>(impl->log[x]) * p) %
                              (q - 1);
      impl->frob[1][x] = impl->exp[e];
    }
    for (unsigned j = 2; j < m; ++j)
      for (std::uint32_t x = 0; x < q; ++x)
        impl->frob[j][x] = impl->frob[1][impl->frob[j - 1][x]];
  }

  return FieldCtx(std::move(impl));
}

unsigned FieldCtx::characteristic() const { return impl_->p; }
unsigned FieldCtx::degree() const { return impl_->m; }
std::uint32_t FieldCtx::size() const { return impl_->q; }
const std::vector<unsigned>& FieldCtx::modulus() const { return impl_->modulus; }

FieldElement FieldCtx::from_value(std::uint64_t value) const {
  if (value >= impl_->q)
    throw Error(ErrorKind::ParseError,
                "element encoding " + std::to_string(value) +
                    " out of range [0, " + std::to_string(impl_->q) + ")");
  return FieldElement(static_cast<std::uint32_t>(value));
}

std::vector<unsigned> FieldCtx::digits(FieldElement x) const {
  return impl_->decode(x.value());
}

FieldElement FieldCtx::from_digits(const std::vector<unsigned>& ds) const {
  if (ds.size() != impl_->m)
    throw Error(ErrorKind::DegreeMismatch, "expected m digits");
  for (unsigned d : ds)
    if (d >= impl_->p)
      throw Error(ErrorKind::DegreeMismatch, "digit out of range [0, p)");
  return FieldElement(impl_->encode(ds));
}

FieldElement FieldCtx::add(FieldElement x, FieldElement y) const {
  const unsigned p = impl_->p;
  std::uint32_t a = x.value(), b = y.value(), out = 0, place = 1;
  for (unsigned i = 0; i < impl_->m; ++i) {
    out += ((a + b) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return FieldElement(out);
}

FieldElement FieldCtx::sub(FieldElement x, FieldElement y) const {
  return add(x, neg(y));
}

FieldElement FieldCtx::neg(FieldElement x) const {
  const unsigned p = impl_->p;
  std::uint32_t a = x.value(), out = 0, place = 1;
  for (unsigned i = 0; i < impl_->m; ++i) {
    out += ((p - a % p) % p) * place;
    a /= p;
    place *= p;
  }
  return FieldElement(out);
}

FieldElement FieldCtx::mul(FieldElement x, FieldElement y) const {
  if (x.value() == 0 || y.value() == 0) return FieldElement(0);
  const std::uint32_t n = impl_->q - 1;
  const std::uint32_t e =
      (impl_->log[x.value()] + impl_->log[y.value()]) % n;
  return FieldElement(impl_->exp[e]);
}

FieldElement FieldCtx::inv(FieldElement x) const {
  if (x.value() == 0)
    throw Error(ErrorKind::ZeroInverse, "0 has no multiplicative inverse");
  const std::uint32_t n = impl_->q - 1;
  return FieldElement(impl_->exp[(n - impl_->log[x.value()]) % n]);
}

FieldElement FieldCtx::pow(FieldElement x, std::uint64_t e) const {
  if (x.value() == 0) return e == 0 ? one() : zero();
  const std::uint32_t n = impl_->q - 1;
  const std::uint64_t r =
      (static_cast<std::uint64_t>(impl_->log[x.value()]) * (e % n)) % n;
  return FieldElement(impl_->exp[r]);
}

AutPower FieldCtx::aut(unsigned t) const {
  if (t < 1 || impl_->m % t != 0)
    throw Error(ErrorKind::InvalidAutomorphism,
                "t = " + std::to_string(t) + " does not divide m = " +
                    std::to_string(impl_->m));
  return AutPower{t, impl_->m / t};
}

FieldElement FieldCtx::frobenius(AutPower t, FieldElement x) const {
  return FieldElement(impl_->frob[t.t % impl_->m][x.value()]);
}

FieldElement FieldCtx::theta_pow(AutPower t, unsigned k, FieldElement x) const {
  const unsigned j = static_cast<unsigned>(
      (static_cast<std::uint64_t>(t.t) * k) % impl_->m);
  return FieldElement(impl_->frob[j][x.value()]);
}

FieldElement FieldCtx::element_at(std::uint64_t index) const {
  return from_value(index);
}

std::string FieldCtx::to_string(FieldElement x) const {
  return std::to_string(x.value());
}

std::string FieldCtx::pretty(FieldElement x) const {
  if (x.value() == 0) return "0";
  const auto ds = digits(x);
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (ds[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(ds[i]);
      continue;
    }
    if (ds[i] != 1) out += std::to_string(ds[i]);
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

FieldElement FieldCtx::parse(const std::string& text) const {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::ParseError,
                "expected a decimal element encoding, got \"" + text + "\"");
  return from_value(std::strtoull(text.c_str(), nullptr, 10));
}

bool operator==(const FieldCtx& lhs, const FieldCtx& rhs) {
  return lhs.impl_ == rhs.impl_ ||
         (lhs.impl_->p == rhs.impl_->p && lhs.impl_->m == rhs.impl_->m &&
          lhs.impl_->modulus == rhs.impl_->modulus);
}

}  // namespace skewcodes
