#include "skewcodes/skew_codes_r.hpp"

#include <algorithm>
#include <utility>

namespace skewcodes {

WordR skew_shift(const ExtensionRing& ring, AutPower t, const WordR& word) {
  if (word.empty()) return {};
  WordR out(word.size(), ring.zero());
  out[0] = ring.frobenius(t, word.back());
  for (std::size_t i = 1; i < word.size(); ++i)
    out[i] = ring.frobenius(t, word[i - 1]);
  return out;
}

SkewPolyR combine_component_polys(const ExtensionRing& ring,
                                  const SkewPolyFq& f1, const SkewPolyFq& f2,
                                  const SkewPolyFq& f3) {
  const std::size_t len = std::max(
      {f1.coeffs().size(), f2.coeffs().size(), f3.coeffs().size()});
  std::vector<RElement> coeffs(len, ring.zero());
  for (std::size_t i = 0; i < len; ++i)
    coeffs[i] = ring.crt_combine(f1.coeff(i), f2.coeff(i), f3.coeff(i));
  return SkewPolyR(ring, f1.aut(), std::move(coeffs));
}

RSkewCode::RSkewCode(ExtensionRing ring, AutPower t, unsigned n,
                     std::array<SkewCyclicCodeFq, 3> components, SkewPolyR g,
                     SkewPolyR h)
    : ring_(std::move(ring)),
      t_(t),
      n_(n),
      components_(std::move(components)),
      g_(std::move(g)),
      h_(std::move(h)) {}

RSkewCode RSkewCode::from_components(const SkewCyclicCodeFq& c1,
                                     const SkewCyclicCodeFq& c2,
                                     const SkewCyclicCodeFq& c3) {
  if (!(c1.field() == c2.field()) || !(c1.field() == c3.field()))
    throw Error(ErrorKind::ContextMismatch,
                "component codes live over different fields");
  if (!(c1.aut() == c2.aut()) || !(c1.aut() == c3.aut()))
    throw Error(ErrorKind::ContextMismatch,
                "component codes use different automorphism powers");
  if (c1.length() != c2.length() || c1.length() != c3.length())
    throw Error(ErrorKind::LengthMismatch,
                "component codes have different lengths");

  ExtensionRing ring(c1.field());
  const AutPower t = c1.aut();
  const unsigned n = c1.length();
  SkewPolyR g = combine_component_polys(ring, c1.generator(), c2.generator(),
                                        c3.generator());
  SkewPolyR h = combine_component_polys(ring, c1.cofactor(), c2.cofactor(),
                                        c3.cofactor());
  // The orthogonal idempotents kill cross terms, so h * g collapses to
  // e1(h1 g1) + e2(h2 g2) + e3(h3 g3) = x^n - 1.  Verified, not assumed.
  if (!(sp_mul(h, g) == sp_x_pow_minus_one(ring, t, n)))
    throw Error(ErrorKind::NotRightDivisor,
                "combined generator does not right-divide x^n - 1 over R");
  return RSkewCode(std::move(ring), t, n, {c1, c2, c3}, std::move(g),
                   std::move(h));
}

const SkewCyclicCodeFq& RSkewCode::component(unsigned i) const {
  if (i > 2)
    throw Error(ErrorKind::DegreeMismatch, "component index must be 0, 1, 2");
  return components_[i];
}

unsigned RSkewCode::size_exponent() const {
  return components_[0].dimension() + components_[1].dimension() +
         components_[2].dimension();
}

std::uint64_t RSkewCode::size() const {
  std::uint64_t out = 1;
  const std::uint64_t q = ring_.field().size();
  for (unsigned i = 0; i < size_exponent(); ++i) {
    const std::uint64_t next = out * q;
    if (next / q != out)
      throw Error(ErrorKind::CapExceeded, "|C| overflows 64 bits");
    out = next;
  }
  return out;
}

std::array<WordFq, 3> RSkewCode::split_word(const WordR& word) const {
  const FieldCtx& F = ring_.field();
  std::array<WordFq, 3> out{WordFq(word.size(), F.zero()),
                            WordFq(word.size(), F.zero()),
                            WordFq(word.size(), F.zero())};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const auto g = ring_.crt_split(word[i]);
    out[0][i] = g[0];
    out[1][i] = g[1];
    out[2][i] = g[2];
  }
  return out;
}

WordR RSkewCode::combine_word(const WordFq& w1, const WordFq& w2,
                              const WordFq& w3) const {
  if (w1.size() != n_ || w2.size() != n_ || w3.size() != n_)
    throw Error(ErrorKind::LengthMismatch, "component word length != n");
  WordR out(n_, ring_.zero());
  for (unsigned i = 0; i < n_; ++i)
    out[i] = ring_.crt_combine(w1[i], w2[i], w3[i]);
  return out;
}

bool RSkewCode::contains(const WordR& word) const {
  if (word.size() != n_)
    throw Error(ErrorKind::LengthMismatch,
                "word length != n = " + std::to_string(n_));
  const auto parts = split_word(word);
  return components_[0].contains(parts[0]) &&
         components_[1].contains(parts[1]) && components_[2].contains(parts[2]);
}

WordR RSkewCode::encode(const SkewPolyR& msg) const {
  if (!(msg.ring() == ring_) || !(msg.aut() == t_))
    throw Error(ErrorKind::ContextMismatch, "message from a different ring");
  return poly_to_word(sp_mod_ideal(sp_mul(msg, g_), n_));
}

WordR RSkewCode::encode_components(const SkewPolyFq& m1, const SkewPolyFq& m2,
                                   const SkewPolyFq& m3) const {
  return combine_word(components_[0].encode(m1), components_[1].encode(m2),
                      components_[2].encode(m3));
}

RSkewCode RSkewCode::dual() const {
  return from_components(components_[0].dual(), components_[1].dual(),
                         components_[2].dual());
}

bool RSkewCode::is_self_dual() const {
  return components_[0].is_self_dual() && components_[1].is_self_dual() &&
         components_[2].is_self_dual();
}

SkewPolyR RSkewCode::idempotent() const {
  const SkewPolyR e =
      combine_component_polys(ring_, components_[0].idempotent(),
                              components_[1].idempotent(),
                              components_[2].idempotent());
  if (!(sp_mod_ideal(sp_mul(e, e), n_) == sp_mod_ideal(e, n_)))
    throw Error(ErrorKind::GcdConditionViolated,
                "combined idempotent fails e^2 = e");  // unreachable
  return e;
}

std::vector<WordR> RSkewCode::generator_matrix() const {
  const auto idem = ring_.idempotents();
  const std::array<RElement, 3> e{idem.e1, idem.e2, idem.e3};
  std::vector<WordR> rows;
  for (unsigned i = 0; i < 3; ++i) {
    for (const WordFq& row : components_[i].generator_matrix()) {
      WordR r(n_, ring_.zero());
      for (unsigned c = 0; c < n_; ++c) r[c] = ring_.scale(row[c], e[i]);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<WordFq> RSkewCode::gray_generator_matrix() const {
  const FieldCtx& F = ring_.field();
  std::vector<WordFq> rows;
  for (unsigned i = 0; i < 3; ++i) {
    for (const WordFq& row : components_[i].generator_matrix()) {
      WordFq r(3 * n_, F.zero());
      for (unsigned c = 0; c < n_; ++c) r[i * n_ + c] = row[c];
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

bool RSkewCode::same_code(const RSkewCode& other) const {
  return components_[0].same_code(other.components_[0]) &&
         components_[1].same_code(other.components_[1]) &&
         components_[2].same_code(other.components_[2]);
}

SkewPolyR RSkewCode::word_to_poly(const WordR& word) const {
  return SkewPolyR(ring_, t_, word);
}

WordR RSkewCode::poly_to_word(const SkewPolyR& f) const {
  WordR word(n_, ring_.zero());
  for (unsigned i = 0; i < n_; ++i) word[i] = f.coeff(i);
  return word;
}

}  // namespace skewcodes
