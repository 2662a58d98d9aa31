#include "skewcodes/skew_codes_fq.hpp"

#include <numeric>
#include <utility>

#include "skewcodes/linalg.hpp"

namespace skewcodes {
namespace {

bool theta_fixed(const SkewPolyFq& f) {
  const FieldCtx& F = f.ring();
  for (const auto& c : f.coeffs())
    if (F.frobenius(f.aut(), c) != c) return false;
  return true;
}

// Extended Euclid in the theta-fixed (hence commutative) subring:
// returns (d, a, b) with a*f + b*g = d, d the monic gcd.
struct Xgcd {
  SkewPolyFq d, a, b;
};

Xgcd commutative_xgcd(const SkewPolyFq& f, const SkewPolyFq& g) {
  const FieldCtx& F = f.ring();
  const AutPower t = f.aut();
  SkewPolyFq r0 = f, r1 = g;
  SkewPolyFq a0 = sp_constant(F, t, F.one()), a1 = SkewPolyFq(F, t);
  SkewPolyFq b0 = SkewPolyFq(F, t), b1 = sp_constant(F, t, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = sp_right_divide(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    SkewPolyFq an = sp_sub(a0, sp_mul(q, a1));
    SkewPolyFq bn = sp_sub(b0, sp_mul(q, b1));
    a0 = std::exchange(a1, std::move(an));
    b0 = std::exchange(b1, std::move(bn));
  }
  // normalize the gcd monic
  if (!r0.is_zero()) {
    const FieldElement s = F.inv(r0.leading());
    r0 = sp_scale(s, r0);
    a0 = sp_scale(s, a0);
    b0 = sp_scale(s, b0);
  }
  return {r0, a0, b0};
}

}  // namespace

WordFq skew_shift(const FieldCtx& field, AutPower t, const WordFq& word) {
  if (word.empty()) return {};
  WordFq out(word.size(), field.zero());
  out[0] = field.frobenius(t, word.back());
  for (std::size_t i = 1; i < word.size(); ++i)
    out[i] = field.frobenius(t, word[i - 1]);
  return out;
}

SkewPolyFq canonical_generator(const FieldCtx& field, AutPower t, unsigned n,
                               const SkewPolyFq& member) {
  const SkewPolyFq residue = sp_mod_ideal(member, n);
  if (residue.is_zero()) return SkewPolyFq(field, t);

  MatrixFq rows;
  for (unsigned j = 0; j < n; ++j) {
    const SkewPolyFq rj =
        sp_mod_ideal(sp_monomial_mul(field.one(), j, residue), n);
    WordFq row(n, field.zero());
    for (unsigned c = 0; c < n; ++c) row[c] = rj.coeff(c);
    rows.push_back(std::move(row));
  }
  // pivots from the high-degree end sort the basis by degree; the last
  // nonzero row is the minimal-degree member
  const std::size_t rank = rref(field, rows, /*high_degree_first=*/true);
  return SkewPolyFq(field, t, rows[rank - 1]);
}

SkewCyclicCodeFq::SkewCyclicCodeFq(FieldCtx field, AutPower t, unsigned n,
                                   SkewPolyFq g, SkewPolyFq h)
    : field_(std::move(field)),
      t_(t),
      n_(n),
      g_(std::move(g)),
      h_(std::move(h)),
      k_(n - static_cast<unsigned>(g_.degree())) {}

SkewCyclicCodeFq SkewCyclicCodeFq::from_generator(const FieldCtx& field,
                                                  AutPower t, unsigned n,
                                                  const SkewPolyFq& g) {
  if (n < 1)
    throw Error(ErrorKind::DegreeMismatch, "code length n must be >= 1");
  if (!(g.ring() == field) || !(g.aut() == t))
    throw Error(ErrorKind::ContextMismatch,
                "generator was built over a different ring");
  if (g.is_zero() || !g.is_monic())
    throw Error(ErrorKind::NotMonic, "generator must be monic");
  if (g.degree() > static_cast<int>(n))
    throw Error(ErrorKind::DegreeMismatch, "deg g exceeds the code length");
  auto [h, rem] = sp_right_divide(sp_x_pow_minus_one(field, t, n), g);
  if (!rem.is_zero())
    throw Error(ErrorKind::NotRightDivisor,
                "generator does not right-divide x^n - 1");
  return SkewCyclicCodeFq(field, t, n, g, std::move(h));
}

std::uint64_t SkewCyclicCodeFq::size() const {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k_; ++i) {
    const std::uint64_t next = out * field_.size();
    if (next / field_.size() != out)
      throw Error(ErrorKind::CapExceeded, "q^k overflows 64 bits");
    out = next;
  }
  return out;
}

WordFq SkewCyclicCodeFq::encode(const SkewPolyFq& msg) const {
  if (!(msg.ring() == field_) || !(msg.aut() == t_))
    throw Error(ErrorKind::ContextMismatch, "message from a different ring");
  if (msg.degree() >= static_cast<int>(k_))
    throw Error(ErrorKind::DegreeTooLarge,
                "message degree must be < k = " + std::to_string(k_));
  return poly_to_word(sp_mod_ideal(sp_mul(msg, g_), n_));
}

bool SkewCyclicCodeFq::contains(const WordFq& word) const {
  if (word.size() != n_)
    throw Error(ErrorKind::LengthMismatch,
                "word length != n = " + std::to_string(n_));
  return sp_right_divide(word_to_poly(word), g_).second.is_zero();
}

std::vector<WordFq> SkewCyclicCodeFq::generator_matrix() const {
  std::vector<WordFq> rows;
  for (unsigned j = 0; j < k_; ++j)
    rows.push_back(
        poly_to_word(sp_mod_ideal(sp_monomial_mul(field_.one(), j, g_), n_)));
  return rows;
}

SkewPolyFq SkewCyclicCodeFq::dual_generator() const {
  // hbar_i = theta^i(h_{n-r-i}) for i = 0..n-r, then scaled monic; the
  // constant term h_0 is nonzero (h_0 g_0 = -1), so deg hbar = n - r.
  const unsigned nr = n_ - static_cast<unsigned>(g_.degree());
  std::vector<FieldElement> coeffs(nr + 1, field_.zero());
  for (unsigned i = 0; i <= nr; ++i)
    coeffs[i] = field_.theta_pow(t_, i, h_.coeff(nr - i));
  SkewPolyFq hbar(field_, t_, std::move(coeffs));
  return sp_scale(field_.inv(hbar.leading()), hbar);
}

SkewCyclicCodeFq SkewCyclicCodeFq::dual() const {
  return from_generator(field_, t_, n_, dual_generator());
}

SkewPolyFq SkewCyclicCodeFq::idempotent() const {
  if (std::gcd(n_, t_.order) != 1)
    throw Error(ErrorKind::GcdConditionViolated,
                "gcd(n, m/t) = " + std::to_string(std::gcd(n_, t_.order)) +
                    " != 1");
  if (std::gcd(n_, field_.characteristic()) != 1)
    throw Error(ErrorKind::GcdConditionViolated,
                "gcd(n, q) != 1: x^n - 1 is not squarefree");
  // With gcd(n, m/t) = 1 both g and h lie in the theta-fixed subfield, where
  // the skew product is the ordinary commutative one.
  if (!theta_fixed(g_) || !theta_fixed(h_))
    throw Error(ErrorKind::GcdConditionViolated,
                "generator does not lie in the theta-fixed subfield");
  const auto x = commutative_xgcd(g_, h_);
  if (x.d.degree() != 0)
    throw Error(ErrorKind::GcdConditionViolated,
                "g and h are not coprime");
  return sp_mod_ideal(sp_mul(x.a, g_), n_);
}

bool SkewCyclicCodeFq::is_self_dual() const {
  return dual_generator() == g_;
}

bool SkewCyclicCodeFq::same_code(const SkewCyclicCodeFq& other) const {
  return field_ == other.field_ && t_ == other.t_ && n_ == other.n_ &&
         g_ == other.g_;
}

bool SkewCyclicCodeFq::generated_by(const SkewPolyFq& member) const {
  // the zero module is generated by the zero residue; its monic generator
  // in the stored representation is x^n - 1 itself
  const SkewPolyFq canon = canonical_generator(field_, t_, n_, member);
  if (canon.is_zero()) return is_zero_code();
  return canon == g_;
}

SkewPolyFq SkewCyclicCodeFq::word_to_poly(const WordFq& word) const {
  return SkewPolyFq(field_, t_, word);
}

WordFq SkewCyclicCodeFq::poly_to_word(const SkewPolyFq& f) const {
  WordFq word(n_, field_.zero());
  for (unsigned i = 0; i < n_; ++i) word[i] = f.coeff(i);
  return word;
}

}  // namespace skewcodes
