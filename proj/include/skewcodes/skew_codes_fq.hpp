#pragma once

#include <cstdint>
#include <vector>

#include "skewcodes/skew_polynomial.hpp"

namespace skewcodes {

using WordFq = std::vector<FieldElement>;

/// Skew cyclic shift sigma(c) = (theta(c_{n-1}), theta(c_0), ..., theta(c_{n-2})).
WordFq skew_shift(const FieldCtx& field, AutPower t, const WordFq& word);

/// Monic minimal-degree member of the left module generated by `member`
/// inside F_q[x;theta_t]/(x^n - 1), found by row reduction of the
/// coefficient matrix of the residues x^j * member.  Returns the zero
/// polynomial for the zero module.
SkewPolyFq canonical_generator(const FieldCtx& field, AutPower t, unsigned n,
                               const SkewPolyFq& member);

/// Skew cyclic code of length n over F_q: the left module generated by a
/// monic right divisor g of x^n - 1 in F_q[x;theta_t]/(x^n - 1).  Stores the
/// cofactor h with x^n - 1 = h * g; dimension k = n - deg g.
class SkewCyclicCodeFq {
 public:
  /// Validates that g is monic and right-divides x^n - 1.
  static SkewCyclicCodeFq from_generator(const FieldCtx& field, AutPower t,
                                         unsigned n, const SkewPolyFq& g);

  const FieldCtx& field() const { return field_; }
  AutPower aut() const { return t_; }
  unsigned length() const { return n_; }
  unsigned dimension() const { return k_; }
  const SkewPolyFq& generator() const { return g_; }
  const SkewPolyFq& cofactor() const { return h_; }

  bool is_zero_code() const { return k_ == 0; }
  bool is_full_code() const { return k_ == n_; }

  /// |C| = q^k (throws CapExceeded if that overflows 64 bits).
  std::uint64_t size() const;
  unsigned size_exponent() const { return k_; }

  /// Codeword of the message polynomial (deg < k): msg * g as a length-n word.
  WordFq encode(const SkewPolyFq& msg) const;
  bool contains(const WordFq& word) const;

  /// Generator matrix: rows are the residues x^j * g, j = 0..k-1.
  std::vector<WordFq> generator_matrix() const;

  /// Dual code: generated by the monic normalization of
  /// hbar(x) = sum_i theta^i(h_{n-r-i}) x^i, r = deg g.
  SkewCyclicCodeFq dual() const;
  SkewPolyFq dual_generator() const;

  /// Idempotent e with <e> = <g> and e^2 = e mod x^n - 1.  Needs
  /// gcd(n, m/t) = 1 (so g and h live in the theta-fixed subfield) and
  /// gcd(n, p) = 1 (so x^n - 1 is squarefree there).
  SkewPolyFq idempotent() const;

  bool is_self_dual() const;

  /// Same module test; both sides are canonical by construction.
  bool same_code(const SkewCyclicCodeFq& other) const;

  /// True iff the left module generated by `member` equals this code.
  bool generated_by(const SkewPolyFq& member) const;

  SkewPolyFq word_to_poly(const WordFq& word) const;
  WordFq poly_to_word(const SkewPolyFq& f) const;

 private:
  SkewCyclicCodeFq(FieldCtx field, AutPower t, unsigned n, SkewPolyFq g,
                   SkewPolyFq h);

  FieldCtx field_;
  AutPower t_;
  unsigned n_;
  SkewPolyFq g_, h_;
  unsigned k_;
};

}  // namespace skewcodes
