#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "skewcodes/extension_ring.hpp"
#include "skewcodes/skew_codes_fq.hpp"
#include "skewcodes/skew_polynomial.hpp"

namespace skewcodes {

using WordR = std::vector<RElement>;

/// Skew cyclic shift over R^n (coefficientwise theta on the wrapped entry).
WordR skew_shift(const ExtensionRing& ring, AutPower t, const WordR& word);

/// Coefficientwise CRT recombination of three component polynomials:
/// result = e1*f1 + e2*f2 + e3*f3.
SkewPolyR combine_component_polys(const ExtensionRing& ring,
                                  const SkewPolyFq& f1, const SkewPolyFq& f2,
                                  const SkewPolyFq& f3);

/// Skew cyclic code over R, assembled from three component codes over F_q:
/// C = e1*C1 + e2*C2 + e3*C3.  The combined generator
/// g = e1*g1 + e2*g2 + e3*g3 generates C as a left module and right-divides
/// x^n - 1 over R (verified at construction via the combined cofactor).
class RSkewCode {
 public:
  static RSkewCode from_components(const SkewCyclicCodeFq& c1,
                                   const SkewCyclicCodeFq& c2,
                                   const SkewCyclicCodeFq& c3);

  const ExtensionRing& ring() const { return ring_; }
  AutPower aut() const { return t_; }
  unsigned length() const { return n_; }
  const SkewCyclicCodeFq& component(unsigned i) const;  // i in {0,1,2}

  const SkewPolyR& generator() const { return g_; }
  const SkewPolyR& cofactor() const { return h_; }

  /// |C| = q^{3n - deg g1 - deg g2 - deg g3}.
  unsigned size_exponent() const;
  std::uint64_t size() const;  // CapExceeded if it overflows 64 bits

  /// Membership via the CRT components (the combined generator need not be
  /// monic, so direct division is not available).
  bool contains(const WordR& word) const;

  /// Componentwise CRT split of a word in R^n.
  std::array<WordFq, 3> split_word(const WordR& word) const;
  WordR combine_word(const WordFq& w1, const WordFq& w2,
                     const WordFq& w3) const;

  /// Codeword of an R-message polynomial: msg * g mod (x^n - 1).
  WordR encode(const SkewPolyR& msg) const;
  /// Codeword from three component messages (deg msg_i < k_i).
  WordR encode_components(const SkewPolyFq& m1, const SkewPolyFq& m2,
                          const SkewPolyFq& m3) const;

  /// Dual: componentwise duals recombined; |C| * |C_dual| = q^{3n}.
  RSkewCode dual() const;
  bool is_self_dual() const;

  /// Idempotent generator e = e1*e1(x) + e2*e2(x) + e3*e3(x); checks
  /// e^2 = e mod x^n - 1 over R.  Same gcd preconditions as the components.
  SkewPolyR idempotent() const;

  /// Rows e_i * (x^j g_i), j < k_i, stacked for i = 1,2,3.
  std::vector<WordR> generator_matrix() const;

  /// Generator matrix of the blockwise Gray image: component generator
  /// matrices placed on the block diagonal of a 3n-column matrix.
  std::vector<WordFq> gray_generator_matrix() const;

  bool same_code(const RSkewCode& other) const;

  SkewPolyR word_to_poly(const WordR& word) const;
  WordR poly_to_word(const SkewPolyR& f) const;

 private:
  RSkewCode(ExtensionRing ring, AutPower t, unsigned n,
            std::array<SkewCyclicCodeFq, 3> components, SkewPolyR g,
            SkewPolyR h);

  ExtensionRing ring_;
  AutPower t_;
  unsigned n_;
  std::array<SkewCyclicCodeFq, 3> components_;
  SkewPolyR g_, h_;
};

}  // namespace skewcodes
