#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "skewcodes/finite_field.hpp"

namespace skewcodes {

/// Element a + v*b + v^2*c of R = F_q[v]/(v^3 - v).
struct RElement {
  FieldElement a, b, c;

  friend constexpr bool operator==(const RElement&, const RElement&) = default;
  friend constexpr auto operator<=>(const RElement&, const RElement&) = default;
};

/// The orthogonal idempotent decomposition of R:
///   e1 = 1 - v^2,  e2 = 2^{-1}(v^2 + v),  e3 = 2^{-1}(v^2 - v),
/// with e1 + e2 + e3 = 1 and ei * ej = 0 for i != j.
struct IdempotentTriple {
  RElement e1, e2, e3;
};

/// R = F_q + vF_q + v^2F_q with v^3 = v.  Requires odd characteristic so
/// that 2 is invertible; then R splits as F_q^3 via the images of v at
/// 0, 1 and -1, which is what crt_split/crt_combine and the Gray map use.
/// Pure value-semantics context, cheap to copy.
class ExtensionRing {
 public:
  using Elem = RElement;

  explicit ExtensionRing(FieldCtx field);

  const FieldCtx& field() const { return field_; }

  RElement zero() const;
  RElement one() const;
  RElement make(FieldElement a, FieldElement b, FieldElement c) const;
  RElement from_field(FieldElement a) const;  // a + 0v + 0v^2

  RElement add(RElement x, RElement y) const;
  RElement sub(RElement x, RElement y) const;
  RElement neg(RElement x) const;
  RElement mul(RElement x, RElement y) const;
  /// Scalar action of F_q on R.
  RElement scale(FieldElement s, RElement x) const;

  IdempotentTriple idempotents() const;

  /// phi(a + vb + v^2c) = (a, a+b+c, a-b+c); a ring isomorphism onto F_q^3.
  std::array<FieldElement, 3> crt_split(RElement x) const;
  RElement crt_combine(FieldElement x1, FieldElement x2, FieldElement x3) const;

  /// Gray image of a single element (same map as crt_split).
  std::array<FieldElement, 3> gray(RElement x) const { return crt_split(x); }
  /// Lee weight: Hamming weight of the Gray image.
  unsigned lee_weight(RElement x) const;

  /// Coefficientwise theta_t^k.
  RElement theta_pow(AutPower t, unsigned k, RElement x) const;
  RElement frobenius(AutPower t, RElement x) const { return theta_pow(t, 1, x); }

  bool is_zero(RElement x) const;
  /// Unit iff every CRT component is nonzero.
  bool is_unit(RElement x) const;
  RElement inv(RElement x) const;  // ZeroInverse on non-units

  std::uint64_t element_count() const;  // q^3
  RElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(RElement x) const;

  std::string to_string(RElement x) const;  // "a:b:c"
  RElement parse(const std::string& text) const;

  /// Blockwise Gray image of a word in R^n: the three CRT coordinates are
  /// grouped as (a-block | sum-block | diff-block), each of length n.
  std::vector<FieldElement> gray_vector(std::span<const RElement> word) const;
  /// Interleaved layout: coordinate i contributes positions 3i, 3i+1, 3i+2.
  std::vector<FieldElement> gray_vector_interleaved(
      std::span<const RElement> word) const;
  unsigned lee_weight(std::span<const RElement> word) const;

  friend bool operator==(const ExtensionRing& lhs, const ExtensionRing& rhs) {
    return lhs.field_ == rhs.field_;
  }

 private:
  FieldCtx field_;
  FieldElement half_;  // 2^{-1}
};

/// Permutation relating the two Gray layouts for words of length n:
/// interleaved[k] = blockwise[perm[k]], with perm[3i + b] = b*n + i.
std::vector<std::size_t> gray_interleaved_to_blockwise(std::size_t n);

}  // namespace skewcodes
