#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewcodes/errors.hpp"

namespace skewcodes {

/// Element of F_{p^m}, stored as the canonical integer encoding
/// sum coeffs[i] * p^i in [0, q) of its polynomial-basis coordinates.
/// All arithmetic lives on FieldCtx; elements are plain values.
class FieldElement {
 public:
  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t value) : v_(value) {}

  constexpr std::uint32_t value() const { return v_; }

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;

 private:
  std::uint32_t v_ = 0;
};

/// Power theta_t : x -> x^{p^t} of the Frobenius.  Only exponents t that
/// divide m are admitted; the resulting automorphism has order m/t and
/// fixes exactly the subfield F_{p^t}.
struct AutPower {
  unsigned t = 1;
  unsigned order = 1;

  friend constexpr bool operator==(const AutPower&, const AutPower&) = default;
};

/// Immutable description of F_{p^m} (p an odd prime) with table-backed
/// arithmetic.  Copies share the underlying tables and are cheap; every
/// operation is pure, so contexts may be used concurrently.
class FieldCtx {
 public:
  using Elem = FieldElement;

  /// Constructs F_{p^m}.  When no modulus is given, picks the
  /// lexicographically smallest monic irreducible of degree m over F_p
  /// (coefficients compared low-index first).  A supplied modulus is the
  /// coefficient list low -> high, must be monic of degree m, and is
  /// checked irreducible by exhaustive trial division.
  static FieldCtx build(unsigned p, unsigned m,
                        const std::optional<std::vector<unsigned>>& modulus =
                            std::nullopt);

  unsigned characteristic() const;
  unsigned degree() const;
  std::uint32_t size() const;  // q = p^m
  const std::vector<unsigned>& modulus() const;

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }
  FieldElement from_value(std::uint64_t value) const;  // range-checked

  std::vector<unsigned> digits(FieldElement x) const;
  FieldElement from_digits(const std::vector<unsigned>& ds) const;

  FieldElement add(FieldElement x, FieldElement y) const;
  FieldElement sub(FieldElement x, FieldElement y) const;
  FieldElement neg(FieldElement x) const;
  FieldElement mul(FieldElement x, FieldElement y) const;
  FieldElement inv(FieldElement x) const;  // ZeroInverse on 0
  FieldElement pow(FieldElement x, std::uint64_t e) const;  // x^0 = 1

  /// Validates t | m and packages the automorphism power.
  AutPower aut(unsigned t) const;
  /// x -> x^{p^t}.
  FieldElement frobenius(AutPower t, FieldElement x) const;
  /// k-fold iterate theta_t^k.
  FieldElement theta_pow(AutPower t, unsigned k, FieldElement x) const;

  bool is_zero(FieldElement x) const { return x.value() == 0; }
  bool is_unit(FieldElement x) const { return x.value() != 0; }

  /// Deterministic enumeration: element_at(i) has encoding i.
  std::uint64_t element_count() const { return size(); }
  FieldElement element_at(std::uint64_t index) const;
  std::uint64_t index_of(FieldElement x) const { return x.value(); }

  std::string to_string(FieldElement x) const;  // decimal encoding
  std::string pretty(FieldElement x) const;     // e.g. "1+2a" for 7 in F_9
  FieldElement parse(const std::string& text) const;

  /// Structural equality: same p, m and modulus.
  friend bool operator==(const FieldCtx& lhs, const FieldCtx& rhs);

 private:
  struct Impl;
  explicit FieldCtx(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(unsigned n);

}  // namespace skewcodes
