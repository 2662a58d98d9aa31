#include "doctest.h"

#include <algorithm>
#include <vector>

#include "skewcodes/divisor_search.hpp"

using namespace skewcodes;

namespace {

SkewPolyFq make_poly(const FieldCtx& F, AutPower t,
                     std::vector<std::uint32_t> vals) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(vals.size());
  for (auto v : vals) coeffs.emplace_back(v);
  return SkewPolyFq(F, t, std::move(coeffs));
}

// Reference enumeration via the public division routine: every monic degree-d
// candidate, kept when it right-divides x^n - 1.
std::vector<SkewPolyFq> oracle_divisors(const FieldCtx& F, AutPower t,
                                        unsigned n, unsigned d) {
  std::vector<SkewPolyFq> out;
  const SkewPolyFq ideal = sp_x_pow_minus_one(F, t, n);
  std::vector<std::uint32_t> digits(d, 0);
  while (true) {
    std::vector<FieldElement> coeffs(d + 1, F.one());
    for (unsigned j = 0; j < d; ++j) coeffs[j] = FieldElement(digits[j]);
    const SkewPolyFq cand(F, t, std::move(coeffs));
    if (sp_is_right_divisor(cand, ideal)) out.push_back(cand);
    bool advanced = false;
    for (unsigned j = 0; j < d; ++j) {
      if (digits[j] + 1 < F.size()) {
        ++digits[j];
        advanced = true;
        break;
      }
      digits[j] = 0;
    }
    if (!advanced) break;
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return sp_less(a, b); });
  return out;
}

}  // namespace

TEST_CASE("fixed subfield of theta_t") {
  const FieldCtx F = FieldCtx::build(3, 2);
  const auto sub1 = fixed_subfield_elements(F, F.aut(1));
  CHECK(sub1 == std::vector<FieldElement>{FieldElement(0), FieldElement(1),
                                          FieldElement(2)});
  CHECK(fixed_subfield_elements(F, F.aut(2)).size() == 9);
}

TEST_CASE("linear right divisors of x^4 - 1 over F_9") {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const std::vector<unsigned> degs{1};
  const auto divs = enumerate_right_divisors(F, t, 4, degs);
  REQUIRE(divs.size() == 8);
  for (std::uint32_t b = 1; b <= 8; ++b)
    CHECK(divs[b - 1] == make_poly(F, t, {b, 1}));
}

TEST_CASE("enumeration agrees with the direct oracle for every degree") {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  for (unsigned n : {1u, 2u, 4u, 5u}) {
    std::vector<unsigned> degs;
    for (unsigned d = 0; d <= n; ++d) degs.push_back(d);
    const auto divs = enumerate_right_divisors(F, t, n, degs);
    std::vector<SkewPolyFq> expect;
    for (unsigned d = 0; d <= n; ++d)
      for (const auto& g : oracle_divisors(F, t, n, d)) expect.push_back(g);
    CHECK(divs == expect);
    // every entry really divides, and the listing is strictly ordered
    const SkewPolyFq ideal = sp_x_pow_minus_one(F, t, n);
    for (std::size_t i = 0; i < divs.size(); ++i) {
      CHECK(sp_is_right_divisor(divs[i], ideal));
      if (i) CHECK(sp_less(divs[i - 1], divs[i]));
    }
  }
}

TEST_CASE("degree cap") {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const std::vector<unsigned> degs{3};
  try {
    enumerate_right_divisors(F, t, 5, degs, 100);  // 9^3 = 729 > 100
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
  CHECK_NOTHROW(enumerate_right_divisors(F, t, 5, degs, 729));
}

TEST_CASE("commutative factorizations") {
  SUBCASE("x^5 - 1 over F_9 with theta_1") {
    const FieldCtx F = FieldCtx::build(3, 2);
    const AutPower t = F.aut(1);
    const Factorization fact = factor_commutative(F, t, 5);
    REQUIRE(fact.base.size() == 2);
    CHECK(fact.base[0].first == make_poly(F, t, {2, 1}));
    CHECK(fact.base[0].second == 1);
    CHECK(fact.base[1].first == make_poly(F, t, {1, 1, 1, 1, 1}));
    CHECK(fact.base[1].second == 1);
    CHECK(is_irreducible_commutative(fact.base[1].first, t));
  }
  SUBCASE("x^7 - 1 over F_9 with theta_1") {
    const FieldCtx F = FieldCtx::build(3, 2);
    const AutPower t = F.aut(1);
    const Factorization fact = factor_commutative(F, t, 7);
    REQUIRE(fact.base.size() == 2);
    CHECK(fact.base[0].first == make_poly(F, t, {2, 1}));
    CHECK(fact.base[1].first == make_poly(F, t, {1, 1, 1, 1, 1, 1, 1}));
    CHECK(is_irreducible_commutative(fact.base[1].first, t));
  }
  SUBCASE("x^4 - 1 over F_9 with the identity automorphism") {
    const FieldCtx F = FieldCtx::build(3, 2);
    const AutPower t = F.aut(2);  // order 1, fixes all of F_9
    const Factorization fact = factor_commutative(F, t, 4);
    REQUIRE(fact.base.size() == 4);  // alpha^2 = -1, so four linear factors
    CHECK(fact.base[0].first == make_poly(F, t, {1, 1}));
    CHECK(fact.base[1].first == make_poly(F, t, {2, 1}));
    CHECK(fact.base[2].first == make_poly(F, t, {3, 1}));
    CHECK(fact.base[3].first == make_poly(F, t, {6, 1}));
  }
  SUBCASE("repeated factors in characteristic 3") {
    const FieldCtx F = FieldCtx::build(3, 1);
    const AutPower t = F.aut(1);
    const Factorization fact = factor_commutative(F, t, 3);  // (x - 1)^3
    REQUIRE(fact.base.size() == 1);
    CHECK(fact.base[0].first == make_poly(F, t, {2, 1}));
    CHECK(fact.base[0].second == 3);
  }
  SUBCASE("product of the factors reconstructs x^n - 1") {
    const FieldCtx F = FieldCtx::build(3, 2);
    const AutPower t = F.aut(1);
    for (unsigned n : {1u, 3u, 5u, 7u}) {
      const Factorization fact = factor_commutative(F, t, n);
      SkewPolyFq prod = sp_constant(F, t, F.one());
      for (const auto& [g, mult] : fact.base)
        for (unsigned j = 0; j < mult; ++j) prod = sp_mul(prod, g);
      CHECK(prod == sp_x_pow_minus_one(F, t, n));
    }
  }
  SUBCASE("gcd precondition") {
    const FieldCtx F = FieldCtx::build(3, 2);
    try {
      factor_commutative(F, F.aut(1), 4);  // gcd(4, 2) = 2
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::GcdConditionViolated);
    }
  }
}

TEST_CASE("irreducibility by trial division") {
  const FieldCtx F3 = FieldCtx::build(3, 1);
  const AutPower t = F3.aut(1);
  CHECK(is_irreducible_commutative(make_poly(F3, t, {1, 0, 1}), t));  // x^2+1
  CHECK_FALSE(
      is_irreducible_commutative(make_poly(F3, t, {1, 1, 1}), t));  // (x-1)^2
  CHECK_FALSE(is_irreducible_commutative(make_poly(F3, t, {1}), t));
  CHECK(is_irreducible_commutative(make_poly(F3, t, {2, 1}), t));
}

TEST_CASE("divisor lattice from the factorization") {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const auto lattice =
      component_divisor_lattice(factor_commutative(F, t, 5));
  REQUIRE(lattice.size() == 4);  // 1, x+2, the quartic, x^5 - 1
  CHECK(lattice[0] == sp_constant(F, t, F.one()));
  CHECK(lattice[1] == make_poly(F, t, {2, 1}));
  CHECK(lattice[2] == make_poly(F, t, {1, 1, 1, 1, 1}));
  CHECK(lattice[3] == sp_x_pow_minus_one(F, t, 5));

  // matches brute force over all degrees (the small half of the
  // cross-validation done at n = 5 and n = 7 in the acceptance suite)
  std::vector<unsigned> degs;
  for (unsigned d = 0; d <= 5; ++d) degs.push_back(d);
  CHECK(enumerate_right_divisors(F, t, 5, degs) == lattice);
}

TEST_CASE("code counts over R") {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  CHECK(count_r_skew_cyclic(F, t, 5) == 64);
  CHECK(count_r_skew_cyclic(F, t, 1) == 8);
  CHECK(count_r_skew_cyclic(F, t, 7) == 64);
  // repeated-factor case over F_3: (x-1)^3, so (3+1)^3
  const FieldCtx F3 = FieldCtx::build(3, 1);
  CHECK(count_r_skew_cyclic(F3, F3.aut(1), 3) == 64);
}
