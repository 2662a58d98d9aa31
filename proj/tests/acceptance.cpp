// Acceptance harness: seven end-to-end checks, one PASS/FAIL line each.
// Every comparison is exact integer arithmetic -- there are no numeric
// tolerances anywhere, so "equal" always means coefficientwise identity.
// Exit status 0 iff all criteria hold.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "skewcodes/analysis.hpp"
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

SkewCyclicCodeFq make_code(const FieldCtx& F, AutPower t, unsigned n,
                           std::vector<std::uint32_t> gv) {
  return SkewCyclicCodeFq::from_generator(F, t, n, make_poly(F, t, gv));
}

// Visits all q^k codewords as left-linear combinations of the generator
// matrix rows.  Callers keep q^k small.
template <typename Fn>
void for_each_codeword(const SkewCyclicCodeFq& code, Fn&& fn) {
  const FieldCtx& F = code.field();
  const unsigned n = code.length();
  const unsigned k = code.dimension();
  const auto rows = code.generator_matrix();
  std::vector<std::uint32_t> msg(k, 0);
  WordFq word(n, F.zero());
  while (true) {
    std::fill(word.begin(), word.end(), F.zero());
    for (unsigned j = 0; j < k; ++j) {
      if (msg[j] == 0) continue;
      for (unsigned i = 0; i < n; ++i)
        word[i] = F.add(word[i], F.mul(FieldElement(msg[j]), rows[j][i]));
    }
    fn(word);
    bool advanced = false;
    for (unsigned j = 0; j < k; ++j) {
      if (msg[j] + 1 < F.size()) {
        ++msg[j];
        advanced = true;
        break;
      }
      msg[j] = 0;
    }
    if (!advanced) break;
  }
}

// Visits all |C| codewords of an R-code via component message triples.
template <typename Fn>
void for_each_r_codeword(const RSkewCode& code, Fn&& fn) {
  std::array<std::vector<WordFq>, 3> parts;
  for (unsigned i = 0; i < 3; ++i)
    for_each_codeword(code.component(i),
                      [&](const WordFq& w) { parts[i].push_back(w); });
  for (const auto& w1 : parts[0])
    for (const auto& w2 : parts[1])
      for (const auto& w3 : parts[2]) fn(code.combine_word(w1, w2, w3));
}

unsigned weight_of(const WordFq& w) {
  unsigned c = 0;
  for (auto e : w)
    if (e.value() != 0) ++c;
  return c;
}

// --- criterion 1 ------------------------------------------------------
// The chain (x+1)(x+2)(x+a)(x+2a), multiplied left to right in
// F_9[x; theta_1], must equal x^4 - 1 coefficientwise.
bool quartic_linear_factor_product() {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const auto lin = [&](std::uint32_t b) { return make_poly(F, t, {b, 1}); };
  const SkewPolyFq product =
      sp_mul(sp_mul(sp_mul(lin(1), lin(2)), lin(3)), lin(6));
  return product == sp_x_pow_minus_one(F, t, 4);
}

// --- criterion 2 ------------------------------------------------------
// <x+2a> of length 4 over F_9 is a [4, 3, 2] code; the R-code built from
// three copies has 9^9 codewords and Gray parameters [12, 9, 2].  The Gray
// distance must agree between the component-minimum formula and a direct
// enumeration of Gray images (9^3 words per component block).
bool quartic_code_parameters() {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const auto comp = make_code(F, t, 4, {6, 1});
  bool ok = code_params(comp).to_string() == "[4, 3, 2]";

  const auto code = RSkewCode::from_components(comp, comp, comp);
  ok = ok && code.size_exponent() == 9;
  ok = ok && code.size() == 387420489ull;  // 9^9

  const CodeParams gray = gray_image_params(code);
  ok = ok && gray.to_string() == "[12, 9, 2]";

  std::optional<unsigned> direct;
  const WordFq zero(code.length(), F.zero());
  for (unsigned i = 0; i < 3; ++i) {
    for_each_codeword(code.component(i), [&](const WordFq& w) {
      const WordR rw = code.combine_word(i == 0 ? w : zero, i == 1 ? w : zero,
                                         i == 2 ? w : zero);
      const unsigned wt = weight_of(code.ring().gray_vector(rw));
      if (wt > 0 && (!direct || wt < *direct)) direct = wt;
    });
  }
  return ok && direct.has_value() && gray.distance.has_value() &&
         *direct == *gray.distance;
}

// --- criterion 3 ------------------------------------------------------
// x^5 - 1 factors over the theta-fixed subfield F_3 as
// (x+2)(x^4+x^3+x^2+x+1) with the quartic irreducible there, giving
// 64 skew cyclic codes of length 5 over R (63 nonzero).
bool quintic_factorization_and_count() {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const SkewPolyFq lin = make_poly(F, t, {2, 1});
  const SkewPolyFq quartic = make_poly(F, t, {1, 1, 1, 1, 1});

  const Factorization fact = factor_commutative(F, t, 5);
  bool ok = fact.base.size() == 2;
  ok = ok && fact.base[0].first == lin && fact.base[0].second == 1;
  ok = ok && fact.base[1].first == quartic && fact.base[1].second == 1;
  ok = ok && sp_mul(lin, quartic) == sp_x_pow_minus_one(F, t, 5);
  ok = ok && is_irreducible_commutative(quartic, t);
  ok = ok && !is_irreducible_commutative(sp_mul(lin, lin), t);

  const std::uint64_t total = count_r_skew_cyclic(F, t, 5);
  return ok && total == 64 && total - 1 == 63;
}

// --- criterion 4 ------------------------------------------------------
// Both sextic factorizations hold exactly in F_9[x; theta_1]:
//   x^6-1 = (2 + ax + 2ax^3 + x^4)(1 + ax + x^2)
//   x^6-1 = (2 + x + (1+2a)x^2 + x^3)(1 + x + (2+2a)x^2 + x^3);
// the component codes have dimensions 2, 2, 3 and the Gray image of the
// R-code has parameters [18, 7, 4], with the component distances found by
// enumerating 81, 81 and 729 codewords.
bool sextic_code_parameters() {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const SkewPolyFq modulus = sp_x_pow_minus_one(F, t, 6);

  const SkewPolyFq g12 = make_poly(F, t, {2, 3, 0, 6, 1});
  const SkewPolyFq h12 = make_poly(F, t, {1, 3, 1});
  const SkewPolyFq g3 = make_poly(F, t, {2, 1, 7, 1});
  const SkewPolyFq h3 = make_poly(F, t, {1, 1, 8, 1});
  bool ok = sp_mul(g12, h12) == modulus;
  ok = ok && sp_mul(g3, h3) == modulus;

  const auto c12 = SkewCyclicCodeFq::from_generator(F, t, 6, g12);
  const auto c3 = SkewCyclicCodeFq::from_generator(F, t, 6, g3);
  ok = ok && c12.dimension() == 2 && c3.dimension() == 3;

  const auto code = RSkewCode::from_components(c12, c12, c3);
  ok = ok && code.size_exponent() == 7;

  // direct component enumerations: 81, 81, 729 codewords
  std::array<std::optional<unsigned>, 3> dist;
  std::array<std::uint64_t, 3> counted{0, 0, 0};
  for (unsigned i = 0; i < 3; ++i)
    for_each_codeword(code.component(i), [&](const WordFq& w) {
      ++counted[i];
      const unsigned wt = weight_of(w);
      if (wt > 0 && (!dist[i] || wt < *dist[i])) dist[i] = wt;
    });
  ok = ok && counted[0] == 81 && counted[1] == 81 && counted[2] == 729;
  ok = ok && dist[0].has_value() && dist[1].has_value() && dist[2].has_value();
  const unsigned direct =
      std::min({*dist[0], *dist[1], *dist[2]});

  const CodeParams gray = gray_image_params(code);
  ok = ok && gray.to_string() == "[18, 7, 4]";
  return ok && gray.distance.has_value() && direct == *gray.distance;
}

// --- criterion 5 ------------------------------------------------------
// For (q, t, n) in {(9, 1, 5), (9, 1, 7)} the brute-force enumeration of
// monic right divisors of x^n - 1 over all degrees equals the lattice
// generated by the commutative factorization -- set equality.
bool divisor_enumeration_matches_lattice() {
  const FieldCtx F = FieldCtx::build(3, 2);
  const AutPower t = F.aut(1);
  const auto by_order = [](const SkewPolyFq& a, const SkewPolyFq& b) {
    return sp_less(a, b);
  };
  for (unsigned n : {5u, 7u}) {
    std::vector<unsigned> degs;
    for (unsigned d = 0; d <= n; ++d) degs.push_back(d);
    std::vector<SkewPolyFq> brute =
        enumerate_right_divisors(F, t, n, degs, 1ull << 23);
    std::vector<SkewPolyFq> lattice =
        component_divisor_lattice(factor_commutative(F, t, n));
    std::sort(brute.begin(), brute.end(), by_order);
    std::sort(lattice.begin(), lattice.end(), by_order);
    if (!(brute == lattice)) return false;
  }
  return true;
}

// --- criterion 6 ------------------------------------------------------
// Algebraic property battery.  Exhaustive whenever the state space has at
// most 10^4 points, otherwise 10^4 randomized trials from a fixed seed.
bool algebraic_property_suite() {
  std::mt19937 rng(0x5eed);
  bool ok = true;

  const FieldCtx F3 = FieldCtx::build(3, 1);
  const FieldCtx F9 = FieldCtx::build(3, 2);
  const AutPower t3 = F3.aut(1);
  const AutPower t9 = F9.aut(1);
  const ExtensionRing R3(F3);
  const ExtensionRing R9(F9);

  // Lee weight = Hamming weight of the Gray image: exhaustive on single
  // elements (27 and 729 states), randomized on length-6 words over R9.
  for (const ExtensionRing* R : {&R3, &R9})
    for (std::uint64_t i = 0; i < R->element_count(); ++i) {
      const RElement x = R->element_at(i);
      unsigned hw = 0;
      for (auto e : R->gray(x))
        if (e.value() != 0) ++hw;
      ok = ok && R->lee_weight(x) == hw;
    }
  {
    std::uniform_int_distribution<std::uint64_t> pick(0,
                                                      R9.element_count() - 1);
    for (int trial = 0; trial < 10000; ++trial) {
      WordR w(6);
      for (auto& e : w) e = R9.element_at(pick(rng));
      ok = ok && R9.lee_weight(w) == weight_of(R9.gray_vector(w));
    }
  }

  // CRT map: additive and multiplicative homomorphism, inverse pair with
  // combine.  Exhaustive pairs over R3 (729), randomized pairs over R9.
  const auto crt_laws = [&](const ExtensionRing& R, RElement x, RElement y) {
    const FieldCtx& F = R.field();
    const auto sx = R.crt_split(x), sy = R.crt_split(y);
    const auto ssum = R.crt_split(R.add(x, y));
    const auto sprod = R.crt_split(R.mul(x, y));
    bool good = true;
    for (int i = 0; i < 3; ++i) {
      good = good && ssum[i] == F.add(sx[i], sy[i]);
      good = good && sprod[i] == F.mul(sx[i], sy[i]);
    }
    good = good && R.crt_combine(sx[0], sx[1], sx[2]) == x;
    return good;
  };
  for (std::uint64_t i = 0; i < 27; ++i)
    for (std::uint64_t j = 0; j < 27; ++j)
      ok = ok && crt_laws(R3, R3.element_at(i), R3.element_at(j));
  {
    std::uniform_int_distribution<std::uint64_t> pick(0, 728);
    for (int trial = 0; trial < 10000; ++trial)
      ok = ok &&
           crt_laws(R9, R9.element_at(pick(rng)), R9.element_at(pick(rng)));
    for (int trial = 0; trial < 10000; ++trial) {
      const FieldElement a(static_cast<std::uint32_t>(pick(rng) % 9));
      const FieldElement b(static_cast<std::uint32_t>(pick(rng) % 9));
      const FieldElement c(static_cast<std::uint32_t>(pick(rng) % 9));
      const auto s = R9.crt_split(R9.crt_combine(a, b, c));
      ok = ok && s[0] == a && s[1] == b && s[2] == c;
    }
  }

  // Skew ring associativity and distributivity: randomized polynomials of
  // degree <= 4 over F_9[x; theta_1].
  std::uniform_int_distribution<std::uint32_t> coeff(0, 8);
  std::uniform_int_distribution<unsigned> degree(0, 4);
  const auto random_poly = [&]() {
    std::vector<FieldElement> cs(degree(rng) + 1);
    for (auto& c : cs) c = FieldElement(coeff(rng));
    return SkewPolyFq(F9, t9, std::move(cs));
  };
  for (int trial = 0; trial < 10000; ++trial) {
    const SkewPolyFq a = random_poly(), b = random_poly(), c = random_poly();
    ok = ok && sp_mul(sp_mul(a, b), c) == sp_mul(a, sp_mul(b, c));
    ok = ok && sp_mul(a, sp_add(b, c)) == sp_add(sp_mul(a, b), sp_mul(a, c));
    ok = ok && sp_mul(sp_add(a, b), c) == sp_add(sp_mul(a, c), sp_mul(b, c));
  }

  // Right division identity: f = q*g + r with deg r < deg g.
  for (int trial = 0; trial < 10000; ++trial) {
    const SkewPolyFq f = random_poly();
    SkewPolyFq g = random_poly();
    if (g.is_zero()) g = sp_constant(F9, t9, F9.one());
    const auto [q, r] = sp_right_divide(f, g);
    ok = ok && f == sp_add(sp_mul(q, g), r);
    ok = ok && r.degree() < g.degree();
  }

  // Shift closure: applying the twisted cyclic shift to every codeword of
  // each constructed code lands back in the code (all sizes <= 10^4).
  {
    const std::vector<SkewCyclicCodeFq> codes = {
        make_code(F9, t9, 4, {6, 1}),   make_code(F9, t9, 6, {2, 3, 0, 6, 1}),
        make_code(F9, t9, 6, {2, 1, 7, 1}), make_code(F9, t9, 5, {2, 1}),
        make_code(F9, t9, 5, {1, 1, 1, 1, 1}), make_code(F3, t3, 3, {1, 1, 1})};
    for (const auto& code : codes)
      for_each_codeword(code, [&](const WordFq& w) {
        ok = ok && code.contains(skew_shift(code.field(), code.aut(), w));
      });
  }

  // Size pairing and exact orthogonality of duals over R, exhaustively for
  // every R-code of length n <= 3 over F_3 (all component triples).
  for (unsigned n : {1u, 2u, 3u}) {
    std::vector<unsigned> degs;
    for (unsigned d = 0; d <= n; ++d) degs.push_back(d);
    const auto divisors = enumerate_right_divisors(F3, t3, n, degs);
    std::vector<SkewCyclicCodeFq> comps;
    for (const auto& g : divisors)
      comps.push_back(SkewCyclicCodeFq::from_generator(F3, t3, n, g));
    for (const auto& c1 : comps)
      for (const auto& c2 : comps)
        for (const auto& c3 : comps) {
          const auto code = RSkewCode::from_components(c1, c2, c3);
          const auto dual = code.dual();
          ok = ok && code.size_exponent() + dual.size_exponent() == 3 * n;
          std::vector<WordR> dws;
          for_each_r_codeword(dual, [&](const WordR& w) { dws.push_back(w); });
          for_each_r_codeword(code, [&](const WordR& cw) {
            // every shift of a codeword stays inside the code as well
            ok = ok && code.contains(skew_shift(R3, t3, cw));
            for (const auto& dw : dws) {
              RElement acc = R3.zero();
              for (unsigned i = 0; i < n; ++i)
                acc = R3.add(acc, R3.mul(cw[i], dw[i]));
              ok = ok && acc == R3.zero();
            }
          });
        }
  }

  // Idempotent generators over F_9 for every coprime length n <= 7:
  // e^2 = e mod (x^n - 1) and <e> = <g> across the whole divisor lattice.
  for (unsigned n : {1u, 5u, 7u}) {
    const auto lattice = component_divisor_lattice(factor_commutative(F9, t9, n));
    for (const auto& g : lattice) {
      const auto code = SkewCyclicCodeFq::from_generator(F9, t9, n, g);
      const SkewPolyFq e = code.idempotent();
      ok = ok && sp_mod_ideal(sp_mul(e, e), n) == e;
      ok = ok && code.generated_by(e);
    }
  }

  return ok;
}

// --- criterion 7 ------------------------------------------------------
// For every R-code of length 2 over F_3 (64 component triples), the Gray
// image of the dual equals the exact orthogonal complement of the Gray
// image of the code inside F_3^6, both sides enumerated in full.
bool gray_dual_orthocomplement() {
  const FieldCtx F3 = FieldCtx::build(3, 1);
  const AutPower t3 = F3.aut(1);
  const ExtensionRing R3(F3);
  const std::vector<unsigned> degs{0, 1, 2};
  const auto divisors = enumerate_right_divisors(F3, t3, 2, degs);
  if (divisors.size() != 4) return false;

  const auto encode6 = [](const WordFq& w) {
    unsigned idx = 0;
    for (std::size_t i = 0; i < 6; ++i) idx = idx * 3 + w[5 - i].value();
    return idx;
  };

  std::vector<SkewCyclicCodeFq> comps;
  for (const auto& g : divisors)
    comps.push_back(SkewCyclicCodeFq::from_generator(F3, t3, 2, g));

  for (const auto& c1 : comps)
    for (const auto& c2 : comps)
      for (const auto& c3 : comps) {
        const auto code = RSkewCode::from_components(c1, c2, c3);

        std::set<unsigned> image;
        std::vector<WordFq> image_vecs;
        for_each_r_codeword(code, [&](const WordR& w) {
          const WordFq img = R3.gray_vector(w);
          if (image.insert(encode6(img)).second) image_vecs.push_back(img);
        });

        std::set<unsigned> dual_image;
        for_each_r_codeword(code.dual(), [&](const WordR& w) {
          dual_image.insert(encode6(R3.gray_vector(w)));
        });

        // exhaustive orthogonal complement of the image inside F_3^6
        std::set<unsigned> complement;
        WordFq u(6, F3.zero());
        std::vector<std::uint32_t> digits(6, 0);
        while (true) {
          for (unsigned i = 0; i < 6; ++i) u[i] = FieldElement(digits[i]);
          bool orth = true;
          for (const auto& g : image_vecs) {
            FieldElement acc = F3.zero();
            for (unsigned i = 0; i < 6; ++i)
              acc = F3.add(acc, F3.mul(u[i], g[i]));
            if (acc != F3.zero()) {
              orth = false;
              break;
            }
          }
          if (orth) complement.insert(encode6(u));
          bool advanced = false;
          for (unsigned i = 0; i < 6; ++i) {
            if (digits[i] + 1 < 3) {
              ++digits[i];
              advanced = true;
              break;
            }
            digits[i] = 0;
          }
          if (!advanced) break;
        }

        if (dual_image != complement) return false;
      }
  return true;
}

struct Criterion {
  int id;
  const char* name;
  bool (*run)();
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "quartic linear factor product", quartic_linear_factor_product},
      {2, "quartic code parameters", quartic_code_parameters},
      {3, "quintic factorization and count", quintic_factorization_and_count},
      {4, "sextic code parameters", sextic_code_parameters},
      {5, "divisor enumeration matches lattice",
       divisor_enumeration_matches_lattice},
      {6, "algebraic property suite", algebraic_property_suite},
      {7, "gray dual orthocomplement", gray_dual_orthocomplement},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    bool ok = false;
    try {
      ok = c.run();
    } catch (const std::exception& e) {
      std::printf("     (criterion %d threw: %s)\n", c.id, e.what());
      ok = false;
    }
    std::printf("%s %d %s\n", ok ? "PASS" : "FAIL", c.id, c.name);
    if (!ok) ++failures;
  }
  std::printf("%d/7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}
