#include "skewcodes/analysis.hpp"

#include <algorithm>

#include "skewcodes/errors.hpp"

namespace skewcodes {
namespace {

// Visits every codeword exactly once by running an odometer over the q^k
// message digit vectors and forming the left-linear combination of the
// generator-matrix rows.
template <typename Fn>
void for_each_codeword(const SkewCyclicCodeFq& code, std::uint64_t cap,
                       Fn&& fn) {
  const FieldCtx& F = code.field();
  const unsigned n = code.length();
  const unsigned k = code.dimension();
  const std::uint64_t q = F.size();

  std::uint64_t total = 1;
  for (unsigned j = 0; j < k; ++j) {
    if (total > cap / q)
      throw Error(ErrorKind::CapExceeded,
                  "q^k codewords exceed the enumeration cap " +
                      std::to_string(cap));
    total *= q;
  }

  const std::vector<WordFq> rows = code.generator_matrix();
  std::vector<std::uint32_t> msg(k, 0);
  WordFq word(n, F.zero());
  while (true) {
    std::fill(word.begin(), word.end(), F.zero());
    for (unsigned j = 0; j < k; ++j) {
      if (msg[j] == 0) continue;
      const FieldElement m(msg[j]);
      for (unsigned i = 0; i < n; ++i)
        word[i] = F.add(word[i], F.mul(m, rows[j][i]));
    }
    fn(word);
    bool advanced = false;
    for (unsigned j = 0; j < k; ++j) {
      if (msg[j] + 1 < q) {
        ++msg[j];
        advanced = true;
        break;
      }
      msg[j] = 0;
    }
    if (!advanced) break;
  }
}

}  // namespace

std::string CodeParams::to_string() const {
  std::string d = distance ? std::to_string(*distance) : "-";
  return "[" + std::to_string(length) + ", " + std::to_string(dimension) +
         ", " + d + "]";
}

unsigned hamming_weight(const WordFq& word) {
  unsigned w = 0;
  for (const auto& x : word)
    if (x.value() != 0) ++w;
  return w;
}

std::optional<unsigned> min_hamming_distance(const SkewCyclicCodeFq& code,
                                             std::uint64_t cap) {
  if (code.is_zero_code()) return std::nullopt;
  unsigned best = code.length() + 1;
  for_each_codeword(code, cap, [&](const WordFq& word) {
    const unsigned w = hamming_weight(word);
    if (w > 0 && w < best) best = w;
  });
  return best;
}

std::optional<unsigned> min_lee_distance(const RSkewCode& code,
                                         std::uint64_t cap) {
  std::optional<unsigned> best;
  for (unsigned i = 0; i < 3; ++i) {
    const auto d = min_hamming_distance(code.component(i), cap);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

std::map<unsigned, std::uint64_t> weight_distribution(
    const SkewCyclicCodeFq& code, std::uint64_t cap) {
  std::map<unsigned, std::uint64_t> dist;
  for_each_codeword(code, cap,
                    [&](const WordFq& word) { ++dist[hamming_weight(word)]; });
  return dist;
}

CodeParams code_params(const SkewCyclicCodeFq& code, std::uint64_t cap) {
  return CodeParams{code.length(), code.dimension(),
                    min_hamming_distance(code, cap), WeightMetric::Hamming};
}

CodeParams gray_image_params(const RSkewCode& code, std::uint64_t cap) {
  unsigned k = 0;
  for (unsigned i = 0; i < 3; ++i) k += code.component(i).dimension();
  return CodeParams{3 * code.length(), k, min_lee_distance(code, cap),
                    WeightMetric::Lee};
}

}  // namespace skewcodes
