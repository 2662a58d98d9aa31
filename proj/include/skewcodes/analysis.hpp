#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "skewcodes/skew_codes_fq.hpp"
#include "skewcodes/skew_codes_r.hpp"

namespace skewcodes {

enum class WeightMetric { Hamming, Lee };

/// Reported code parameters; the distance slot is absent for the zero code.
struct CodeParams {
  unsigned length = 0;
  unsigned dimension = 0;
  std::optional<unsigned> distance;
  WeightMetric metric = WeightMetric::Hamming;

  /// "[12, 9, 2]"; "-" stands in for an absent distance.
  std::string to_string() const;
};

/// Default bound on enumerated codewords (per component for R-codes).
inline constexpr std::uint64_t kDefaultEnumerationCap = 1u << 24;

unsigned hamming_weight(const WordFq& word);

/// Minimum Hamming weight over the q^k - 1 nonzero codewords, by message
/// enumeration.  Absent for the zero code; CapExceeded when q^k > cap.
std::optional<unsigned> min_hamming_distance(
    const SkewCyclicCodeFq& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Minimum Lee distance of an R-code: the blockwise Gray image is a
/// Lee-to-Hamming isometry onto the direct sum of the components, so this is
/// the min over the nonzero components' Hamming distances.  Absent when all
/// three components are zero.
std::optional<unsigned> min_lee_distance(
    const RSkewCode& code, std::uint64_t cap = kDefaultEnumerationCap);

/// Hamming weight -> number of codewords; counts sum to q^k.
std::map<unsigned, std::uint64_t> weight_distribution(
    const SkewCyclicCodeFq& code, std::uint64_t cap = kDefaultEnumerationCap);

CodeParams code_params(const SkewCyclicCodeFq& code,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Parameters of the blockwise Gray image: [3n, k1+k2+k3, min_i d(C_i)].
CodeParams gray_image_params(const RSkewCode& code,
                             std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace skewcodes
