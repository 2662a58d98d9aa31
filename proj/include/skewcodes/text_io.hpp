#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewcodes/extension_ring.hpp"
#include "skewcodes/finite_field.hpp"
#include "skewcodes/skew_codes_fq.hpp"
#include "skewcodes/skew_codes_r.hpp"
#include "skewcodes/skew_polynomial.hpp"

namespace skewcodes {

/// Parsed form of `p=3 m=2 modulus=1,0,1` (modulus optional).
struct FieldSpec {
  unsigned p = 0;
  unsigned m = 0;
  std::optional<std::vector<unsigned>> modulus;
};

FieldSpec parse_field_spec(const std::string& text);
FieldCtx build_field(const FieldSpec& spec);
/// Always spells the modulus out so the line round-trips exactly.
std::string format_field_spec(const FieldCtx& field);

/// Comma-separated coefficient encodings, low -> high; "0" is the zero
/// polynomial.
SkewPolyFq parse_poly_fq(const FieldCtx& field, AutPower t,
                         const std::string& text);
std::string format_poly_fq(const SkewPolyFq& f);

/// Same layout with `a:b:c` coefficients.
SkewPolyR parse_poly_r(const ExtensionRing& ring, AutPower t,
                       const std::string& text);
std::string format_poly_r(const SkewPolyR& f);

/// Words are comma-separated element encodings; length is not validated
/// here (membership and encoding checks own that).
WordFq parse_word_fq(const FieldCtx& field, const std::string& text);
std::string format_word_fq(const FieldCtx& field, const WordFq& word);
WordR parse_word_r(const ExtensionRing& ring, const std::string& text);
std::string format_word_r(const ExtensionRing& ring, const WordR& word);

/// `n=4 t=1 g=6,1` -- the key set is fixed, order free.
SkewCyclicCodeFq parse_code_spec_fq(const FieldCtx& field,
                                    const std::string& text);
std::string format_code_spec_fq(const SkewCyclicCodeFq& code);

/// `n=4 t=1 g1=<poly> g2=<poly> g3=<poly>`.
RSkewCode parse_code_spec_r(const FieldCtx& field, const std::string& text);
std::string format_code_spec_r(const RSkewCode& code);

}  // namespace skewcodes
