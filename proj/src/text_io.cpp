#include "skewcodes/text_io.hpp"

#include <map>
#include <sstream>

#include "skewcodes/errors.hpp"

namespace skewcodes {
namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

unsigned parse_unsigned(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorKind::ParseError,
                "expected a non-negative integer, got '" + text + "'");
  unsigned long value = 0;
  try {
    value = std::stoul(text);
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "integer out of range: '" + text + "'");
  }
  if (value > 0xffffffffUL)
    throw Error(ErrorKind::ParseError, "integer out of range: '" + text + "'");
  return static_cast<unsigned>(value);
}

/// Whitespace-separated `key=value` tokens with a fixed key set.
std::map<std::string, std::string> parse_kv(
    const std::string& text, const std::vector<std::string>& required,
    const std::vector<std::string>& optional = {}) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorKind::ParseError,
                  "expected key=value, got '" + token + "'");
    const std::string key = token.substr(0, eq);
    if (!kv.emplace(key, token.substr(eq + 1)).second)
      throw Error(ErrorKind::ParseError, "duplicate key '" + key + "'");
  }
  for (const auto& key : required)
    if (!kv.count(key))
      throw Error(ErrorKind::ParseError, "missing key '" + key + "'");
  for (const auto& [key, value] : kv) {
    bool known = false;
    for (const auto& k : required) known = known || k == key;
    for (const auto& k : optional) known = known || k == key;
    if (!known)
      throw Error(ErrorKind::ParseError, "unknown key '" + key + "'");
  }
  return kv;
}

std::vector<FieldElement> parse_coeffs_fq(const FieldCtx& field,
                                          const std::string& text) {
  std::vector<FieldElement> coeffs;
  for (const auto& part : split(text, ',')) coeffs.push_back(field.parse(part));
  return coeffs;
}

std::vector<RElement> parse_coeffs_r(const ExtensionRing& ring,
                                     const std::string& text) {
  std::vector<RElement> coeffs;
  for (const auto& part : split(text, ',')) coeffs.push_back(ring.parse(part));
  return coeffs;
}

template <typename Ctx, typename Elem>
std::string join_elems(const Ctx& ctx, const std::vector<Elem>& elems) {
  std::string out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (i) out.push_back(',');
    out += ctx.to_string(elems[i]);
  }
  return out;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
  const auto kv = parse_kv(text, {"p", "m"}, {"modulus"});
  FieldSpec spec;
  spec.p = parse_unsigned(kv.at("p"));
  spec.m = parse_unsigned(kv.at("m"));
  if (kv.count("modulus")) {
    std::vector<unsigned> digits;
    for (const auto& part : split(kv.at("modulus"), ','))
      digits.push_back(parse_unsigned(part));
    spec.modulus = std::move(digits);
  }
  return spec;
}

FieldCtx build_field(const FieldSpec& spec) {
  return FieldCtx::build(spec.p, spec.m, spec.modulus);
}

std::string format_field_spec(const FieldCtx& field) {
  std::string out = "p=" + std::to_string(field.characteristic()) +
                    " m=" + std::to_string(field.degree()) + " modulus=";
  const auto& mod = field.modulus();
  for (std::size_t i = 0; i < mod.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(mod[i]);
  }
  return out;
}

SkewPolyFq parse_poly_fq(const FieldCtx& field, AutPower t,
                         const std::string& text) {
  return SkewPolyFq(field, t, parse_coeffs_fq(field, text));
}

std::string format_poly_fq(const SkewPolyFq& f) {
  if (f.is_zero()) return "0";
  return join_elems(f.ring(), f.coeffs());
}

SkewPolyR parse_poly_r(const ExtensionRing& ring, AutPower t,
                       const std::string& text) {
  return SkewPolyR(ring, t, parse_coeffs_r(ring, text));
}

std::string format_poly_r(const SkewPolyR& f) {
  if (f.is_zero()) return f.ring().to_string(f.ring().zero());
  return join_elems(f.ring(), f.coeffs());
}

WordFq parse_word_fq(const FieldCtx& field, const std::string& text) {
  return parse_coeffs_fq(field, text);
}

std::string format_word_fq(const FieldCtx& field, const WordFq& word) {
  return join_elems(field, word);
}

WordR parse_word_r(const ExtensionRing& ring, const std::string& text) {
  return parse_coeffs_r(ring, text);
}

std::string format_word_r(const ExtensionRing& ring, const WordR& word) {
  return join_elems(ring, word);
}

SkewCyclicCodeFq parse_code_spec_fq(const FieldCtx& field,
                                    const std::string& text) {
  const auto kv = parse_kv(text, {"n", "t", "g"});
  const unsigned n = parse_unsigned(kv.at("n"));
  const AutPower t = field.aut(parse_unsigned(kv.at("t")));
  const SkewPolyFq g = parse_poly_fq(field, t, kv.at("g"));
  return SkewCyclicCodeFq::from_generator(field, t, n, g);
}

std::string format_code_spec_fq(const SkewCyclicCodeFq& code) {
  return "n=" + std::to_string(code.length()) +
         " t=" + std::to_string(code.aut().t) +
         " g=" + format_poly_fq(code.generator());
}

RSkewCode parse_code_spec_r(const FieldCtx& field, const std::string& text) {
  const auto kv = parse_kv(text, {"n", "t", "g1", "g2", "g3"});
  const unsigned n = parse_unsigned(kv.at("n"));
  const AutPower t = field.aut(parse_unsigned(kv.at("t")));
  const auto component = [&](const char* key) {
    return SkewCyclicCodeFq::from_generator(field, t, n,
                                            parse_poly_fq(field, t, kv.at(key)));
  };
  return RSkewCode::from_components(component("g1"), component("g2"),
                                    component("g3"));
}

std::string format_code_spec_r(const RSkewCode& code) {
  return "n=" + std::to_string(code.length()) +
         " t=" + std::to_string(code.aut().t) +
         " g1=" + format_poly_fq(code.component(0).generator()) +
         " g2=" + format_poly_fq(code.component(1).generator()) +
         " g3=" + format_poly_fq(code.component(2).generator());
}

}  // namespace skewcodes
