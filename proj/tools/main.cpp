#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewcodes/analysis.hpp"
#include "skewcodes/divisor_search.hpp"
#include "skewcodes/errors.hpp"
#include "skewcodes/text_io.hpp"

namespace {

using namespace skewcodes;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::NotPrime:
    case ErrorKind::EvenCharacteristic:
    case ErrorKind::ReducibleModulus:
    case ErrorKind::DegreeMismatch:
    case ErrorKind::InvalidAutomorphism:
      return 2;
    case ErrorKind::CapExceeded:
      return 4;
    default:
      return 3;
  }
}

std::uint64_t ipow(std::uint64_t base, unsigned e) {
  std::uint64_t out = 1;
  while (e--) out *= base;
  return out;
}

struct FieldFlags {
  unsigned p = 0;
  unsigned m = 0;
  std::string modulus;
};

void add_field_flags(CLI::App* cmd, FieldFlags& ff) {
  cmd->add_option("--p", ff.p, "field characteristic (odd prime)")->required();
  cmd->add_option("--m", ff.m, "extension degree of F_{p^m} over F_p")
      ->required();
  cmd->add_option("--modulus", ff.modulus,
                  "monic irreducible modulus, coefficients low->high "
                  "(default: lexicographically smallest)");
}

FieldCtx make_field(const FieldFlags& ff) {
  std::string line =
      "p=" + std::to_string(ff.p) + " m=" + std::to_string(ff.m);
  if (!ff.modulus.empty()) line += " modulus=" + ff.modulus;
  return build_field(parse_field_spec(line));
}

int run_field(const FieldFlags& ff, const std::optional<unsigned>& t_flag) {
  const FieldCtx F = make_field(ff);
  std::cout << "field: " << format_field_spec(F) << "\n";
  std::cout << "size: " << F.size() << "\n";
  std::cout << "encoding: value = sum_i digit_i * "
            << F.characteristic() << "^i, digits low -> high\n";
  for (std::uint32_t v = 0; v < F.size(); ++v) {
    const FieldElement x(v);
    std::cout << "  " << v << " = " << F.pretty(x) << "\n";
  }
  if (t_flag) {
    const AutPower t = F.aut(*t_flag);
    std::cout << "frobenius t=" << t.t << ": x -> x^"
              << ipow(F.characteristic(), t.t) << ", order " << t.order
              << "\n";
    for (std::uint32_t v = 0; v < F.size(); ++v) {
      const FieldElement x(v);
      const FieldElement y = F.frobenius(t, x);
      std::cout << "  " << v << " (" << F.pretty(x) << ") -> " << y.value()
                << " (" << F.pretty(y) << ")\n";
    }
  }
  return 0;
}

int run_factor(const FieldFlags& ff, unsigned n, unsigned t_val,
               std::vector<unsigned> degs, const std::string& mode,
               std::uint64_t cap) {
  const FieldCtx F = make_field(ff);
  const AutPower t = F.aut(t_val);
  if (mode == "commutative") {
    const Factorization fact = factor_commutative(F, t, n);
    std::string line;
    for (const auto& [g, mult] : fact.base) {
      if (!line.empty()) line += " * ";
      line += "(" + format_poly_fq(g) + ")^" + std::to_string(mult);
    }
    std::cout << "x^" << n << "-1 = " << line << "\n";
    return 0;
  }
  if (degs.empty())
    for (unsigned d = 0; d <= n; ++d) degs.push_back(d);
  const auto divisors = enumerate_right_divisors(F, t, n, degs, cap);
  int last_degree = -2;
  for (const auto& g : divisors) {
    if (g.degree() != last_degree) {
      last_degree = g.degree();
      std::cout << "degree " << last_degree << ":\n";
    }
    std::cout << "  " << format_poly_fq(g) << "\n";
  }
  std::cout << "total: " << divisors.size() << "\n";
  return 0;
}

int run_count(const FieldFlags& ff, unsigned n, unsigned t_val) {
  const FieldCtx F = make_field(ff);
  const AutPower t = F.aut(t_val);
  const std::uint64_t total = count_r_skew_cyclic(F, t, n);
  std::cout << "total: " << total << "\n";
  std::cout << "nonzero: " << total - 1 << "\n";
  return 0;
}

struct CodeFlags {
  std::string spec;
  unsigned n = 0;
  unsigned t = 1;
  std::string g, g1, g2, g3;
  std::string msg, msg1, msg2, msg3;
  std::string word;
  std::uint64_t cap = kDefaultEnumerationCap;
};

void add_code_flags(CLI::App* cmd, CodeFlags& cf) {
  cmd->add_option("--spec", cf.spec,
                  "full code spec line, e.g. 'n=4 t=1 g=6,1' or "
                  "'n=4 t=1 g1=6,1 g2=6,1 g3=6,1'");
  cmd->add_option("--n", cf.n, "code length");
  cmd->add_option("--t", cf.t, "automorphism power (default 1)");
  cmd->add_option("--g", cf.g, "generator polynomial over F_q");
  cmd->add_option("--g1", cf.g1, "first component generator");
  cmd->add_option("--g2", cf.g2, "second component generator");
  cmd->add_option("--g3", cf.g3, "third component generator");
}

std::string effective_spec(const CodeFlags& cf) {
  if (!cf.spec.empty()) return cf.spec;
  const std::string head =
      "n=" + std::to_string(cf.n) + " t=" + std::to_string(cf.t);
  if (!cf.g.empty()) return head + " g=" + cf.g;
  if (!cf.g1.empty() && !cf.g2.empty() && !cf.g3.empty())
    return head + " g1=" + cf.g1 + " g2=" + cf.g2 + " g3=" + cf.g3;
  throw Error(ErrorKind::ParseError,
              "need --spec, or --n with --g, or --n with --g1/--g2/--g3");
}

struct LoadedCode {
  std::optional<SkewCyclicCodeFq> fq;
  std::optional<RSkewCode> r;
  ExtensionRing ring;
};

LoadedCode load_code(const FieldCtx& F, const CodeFlags& cf) {
  const std::string spec = effective_spec(cf);
  LoadedCode out{std::nullopt, std::nullopt, ExtensionRing(F)};
  if (spec.find("g1=") != std::string::npos)
    out.r = parse_code_spec_r(F, spec);
  else
    out.fq = parse_code_spec_fq(F, spec);
  return out;
}

std::string spec_line(const LoadedCode& code) {
  return code.fq ? format_code_spec_fq(*code.fq) : format_code_spec_r(*code.r);
}

int run_code_new(const LoadedCode& code) {
  std::cout << spec_line(code) << "\n";
  return 0;
}

int run_code_params(const LoadedCode& code, std::uint64_t cap) {
  if (code.fq) {
    const std::uint32_t q = code.fq->field().size();
    std::cout << "|C| = " << q << "^" << code.fq->size_exponent() << "\n";
    std::cout << "params: " << code_params(*code.fq, cap).to_string() << "\n";
    return 0;
  }
  const RSkewCode& r = *code.r;
  const std::uint32_t q = r.ring().field().size();
  std::cout << "|C| = " << q << "^" << r.size_exponent() << "\n";
  for (unsigned i = 0; i < 3; ++i)
    std::cout << "component " << i + 1 << ": "
              << code_params(r.component(i), cap).to_string() << "\n";
  std::cout << "gray: " << gray_image_params(r, cap).to_string() << "\n";
  return 0;
}

int run_code_dual(const LoadedCode& code) {
  if (code.fq)
    std::cout << format_code_spec_fq(code.fq->dual()) << "\n";
  else
    std::cout << format_code_spec_r(code.r->dual()) << "\n";
  return 0;
}

int run_code_idempotent(const LoadedCode& code) {
  if (code.fq)
    std::cout << format_poly_fq(code.fq->idempotent()) << "\n";
  else
    std::cout << format_poly_r(code.r->idempotent()) << "\n";
  return 0;
}

int run_code_gray(const LoadedCode& code, const std::string& word_text) {
  if (!code.r)
    throw Error(ErrorKind::ContextMismatch,
                "gray applies to codes over R (use --g1/--g2/--g3)");
  const ExtensionRing& ring = code.r->ring();
  if (!word_text.empty()) {
    const WordR word = parse_word_r(ring, word_text);
    std::cout << format_word_fq(ring.field(), ring.gray_vector(word)) << "\n";
    return 0;
  }
  for (const auto& row : code.r->gray_generator_matrix())
    std::cout << format_word_fq(ring.field(), row) << "\n";
  return 0;
}

int run_code_matrix(const LoadedCode& code) {
  if (code.fq) {
    for (const auto& row : code.fq->generator_matrix())
      std::cout << format_word_fq(code.fq->field(), row) << "\n";
    return 0;
  }
  for (const auto& row : code.r->generator_matrix())
    std::cout << format_word_r(code.r->ring(), row) << "\n";
  return 0;
}

int run_code_encode(const LoadedCode& code, const CodeFlags& cf) {
  if (code.fq) {
    if (cf.msg.empty())
      throw Error(ErrorKind::ParseError, "encode needs --msg");
    const SkewPolyFq msg =
        parse_poly_fq(code.fq->field(), code.fq->aut(), cf.msg);
    std::cout << format_word_fq(code.fq->field(), code.fq->encode(msg)) << "\n";
    return 0;
  }
  const RSkewCode& r = *code.r;
  if (!cf.msg.empty()) {
    const SkewPolyR msg = parse_poly_r(r.ring(), r.aut(), cf.msg);
    std::cout << format_word_r(r.ring(), r.encode(msg)) << "\n";
    return 0;
  }
  if (cf.msg1.empty() || cf.msg2.empty() || cf.msg3.empty())
    throw Error(ErrorKind::ParseError,
                "encode needs --msg or all of --msg1/--msg2/--msg3");
  const FieldCtx& F = r.ring().field();
  const WordR word = r.encode_components(parse_poly_fq(F, r.aut(), cf.msg1),
                                         parse_poly_fq(F, r.aut(), cf.msg2),
                                         parse_poly_fq(F, r.aut(), cf.msg3));
  std::cout << format_word_r(r.ring(), word) << "\n";
  return 0;
}

int run_code_contains(const LoadedCode& code, const std::string& word_text) {
  if (word_text.empty())
    throw Error(ErrorKind::ParseError, "contains needs --word");
  bool member = false;
  if (code.fq)
    member = code.fq->contains(parse_word_fq(code.fq->field(), word_text));
  else
    member = code.r->contains(parse_word_r(code.r->ring(), word_text));
  std::cout << (member ? "true" : "false") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skew cyclic codes over F_q and over F_q + vF_q + v^2F_q "
               "(v^3 = v), with Gray images"};
  app.require_subcommand(1);

  FieldFlags field_ff;
  std::optional<unsigned> field_t;
  CLI::App* field_cmd =
      app.add_subcommand("field", "print the field table and encoding legend");
  add_field_flags(field_cmd, field_ff);
  field_cmd->add_option("--t", field_t,
                        "also print the frobenius table for theta_t");

  FieldFlags factor_ff;
  unsigned factor_n = 0, factor_t = 1;
  std::vector<unsigned> factor_degs;
  std::string factor_mode = "enumerate";
  std::uint64_t factor_cap = kDefaultDivisorCap;
  CLI::App* factor_cmd = app.add_subcommand(
      "factor", "right divisors of x^n - 1 in F_q[x;theta_t]");
  add_field_flags(factor_cmd, factor_ff);
  factor_cmd->add_option("--n", factor_n, "exponent n")->required();
  factor_cmd->add_option("--t", factor_t, "automorphism power (default 1)");
  factor_cmd->add_option("--deg", factor_degs,
                         "degrees to enumerate (default: all)")
      ->delimiter(',');
  factor_cmd
      ->add_option("--mode", factor_mode,
                   "enumerate | commutative (default enumerate)")
      ->check(CLI::IsMember({"enumerate", "commutative"}));
  factor_cmd->add_option("--cap", factor_cap,
                         "candidate budget per degree for enumerate mode");

  FieldFlags count_ff;
  unsigned count_n = 0, count_t = 1;
  CLI::App* count_cmd = app.add_subcommand(
      "count", "number of skew cyclic codes of length n over R");
  add_field_flags(count_cmd, count_ff);
  count_cmd->add_option("--n", count_n, "code length")->required();
  count_cmd->add_option("--t", count_t, "automorphism power (default 1)");

  CLI::App* code_cmd =
      app.add_subcommand("code", "operations on a skew cyclic code");
  code_cmd->require_subcommand(1);
  struct SubActions {
    CLI::App* cmd;
    FieldFlags ff;
    CodeFlags cf;
  };
  std::vector<SubActions> actions;
  actions.reserve(8);
  for (const char* name : {"new", "params", "dual", "idempotent", "gray",
                           "matrix", "encode", "contains"}) {
    actions.push_back({nullptr, {}, {}});
    SubActions& a = actions.back();
    static const std::map<std::string, std::string> descs = {
        {"new", "validate and print the canonical spec line"},
        {"params", "sizes and distances"},
        {"dual", "spec line of the dual code"},
        {"idempotent", "idempotent generator"},
        {"gray", "gray generator matrix, or --word image"},
        {"matrix", "generator matrix rows"},
        {"encode", "codeword of a message polynomial"},
        {"contains", "membership of --word"}};
    a.cmd = code_cmd->add_subcommand(name, descs.at(name));
    add_field_flags(a.cmd, a.ff);
    add_code_flags(a.cmd, a.cf);
    if (std::string(name) == "params")
      a.cmd->add_option("--cap", a.cf.cap, "enumeration budget");
    if (std::string(name) == "encode") {
      a.cmd->add_option("--msg", a.cf.msg, "message polynomial");
      a.cmd->add_option("--msg1", a.cf.msg1, "first component message");
      a.cmd->add_option("--msg2", a.cf.msg2, "second component message");
      a.cmd->add_option("--msg3", a.cf.msg3, "third component message");
    }
    if (std::string(name) == "gray" || std::string(name) == "contains")
      a.cmd->add_option("--word", a.cf.word, "word, comma-separated entries");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (field_cmd->parsed()) return run_field(field_ff, field_t);
    if (factor_cmd->parsed())
      return run_factor(factor_ff, factor_n, factor_t, factor_degs,
                        factor_mode, factor_cap);
    if (count_cmd->parsed()) return run_count(count_ff, count_n, count_t);
    if (code_cmd->parsed()) {
      for (std::size_t i = 0; i < actions.size(); ++i) {
        const SubActions& a = actions[i];
        if (!a.cmd->parsed()) continue;
        const FieldCtx F = make_field(a.ff);
        const LoadedCode code = load_code(F, a.cf);
        const std::string name = a.cmd->get_name();
        if (name == "new") return run_code_new(code);
        if (name == "params") return run_code_params(code, a.cf.cap);
        if (name == "dual") return run_code_dual(code);
        if (name == "idempotent") return run_code_idempotent(code);
        if (name == "gray") return run_code_gray(code, a.cf.word);
        if (name == "matrix") return run_code_matrix(code);
        if (name == "encode") return run_code_encode(code, a.cf);
        if (name == "contains") return run_code_contains(code, a.cf.word);
      }
    }
  } catch (const skewcodes::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
