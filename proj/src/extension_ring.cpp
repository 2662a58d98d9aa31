#include "skewcodes/extension_ring.hpp"

namespace skewcodes {

ExtensionRing::ExtensionRing(FieldCtx field) : field_(std::move(field)) {
  half_ = field_.inv(field_.from_value(2 % field_.characteristic()));
}

RElement ExtensionRing::zero() const {
  return {field_.zero(), field_.zero(), field_.zero()};
}

RElement ExtensionRing::one() const {
  return {field_.one(), field_.zero(), field_.zero()};
}

RElement ExtensionRing::make(FieldElement a, FieldElement b,
                             FieldElement c) const {
  return {a, b, c};
}

RElement ExtensionRing::from_field(FieldElement a) const {
  return {a, field_.zero(), field_.zero()};
}

RElement ExtensionRing::add(RElement x, RElement y) const {
  return {field_.add(x.a, y.a), field_.add(x.b, y.b), field_.add(x.c, y.c)};
}

RElement ExtensionRing::sub(RElement x, RElement y) const {
  return {field_.sub(x.a, y.a), field_.sub(x.b, y.b), field_.sub(x.c, y.c)};
}

RElement ExtensionRing::neg(RElement x) const {
  return {field_.neg(x.a), field_.neg(x.b), field_.neg(x.c)};
}

RElement ExtensionRing::mul(RElement x, RElement y) const {
  // (a1 + vb1 + v^2c1)(a2 + vb2 + v^2c2) reduced by v^3 = v:
  //   a = a1a2
  //   b = a1b2 + a2b1 + b1c2 + b2c1
  //   c = a1c2 + a2c1 + b1b2 + c1c2
  const FieldCtx& F = field_;
  const FieldElement a = F.mul(x.a, y.a);
  FieldElement b = F.add(F.mul(x.a, y.b), F.mul(y.a, x.b));
  b = F.add(b, F.add(F.mul(x.b, y.c), F.mul(y.b, x.c)));
  FieldElement c = F.add(F.mul(x.a, y.c), F.mul(y.a, x.c));
  c = F.add(c, F.add(F.mul(x.b, y.b), F.mul(x.c, y.c)));
  return {a, b, c};
}

RElement ExtensionRing::scale(FieldElement s, RElement x) const {
  return {field_.mul(s, x.a), field_.mul(s, x.b), field_.mul(s, x.c)};
}

IdempotentTriple ExtensionRing::idempotents() const {
  const FieldCtx& F = field_;
  const FieldElement h = half_;
  return {
      {F.one(), F.zero(), F.neg(F.one())},  // 1 - v^2
      {F.zero(), h, h},                     // 2^{-1}(v + v^2)
      {F.zero(), F.neg(h), h},              // 2^{-1}(v^2 - v)
  };
}

std::array<FieldElement, 3> ExtensionRing::crt_split(RElement x) const {
  const FieldCtx& F = field_;
  return {x.a, F.add(F.add(x.a, x.b), x.c), F.add(F.sub(x.a, x.b), x.c)};
}

RElement ExtensionRing::crt_combine(FieldElement x1, FieldElement x2,
                                    FieldElement x3) const {
  const FieldCtx& F = field_;
  const FieldElement b = F.mul(half_, F.sub(x2, x3));
  const FieldElement c = F.sub(F.mul(half_, F.add(x2, x3)), x1);
  return {x1, b, c};
}

unsigned ExtensionRing::lee_weight(RElement x) const {
  const auto g = crt_split(x);
  unsigned w = 0;
  for (const auto& e : g) w += field_.is_zero(e) ? 0u : 1u;
  return w;
}

RElement ExtensionRing::theta_pow(AutPower t, unsigned k, RElement x) const {
  return {field_.theta_pow(t, k, x.a), field_.theta_pow(t, k, x.b),
          field_.theta_pow(t, k, x.c)};
}

bool ExtensionRing::is_zero(RElement x) const {
  return field_.is_zero(x.a) && field_.is_zero(x.b) && field_.is_zero(x.c);
}

bool ExtensionRing::is_unit(RElement x) const {
  const auto g = crt_split(x);
  return field_.is_unit(g[0]) && field_.is_unit(g[1]) && field_.is_unit(g[2]);
}

RElement ExtensionRing::inv(RElement x) const {
  if (!is_unit(x))
    throw Error(ErrorKind::ZeroInverse, "element is not a unit of R");
  const auto g = crt_split(x);
  return crt_combine(field_.inv(g[0]), field_.inv(g[1]), field_.inv(g[2]));
}

std::uint64_t ExtensionRing::element_count() const {
  const std::uint64_t q = field_.size();
  return q * q * q;
}

RElement ExtensionRing::element_at(std::uint64_t index) const {
  const std::uint64_t q = field_.size();
  if (index >= q * q * q)
    throw Error(ErrorKind::ParseError, "R element index out of range");
  return {field_.element_at(index % q), field_.element_at((index / q) % q),
          field_.element_at(index / (q * q))};
}

std::uint64_t ExtensionRing::index_of(RElement x) const {
  const std::uint64_t q = field_.size();
  return x.a.value() + q * x.b.value() + q * q * x.c.value();
}

std::string ExtensionRing::to_string(RElement x) const {
  return field_.to_string(x.a) + ":" + field_.to_string(x.b) + ":" +
         field_.to_string(x.c);
}

RElement ExtensionRing::parse(const std::string& text) const {
  const auto first = text.find(':');
  const auto second = first == std::string::npos
                          ? std::string::npos
                          : text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) != std::string::npos)
    throw Error(ErrorKind::ParseError,
                "expected R element \"a:b:c\", got \"" + text + "\"");
  return {field_.parse(text.substr(0, first)),
          field_.parse(text.substr(first + 1, second - first - 1)),
          field_.parse(text.substr(second + 1))};
}

std::vector<FieldElement> ExtensionRing::gray_vector(
    std::span<const RElement> word) const {
  const std::size_t n = word.size();
  std::vector<FieldElement> out(3 * n, field_.zero());
  for (std::size_t i = 0; i < n; ++i) {
    const auto g = crt_split(word[i]);
    out[i] = g[0];
    out[n + i] = g[1];
    out[2 * n + i] = g[2];
  }
  return out;
}

std::vector<FieldElement> ExtensionRing::gray_vector_interleaved(
    std::span<const RElement> word) const {
  const auto blockwise = gray_vector(word);
  const auto perm = gray_interleaved_to_blockwise(word.size());
  std::vector<FieldElement> out(blockwise.size(), field_.zero());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = blockwise[perm[k]];
  return out;
}

unsigned ExtensionRing::lee_weight(std::span<const RElement> word) const {
  unsigned w = 0;
  for (const auto& x : word) w += lee_weight(x);
  return w;
}

std::vector<std::size_t> gray_interleaved_to_blockwise(std::size_t n) {
  std::vector<std::size_t> perm(3 * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < 3; ++b) perm[3 * i + b] = b * n + i;
  return perm;
}

}  // namespace skewcodes
