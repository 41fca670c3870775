#include "hgop/space.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

#include <fmt/format.h>

#include "hgop/error.hpp"

namespace hgop {

namespace {

double number(const std::string& t, std::string_view ctx) {
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size()) throw ParseError(fmt::format("bad number '{}' in space '{}'", t, ctx));
  if (!std::isfinite(v)) throw DomainError(fmt::format("non-finite parameter in space '{}'", ctx));
  return v;
}

std::vector<std::string> fields(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(':', start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

SpaceSpec SpaceSpec::hardy_littlewood(double p) {
  if (!(p >= 1.0)) throw DomainError("HL(p) needs p >= 1");
  return {Tag::HardyLittlewood, p, 0.0};
}

SpaceSpec SpaceSpec::korenblum(double alpha) {
  if (!(alpha >= 0.0)) throw DomainError("Korenblum space needs alpha >= 0");
  return {Tag::Korenblum, alpha, 0.0};
}

SpaceSpec SpaceSpec::bloch_beta(double beta) {
  if (!(beta > 0.0)) throw DomainError("Bloch-type space needs beta > 0");
  return {Tag::BlochBeta, beta, 0.0};
}

SpaceSpec SpaceSpec::mean_lipschitz(double p, double alpha) {
  if (!(p >= 1.0)) throw DomainError("mean Lipschitz space needs p >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("mean Lipschitz space needs 0 < alpha <= 1");
  return {Tag::MeanLipschitz, p, alpha};
}

SpaceSpec SpaceSpec::xp(double p) {
  if (!(p >= 1.0)) throw DomainError("X_p needs p >= 1");
  return {Tag::Xp, p, 0.0};
}

SpaceSpec SpaceSpec::sp(double p) {
  if (!(p >= 1.0)) throw DomainError("S^p needs p >= 1");
  return {Tag::Sp, p, 0.0};
}

SpaceSpec SpaceSpec::parse(std::string_view text) {
  const auto f = fields(text);
  const std::string& head = f[0];
  auto arity = [&](std::size_t n) {
    if (f.size() != n + 1) throw ParseError(fmt::format("space '{}' expects {} parameter(s)", text, n));
  };
  if (head == "D2") {
    arity(1);
    return dirichlet(number(f[1], text));
  }
  if (head == "W") {
    arity(0);
    return wiener();
  }
  if (head == "HL") {
    arity(1);
    return hardy_littlewood(number(f[1], text));
  }
  if (head == "Hinf") {
    if (f.size() == 1) return korenblum(0.0);
    arity(1);
    return korenblum(number(f[1], text));
  }
  if (head == "Blog") {
    arity(1);
    return bloch_log(number(f[1], text));
  }
  if (head == "B") {
    if (f.size() == 1) return bloch_beta(1.0);
    arity(1);
    return bloch_beta(number(f[1], text));
  }
  if (head == "Lip") {
    arity(2);
    return mean_lipschitz(number(f[1], text), number(f[2], text));
  }
  if (head == "X") {
    arity(1);
    return xp(number(f[1], text));
  }
  if (head == "S") {
    arity(1);
    return sp(number(f[1], text));
  }
  throw ParseError(fmt::format("unknown space '{}'", text));
}

std::string SpaceSpec::to_string() const {
  switch (tag) {
    case Tag::Dirichlet: return fmt::format("D2:{}", a);
    case Tag::Wiener: return "W";
    case Tag::HardyLittlewood: return fmt::format("HL:{}", a);
    case Tag::Korenblum: return a == 0.0 ? std::string("Hinf") : fmt::format("Hinf:{}", a);
    case Tag::BlochLog: return fmt::format("Blog:{}", a);
    case Tag::BlochBeta: return fmt::format("B:{}", a);
    case Tag::MeanLipschitz: return fmt::format("Lip:{}:{}", a, b);
    case Tag::Xp: return fmt::format("X:{}", a);
    case Tag::Sp: return fmt::format("S:{}", a);
  }
  return {};
}

SpaceSpec SpaceSpec::canonical() const {
  if (tag == Tag::BlochLog && a == 0.0) return bloch_beta(1.0);
  return *this;
}

bool SpaceSpec::is_bloch() const {
  const SpaceSpec c = canonical();
  return c.tag == Tag::BlochBeta && c.a == 1.0;
}

}  // namespace hgop
