#include "hgop/symbol.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "hgop/error.hpp"
#include "hgop/series.hpp"

namespace hgop {

namespace {

constexpr std::size_t kLinearCap = std::size_t{1} << 26;

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& text, std::string_view context) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError(fmt::format("empty number in '{}'", context));
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size()) throw ParseError(fmt::format("bad number '{}' in '{}'", t, context));
  if (!std::isfinite(v)) throw DomainError(fmt::format("non-finite parameter in '{}'", context));
  return v;
}

void expect_fields(const std::vector<std::string>& parts, std::size_t count, std::string_view text) {
  if (parts.size() != count)
    throw ParseError(fmt::format("symbol '{}' expects {} parameter(s)", text, count - 1));
}

std::string num(double v) { return fmt::format("{}", v); }

CoefficientSequence from_doubles(std::vector<double> v) {
  std::vector<Complex> c(v.begin(), v.end());
  return CoefficientSequence(std::move(c));
}

// log(e/(1-z)) = 1 + sum z^n / n
std::vector<double> log_e_series(std::size_t n) {
  std::vector<double> u(n + 1);
  u[0] = 1.0;
  for (std::size_t k = 1; k <= n; ++k) u[k] = 1.0 / static_cast<double>(k);
  return u;
}

std::vector<double> logpow_coeffs(double alpha, std::size_t n) {
  const double p = alpha + 1.0;
  std::vector<double> u = log_e_series(n);
  if (p == 0.0) {
    std::vector<double> one(n + 1, 0.0);
    one[0] = 1.0;
    return one;
  }
  if (p == 1.0) return u;
  if (p == std::floor(p) && p > 1.0 && p <= 16.0) {
    std::vector<double> acc = u;
    for (int i = 1; i < static_cast<int>(p); ++i) acc = series::multiply(acc, u, n);
    return acc;
  }
  return series::power(u, p, n);
}

std::vector<double> loglog_coeffs(std::size_t n) {
  std::vector<double> u = log_e_series(n);
  u[0] = 2.0;  // log(e^2/(1-z)) = 2 + log 1/(1-z)
  return series::log(u, n);
}

}  // namespace

SymbolSpec SymbolSpec::parse(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw ParseError("empty symbol specification");
  SymbolSpec s;
  const auto colon = t.find(':');
  const std::string head = t.substr(0, colon);

  if (head == "file") {
    if (colon == std::string::npos || colon + 1 == t.size()) throw ParseError("file: needs a path");
    s.kind = Kind::File;
    s.path = t.substr(colon + 1);
    return s;
  }
  if (head == "poly") {
    if (colon == std::string::npos) throw ParseError("poly: needs coefficients");
    s.kind = Kind::Poly;
    for (const auto& c : split(std::string_view(t).substr(colon + 1), ',')) s.params.push_back(parse_number(c, t));
    return s;
  }

  const auto parts = split(t, ':');
  for (std::size_t i = 1; i < parts.size(); ++i) s.params.push_back(parse_number(parts[i], t));
  if (head == "log") {
    expect_fields(parts, 1, t);
    s.kind = Kind::Log;
  } else if (head == "loglog") {
    expect_fields(parts, 1, t);
    s.kind = Kind::LogLog;
  } else if (head == "power") {
    expect_fields(parts, 2, t);
    s.kind = Kind::Power;
  } else if (head == "powlog") {
    expect_fields(parts, 3, t);
    s.kind = Kind::PowLog;
  } else if (head == "logpow") {
    expect_fields(parts, 2, t);
    s.kind = Kind::LogPow;
  } else if (head == "cayley") {
    expect_fields(parts, 2, t);
    s.kind = Kind::Cayley;
  } else if (head == "dtest") {
    expect_fields(parts, 3, t);
    s.kind = Kind::DTest;
    if (!(s.params[0] > 0.0 && s.params[0] < 1.0)) throw DomainError("dtest: a must lie in (0,1)");
  } else if (head == "ltest") {
    expect_fields(parts, 2, t);
    s.kind = Kind::LTest;
    if (!(s.params[0] > 0.0 && s.params[0] < 1.0)) throw DomainError("ltest: b must lie in (0,1)");
  } else {
    throw ParseError(fmt::format("unknown symbol kind '{}'", head));
  }
  return s;
}

std::string SymbolSpec::to_string() const {
  switch (kind) {
    case Kind::Log: return "log";
    case Kind::LogLog: return "loglog";
    case Kind::Power: return "power:" + num(params.at(0));
    case Kind::PowLog: return "powlog:" + num(params.at(0)) + ":" + num(params.at(1));
    case Kind::LogPow: return "logpow:" + num(params.at(0));
    case Kind::Cayley: return "cayley:" + num(params.at(0));
    case Kind::DTest: return "dtest:" + num(params.at(0)) + ":" + num(params.at(1));
    case Kind::LTest: return "ltest:" + num(params.at(0));
    case Kind::Poly: {
      std::string out = "poly:";
      for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + num(params[i]);
      return out;
    }
    case Kind::File: return "file:" + path;
  }
  return {};
}

bool SymbolSpec::nonnegative() const {
  switch (kind) {
    case Kind::Log:
    case Kind::Power:
    case Kind::LogPow:
    case Kind::LogLog:
    case Kind::DTest:
    case Kind::LTest:
      return true;
    case Kind::PowLog:
      return true;
    case Kind::Cayley:
      return params.at(0) >= 0.0;
    case Kind::Poly:
      for (double c : params)
        if (c < 0.0) return false;
      return true;
    case Kind::File:
      return false;
  }
  return false;
}

CoefficientSequence expand(const SymbolSpec& spec, std::size_t n) {
  using Kind = SymbolSpec::Kind;
  if (n > kLinearCap) throw CapacityError("truncation above the expansion cap");
  switch (spec.kind) {
    case Kind::Log:
      return CoefficientSequence::generate(n, [](std::size_t k) { return k == 0 ? 0.0 : 1.0 / static_cast<double>(k); });
    case Kind::Power: {
      const double s = spec.params.at(0);
      return CoefficientSequence::generate(
          n, [s](std::size_t k) { return k == 0 ? 0.0 : std::pow(static_cast<double>(k), s); });
    }
    case Kind::PowLog: {
      const double s = spec.params.at(0), t = spec.params.at(1);
      return CoefficientSequence::generate(n, [s, t](std::size_t k) {
        if (k == 0) return 0.0;
        const double x = static_cast<double>(k);
        return std::pow(x, s) * std::pow(std::log1p(x), t);
      });
    }
    case Kind::LogPow:
      return from_doubles(logpow_coeffs(spec.params.at(0), n));
    case Kind::LogLog:
      return from_doubles(loglog_coeffs(n));
    case Kind::Cayley: {
      const double a = spec.params.at(0);
      std::vector<double> c(n + 1);
      c[0] = 1.0;
      for (std::size_t k = 1; k <= n; ++k)
        c[k] = c[k - 1] * (static_cast<double>(k) - 1.0 + a) / static_cast<double>(k);
      return from_doubles(std::move(c));
    }
    case Kind::DTest: {
      const double a = spec.params.at(0), alpha = spec.params.at(1);
      const double scale = std::pow(1.0 - a, alpha / 2.0);
      const double la = std::log(a);
      return CoefficientSequence::generate(n, [=](std::size_t k) {
        const double x = static_cast<double>(k);
        return scale * std::exp((alpha - 1.0) * std::log1p(x) + x * la);
      });
    }
    case Kind::LTest: {
      const double b = spec.params.at(0);
      const double scale = 1.0 / std::sqrt(-std::log1p(-b));
      const double lb = std::log(b);
      return CoefficientSequence::generate(n, [=](std::size_t k) {
        if (k == 0) return 0.0;
        const double x = static_cast<double>(k);
        return scale * std::exp(x * lb) / x;
      });
    }
    case Kind::Poly: {
      std::vector<double> c(n + 1, 0.0);
      for (std::size_t k = 0; k <= n && k < spec.params.size(); ++k) c[k] = spec.params[k];
      return from_doubles(std::move(c));
    }
    case Kind::File:
      return read_coefficient_file(spec.path).truncated(n);
  }
  throw ParseError("unhandled symbol kind");
}

CoefficientSequence expand(std::string_view spec, std::size_t truncation) {
  return expand(SymbolSpec::parse(spec), truncation);
}

CoefficientSequence read_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(fmt::format("cannot open coefficient file '{}'", path));
  std::vector<Complex> c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto fields = split(t, ',');
    const std::string ctx = fmt::format("{}:{}", path, lineno);
    if (fields.size() == 1) {
      c.emplace_back(parse_number(fields[0], ctx), 0.0);
    } else if (fields.size() == 2) {
      c.emplace_back(parse_number(fields[0], ctx), parse_number(fields[1], ctx));
    } else {
      throw ParseError(fmt::format("{}: expected 're[,im]'", ctx));
    }
  }
  if (c.empty()) throw ParseError(fmt::format("coefficient file '{}' is empty", path));
  return CoefficientSequence(std::move(c));
}

}  // namespace hgop
