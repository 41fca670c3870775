#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hgop/coefficient_sequence.hpp"

namespace hgop {

/// Named generator for a symbol g or a test function f, reproducible from a string.
///
/// Grammar (one flat token, fields separated by ':'):
///   log                    log 1/(1-z)                     b_n = 1/n, b_0 = 0
///   power:<s>              b_n = n^s (n >= 1), b_0 = 0
///   powlog:<s>:<t>         b_n = n^s log^t(n+1) (n >= 1), b_0 = 0
///   logpow:<alpha>         log^{alpha+1}(e/(1-z))
///   cayley:<alpha>         (1-z)^{-alpha}
///   loglog                 log log(e^2/(1-z))
///   dtest:<a>:<alpha>      (1-a)^{alpha/2} sum (n+1)^{alpha-1} a^n z^n
///   ltest:<b>              (log 1/(1-b))^{-1/2} log 1/(1-bz)
///   poly:<c0,c1,...>       explicit real coefficients
///   file:<path>            one coefficient per line, "re[,im]"
struct SymbolSpec {
  enum class Kind { Log, Power, PowLog, LogPow, Cayley, LogLog, DTest, LTest, Poly, File };

  Kind kind = Kind::Log;
  std::vector<double> params;
  std::string path;

  static SymbolSpec parse(std::string_view text);
  std::string to_string() const;

  /// True when every generated coefficient is known to be >= 0 without expanding.
  bool nonnegative() const;
};

/// First N+1 Taylor coefficients of the named function.
CoefficientSequence expand(const SymbolSpec& spec, std::size_t truncation);
CoefficientSequence expand(std::string_view spec, std::size_t truncation);

/// Reads a coefficient file ("re[,im]" per line; blank lines and '#' comments skipped).
CoefficientSequence read_coefficient_file(const std::string& path);

}  // namespace hgop
