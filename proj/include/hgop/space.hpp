#pragma once

#include <string>
#include <string_view>

namespace hgop {

/// Tagged description of a function space on the disk.
///
/// Grammar: D2:<alpha> | W | HL:<p> | Hinf | Hinf:<alpha> | Blog:<alpha> | B:<beta>
///          | Lip:<p>:<alpha> | X:<p> | S:<p>
/// `Hinf` (or Hinf:0) is H^infinity; Hinf:<alpha> with alpha > 0 is the Korenblum space.
/// `S:<p>` is the derivative-Hardy space S^p (f' in H^p).
struct SpaceSpec {
  enum class Tag { Dirichlet, Wiener, HardyLittlewood, Korenblum, BlochLog, BlochBeta, MeanLipschitz, Xp, Sp };

  Tag tag = Tag::Dirichlet;
  double a = 0.0;  // alpha / p / beta depending on the tag
  double b = 0.0;  // second parameter (Lip alpha)

  static SpaceSpec dirichlet(double alpha) { return {Tag::Dirichlet, alpha, 0.0}; }
  static SpaceSpec wiener() { return {Tag::Wiener, 0.0, 0.0}; }
  static SpaceSpec hardy_littlewood(double p);
  static SpaceSpec korenblum(double alpha);
  static SpaceSpec bloch_log(double alpha) { return {Tag::BlochLog, alpha, 0.0}; }
  static SpaceSpec bloch_beta(double beta);
  static SpaceSpec mean_lipschitz(double p, double alpha);
  static SpaceSpec xp(double p);
  static SpaceSpec sp(double p);

  static SpaceSpec parse(std::string_view text);
  std::string to_string() const;

  /// B^1 and B_{log^0} are the same (Bloch) space; normalizes to BlochBeta(1).
  SpaceSpec canonical() const;

  bool is_bloch() const;
  bool is_hinf() const { return tag == Tag::Korenblum && a == 0.0; }

  friend bool operator==(const SpaceSpec&, const SpaceSpec&) = default;
};

}  // namespace hgop
