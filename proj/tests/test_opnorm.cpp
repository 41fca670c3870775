#include <doctest.h>

#include <cmath>
#include <random>

#include "hgop/opnorm.hpp"
#include "hgop/power_iteration.hpp"
#include "hgop/symbol.hpp"

using namespace hgop;

TEST_SUITE("opnorm") {

TEST_CASE("power iteration: closed forms") {
  Eigen::MatrixXd H(2, 2);
  H << 1.0, 0.5, 0.5, 1.0 / 3.0;
  CHECK(spectral_norm(H).norm == doctest::Approx(2.0 / 3.0 + std::sqrt(13.0) / 6.0).epsilon(1e-12));
  const Eigen::MatrixXd Z = Eigen::MatrixXd::Zero(3, 4);
  const auto z = spectral_norm(Z);
  CHECK(z.norm == 0.0);
  CHECK(z.converged);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(3, 3);
  D(2, 2) = -5.0;  // a start vector orthogonal to the top singular vector must still find it
  Eigen::VectorXd start(3);
  start << 1.0, 0.0, 0.0;
  CHECK(spectral_norm(D, start).norm == doctest::Approx(5.0));
  Eigen::MatrixXcd C(1, 2);
  C << std::complex<double>(3.0, 0.0), std::complex<double>(0.0, 4.0);
  CHECK(spectral_norm(C).norm == doctest::Approx(5.0));
}

TEST_CASE("power iteration vs Eigen SVD") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> nd;
  for (int i = 0; i < 20; ++i) {
    const Eigen::Index m = 1 + rng() % 30, n = 1 + rng() % 30;
    Eigen::MatrixXd A(m, n);
    for (Eigen::Index a = 0; a < m; ++a)
      for (Eigen::Index b = 0; b < n; ++b) A(a, b) = nd(rng);
    const double ref = Eigen::JacobiSVD<Eigen::MatrixXd>(A).singularValues()(0);
    CHECK(spectral_norm(A).norm == doctest::Approx(ref).epsilon(1e-7));
  }
}

TEST_CASE("norm curve of the Hilbert matrix") {
  const auto g = expand("log", 1 << 9);
  const auto curve = weighted_norm_curve(g, 1.0, 1.0, {1, 3, 7, 15, 31, 63, 127, 255});
  CHECK(curve.front().norm == doctest::Approx(2.0 / 3.0 + std::sqrt(13.0) / 6.0).epsilon(1e-10));
  for (std::size_t i = 1; i < curve.size(); ++i) CHECK(curve[i].norm >= curve[i - 1].norm);
  CHECK(curve.back().norm < std::acos(-1.0));
}

TEST_CASE("rank-one symbol z") {
  // only row 0 survives: entries w_beta(0)^{1/2} w_alpha(k)^{-1/2}/(k+1)
  const std::size_t N = 40;
  const auto g = expand("poly:0,1", N + 1);
  const double alpha = 0.5, beta = 0.3;
  double s = 0.0;
  for (std::size_t k = 0; k <= N; ++k) s += 1.0 / (dirichlet_weight(alpha, k) * std::pow(k + 1.0, 2.0));
  const double ref = std::sqrt(dirichlet_weight(beta, 0) * s);
  const auto curve = weighted_norm_curve(g, alpha, beta, {N});
  CHECK(curve.front().norm == doctest::Approx(ref).epsilon(1e-10));
}

TEST_CASE("curve classification") {
  std::vector<NormPoint> flat, grow;
  for (int j = 4; j <= 12; ++j) {
    const auto N = static_cast<std::size_t>(1) << j;
    flat.push_back({N, 2.0 - std::ldexp(1.0, -j)});
    grow.push_back({N, std::sqrt(static_cast<double>(N))});
  }
  CHECK(classify_curve(flat).shape == CurveShape::Saturating);
  CHECK(classify_curve(grow).shape == CurveShape::Growing);
}

TEST_CASE("Wiener-source norms") {
  // b_2 = 1: single row n = 1 with entries 2/(k+2); beta = 1 gives sup_k 2/(k+2) = 1
  CHECK(wiener_source_norm(expand("poly:0,0,1", 40), 1.0, 30) == doctest::Approx(1.0));
  CHECK(wiener_source_norm(expand("poly:0", 40), 1.0, 30) == 0.0);
  const auto g = expand("log", 1 << 12);
  const double a = wiener_source_norm(g, 3.0, 1 << 10), b = wiener_source_norm(g, 3.0, (1 << 12) - 1);
  CHECK(b / a - 1.0 < 1e-3);
}

TEST_CASE("finite-section decay") {
  const auto poly = finite_section_decay(expand("poly:0,1,1,1", 65), 1.0, 1.0, 64, {0, 2, 3, 8});
  CHECK(poly[0].norm > 0.0);
  CHECK(poly[1].norm > 0.0);
  CHECK(poly[2].norm == 0.0);
  CHECK(poly[3].norm == 0.0);
  const auto lg = finite_section_decay(expand("log", 1025), 1.0, 1.0, 1024, {0, 64, 256});
  const auto cp = finite_section_decay(expand("powlog:-1:-1", 1025), 1.0, 1.0, 1024, {0, 64, 256});
  // the Hilbert matrix keeps a large share of its norm in the tail; the compact symbol does not
  CHECK(lg[2].norm > 0.3 * lg[0].norm);
  CHECK(cp[2].norm < 0.1 * cp[0].norm);
  CHECK(cp[2].norm < cp[1].norm);
}

}  // TEST_SUITE
