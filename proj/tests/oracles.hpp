#pragma once
// Reference computations used only by tests. Each one avoids the code path it
// checks: explicit factorial sums for Wigner matrices, Pade exponentials for
// SU(2) elements, direct sums for Parseval.

#include "pwlab/central_element.hpp"
#include "pwlab/fourier.hpp"
#include "pwlab/su2.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <random>

namespace pwlab::oracle {

inline long double factorial(int k) {
  long double r = 1.0L;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

/// Wigner small-d entry for highest weight n, row a, column k (m' = n/2 - a,
/// m = n/2 - k), from the explicit finite sum.
inline double wigner_small_d(int n, int a, int k, double beta) {
  const long double c = std::cos(static_cast<long double>(beta) / 2);
  const long double s = std::sin(static_cast<long double>(beta) / 2);
  const long double pref =
      std::sqrt(factorial(n - a) * factorial(a) * factorial(n - k) * factorial(k));
  long double sum = 0.0L;
  for (int t = std::max(0, a - k); t <= std::min(n - k, a); ++t) {
    const long double denom =
        factorial(n - k - t) * factorial(t) * factorial(k - a + t) * factorial(a - t);
    const long double sign = ((k - a + t) % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * pref / denom * std::pow(c, n + a - k - 2 * t) * std::pow(s, k - a + 2 * t);
  }
  return static_cast<double>(sum);
}

inline ComplexMatrix wigner_big_d(int n, const GroupPoint& g) {
  const double alpha = g.coords[0], beta = g.coords[1], gamma = g.coords[2];
  ComplexMatrix m(n + 1, n + 1);
  for (int a = 0; a <= n; ++a) {
    for (int k = 0; k <= n; ++k) {
      const double mp = n / 2.0 - a, mm = n / 2.0 - k;
      m(a, k) = std::polar(1.0, -mp * alpha) * wigner_small_d(n, a, k, beta) *
                std::polar(1.0, -mm * gamma);
    }
  }
  return m;
}

/// exp(-i alpha s3/2) exp(-i beta s2/2) exp(-i gamma s3/2) by generic matrix
/// exponentiation.
inline Eigen::Matrix2cd su2_by_expm(const GroupPoint& g) {
  const Complex i(0.0, 1.0);
  Eigen::Matrix2cd s2, s3;
  s2 << 0.0, -i, i, 0.0;
  s3 << 1.0, 0.0, 0.0, -1.0;
  Eigen::Matrix2cd a = (-i * g.coords[0] / 2.0 * s3).exp();
  Eigen::Matrix2cd b = (-i * g.coords[1] / 2.0 * s2).exp();
  Eigen::Matrix2cd c = (-i * g.coords[2] / 2.0 * s3).exp();
  return a * b * c;
}

inline GroupPoint random_su2_point(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  constexpr double pi = std::numbers::pi;
  return GroupPoint{{2 * pi * u(rng), pi * u(rng), 4 * pi * u(rng)}};
}

inline GroupPoint random_torus_point(std::mt19937_64& rng, int d) {
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  GroupPoint g;
  for (int j = 0; j < d; ++j) g.coords.push_back(u(rng));
  return g;
}

/// sum_pi dim(pi) ||phi(pi)||_HS^2.
inline double parseval_energy(const FourierCoefficients& phi) {
  double e = 0.0;
  for (const auto& [w, m] : phi.entries()) {
    e += phi.model()->dimension(w) * m.squaredNorm();
  }
  return e;
}

inline double sup_abs(const std::vector<Complex>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

inline double max_entry_diff(const FourierCoefficients& a, const FourierCoefficients& b) {
  double worst = 0.0;
  for (const auto& [w, m] : a.entries()) worst = std::max(worst, (m - b.at(w)).cwiseAbs().maxCoeff());
  for (const auto& [w, m] : b.entries()) worst = std::max(worst, (m - a.at(w)).cwiseAbs().maxCoeff());
  return worst;
}

/// Random polynomial in `arity` generators with up to `terms` monomials of
/// total degree <= max_degree.
inline CentralElement random_polynomial(std::mt19937_64& rng, std::size_t arity, int terms,
                                        int max_degree) {
  std::uniform_real_distribution<double> c(-1.0, 1.0);
  std::uniform_int_distribution<int> e(0, max_degree);
  CentralElement d(arity);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> ex(arity, 0);
    int budget = max_degree;
    for (auto& x : ex) {
      x = std::min(e(rng), budget);
      budget -= x;
    }
    d = d + CentralElement(arity, {{ex, Complex(c(rng), c(rng))}});
  }
  return d;
}

}  // namespace pwlab::oracle
