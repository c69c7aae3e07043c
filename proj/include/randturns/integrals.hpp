#pragma once

#include <complex>
#include <vector>

#include "randturns/common.hpp"

namespace randturns {

// Uniform nodes on [-pi, pi); the rectangle rule on this grid integrates
// e^{ij theta} exactly for |j| < m, so it is exact for the trigonometric-
// polynomial integrands here once m clears their per-variable degree.
struct QuadratureGrid {
  int m = 0;
  int dimension = 0;
  std::vector<double> nodes;

  static QuadratureGrid uniform(int m, int dimension);
};

// Smallest grid honouring the degree bound 2n + 2(p-1) with a safety margin.
int min_grid_points(int n, int p);

struct QuadratureOptions {
  int m = 0;        // 0: derive from (n, p) and the site spread
  int threads = 1;  // grid slabs evaluated concurrently
};

// An integral whose exact value is a known integer: the quadrature value is
// rounded and the rounding residual checked against 1e-6 * max(1, |value|).
struct IntegralResult {
  BigInt value;
  double raw = 0;
  double residual = 0;
  int m = 0;
};

// |prod_{a<b} (e^{i t_b} - e^{i t_a})|^2; empty and singleton products are 1.
double vandermonde_sq(const std::vector<double>& thetas);

// Determinant by partial-pivot elimination; the matrix is consumed.
std::complex<double> complex_det(
    std::vector<std::vector<std::complex<double>>> matrix);

// Permutations of {1..n} with LIS <= p via the p-fold integral
// (n!)^2/(2n)! 1/p! (2pi)^{-p} Int (sum 2cos)^{2n} |Vandermonde|^2.
IntegralResult f_np_integral(int n, int p, const QuadratureOptions& opts = {},
                             const Caps& caps = {});

// Closed-count of random turns paths from start_sites to end_sites in 2n
// ticks via (2pi)^{-p} Int (sum 2cos)^{2n} det[e^{-i(l_a - l'_b) t_a}].
IntegralResult z_integral(int n, const std::vector<int>& start_sites,
                          const std::vector<int>& end_sites,
                          const QuadratureOptions& opts = {},
                          const Caps& caps = {});

// The anti-symmetrized form of z_integral at l_j = l'_j = j, with the
// determinant collapsed to |Vandermonde|^2 / p!.
IntegralResult z_equal_sites_integral(int n, int p,
                                      const QuadratureOptions& opts = {},
                                      const Caps& caps = {});

struct IdentityReport {
  BigInt z_value;
  BigInt binom;
  BigInt f_value;
  bool holds = false;
};

// Both sides of Z(1..p -> 1..p) = C(2n, n) * f_{np}, computed independently
// (quadrature vs. binomial times the tableau-shape sum).
IdentityReport verify_identity_ad(int n, int p,
                                  const QuadratureOptions& opts = {},
                                  const Caps& caps = {});

}  // namespace randturns
