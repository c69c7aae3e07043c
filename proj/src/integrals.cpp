#include "randturns/integrals.hpp"

#include <atomic>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <thread>

#include "randturns/combinatorics.hpp"

namespace randturns {

namespace {

// Compensated accumulator for the m^p grid terms.
struct KahanSum {
  double sum = 0, carry = 0;

  void add(double value) {
    const double y = value - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

struct KahanComplex {
  KahanSum re, im;

  void add(std::complex<double> value) {
    re.add(value.real());
    im.add(value.imag());
  }
  std::complex<double> value() const { return {re.sum, im.sum}; }
};

double ipow(double base, int exponent) {
  double result = 1, factor = base;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result *= factor;
    factor *= factor;
  }
  return result;
}

void check_quad_caps(int n, int p, const Caps& caps) {
  if (caps.unlimited) return;
  if (n > caps.quad_max_n || p > caps.quad_max_p)
    throw resource_limit_error(
        "integral caps exceeded: n " + std::to_string(n) + " (max " +
        std::to_string(caps.quad_max_n) + "), p " + std::to_string(p) +
        " (max " + std::to_string(caps.quad_max_p) + ")");
}

int resolve_grid_size(const QuadratureOptions& opts, int minimum) {
  if (opts.m == 0) return minimum;
  if (opts.m < minimum)
    throw validation_error("grid size " + std::to_string(opts.m) +
                           " below the exactness bound " +
                           std::to_string(minimum));
  return opts.m;
}

// Mean of the integrand over the p-dimensional uniform grid, which equals
// (2pi)^{-p} times the integral for trig polynomials resolved by the grid.
// Work splits into slabs of fixed first coordinate; slab sums combine in
// index order so the result does not depend on the thread count.
std::complex<double> grid_mean(
    const QuadratureGrid& grid, int threads,
    const std::function<std::complex<double>(const std::vector<double>&)>&
        integrand) {
  const int m = grid.m;
  const int p = grid.dimension;
  std::vector<std::complex<double>> slab_sums(m);

  std::atomic<int> next_slab{0};
  auto worker = [&] {
    std::vector<double> thetas(p);
    std::vector<int> index(p, 0);
    for (;;) {
      const int slab = next_slab.fetch_add(1);
      if (slab >= m) return;
      thetas[0] = grid.nodes[slab];
      std::fill(index.begin() + 1, index.end(), 0);
      for (int d = 1; d < p; ++d) thetas[d] = grid.nodes[0];
      KahanComplex acc;
      for (;;) {
        acc.add(integrand(thetas));
        int d = p - 1;
        for (; d >= 1; --d) {
          if (++index[d] < m) {
            thetas[d] = grid.nodes[index[d]];
            break;
          }
          index[d] = 0;
          thetas[d] = grid.nodes[0];
        }
        if (d < 1) break;
      }
      slab_sums[slab] = acc.value();
    }
  };

  const int workers = std::clamp(threads, 1, m);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  KahanComplex total;
  for (const auto& s : slab_sums) total.add(s);
  return total.value() / ipow(static_cast<double>(m), p);
}

IntegralResult round_with_check(double raw, double imag, int m) {
  if (std::abs(raw) > 9.0e15)
    throw numerical_error(
        "integral value exceeds the exactly representable double range");
  const auto rounded = std::llround(raw);
  const double residual =
      std::max(std::abs(raw - static_cast<double>(rounded)), std::abs(imag));
  const double tolerance =
      1e-6 * std::max(1.0, std::abs(static_cast<double>(rounded)));
  if (residual >= tolerance)
    throw numerical_error("integer recovery failed: raw " +
                          std::to_string(raw) + ", residual " +
                          std::to_string(residual) +
                          " (grid m=" + std::to_string(m) + " too small?)");
  IntegralResult result;
  result.value = rounded;
  result.raw = raw;
  result.residual = residual;
  result.m = m;
  return result;
}

double two_cos_sum(const std::vector<double>& thetas) {
  double sum = 0;
  for (double theta : thetas) sum += 2.0 * std::cos(theta);
  return sum;
}

}  // namespace

QuadratureGrid QuadratureGrid::uniform(int m, int dimension) {
  if (m < 1 || dimension < 1)
    throw validation_error("quadrature grid needs m >= 1 and dimension >= 1");
  QuadratureGrid grid;
  grid.m = m;
  grid.dimension = dimension;
  grid.nodes.resize(m);
  for (int k = 0; k < m; ++k)
    grid.nodes[k] = -std::numbers::pi + 2.0 * std::numbers::pi * k / m;
  return grid;
}

int min_grid_points(int n, int p) { return 2 * n + 2 * p + 1; }

double vandermonde_sq(const std::vector<double>& thetas) {
  const std::size_t p = thetas.size();
  double product = 1;
  for (std::size_t a = 0; a + 1 < p; ++a) {
    for (std::size_t b = a + 1; b < p; ++b) {
      const double dc = std::cos(thetas[b]) - std::cos(thetas[a]);
      const double ds = std::sin(thetas[b]) - std::sin(thetas[a]);
      product *= dc * dc + ds * ds;
    }
  }
  return product;
}

std::complex<double> complex_det(
    std::vector<std::vector<std::complex<double>>> matrix) {
  const std::size_t n = matrix.size();
  for (const auto& row : matrix)
    if (row.size() != n)
      throw validation_error("determinant of a non-square matrix");
  std::complex<double> det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(matrix[r][col]) > std::abs(matrix[pivot][col])) pivot = r;
    if (std::abs(matrix[pivot][col]) == 0.0) return 0;
    if (pivot != col) {
      std::swap(matrix[pivot], matrix[col]);
      det = -det;
    }
    det *= matrix[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::complex<double> factor = matrix[r][col] / matrix[col][col];
      for (std::size_t c = col; c < n; ++c)
        matrix[r][c] -= factor * matrix[col][c];
    }
  }
  return det;
}

IntegralResult f_np_integral(int n, int p, const QuadratureOptions& opts,
                             const Caps& caps) {
  if (n < 0 || p < 1) throw validation_error("f_np_integral needs n>=0, p>=1");
  check_quad_caps(n, p, caps);
  const int m = resolve_grid_size(opts, min_grid_points(n, p));
  const auto grid = QuadratureGrid::uniform(m, p);
  const auto mean =
      grid_mean(grid, opts.threads, [&](const std::vector<double>& thetas) {
        return std::complex<double>(
            ipow(two_cos_sum(thetas), 2 * n) * vandermonde_sq(thetas), 0.0);
      });
  const double prefactor =
      (factorial(p) * binomial(2 * n, n)).convert_to<double>();
  return round_with_check(mean.real() / prefactor, mean.imag() / prefactor, m);
}

IntegralResult z_integral(int n, const std::vector<int>& start_sites,
                          const std::vector<int>& end_sites,
                          const QuadratureOptions& opts, const Caps& caps) {
  const int p = static_cast<int>(start_sites.size());
  if (n < 0 || p < 1 || end_sites.size() != start_sites.size())
    throw validation_error("z_integral needs n>=0 and equal nonempty site lists");
  for (int k = 1; k < p; ++k)
    if (start_sites[k] <= start_sites[k - 1] ||
        end_sites[k] <= end_sites[k - 1])
      throw validation_error("sites must be strictly increasing");
  check_quad_caps(n, p, caps);

  int spread = 0;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      spread = std::max(spread, std::abs(end_sites[a] - start_sites[b]));
  const int m =
      resolve_grid_size(opts, std::max(min_grid_points(n, p),
                                       2 * n + spread + 1));
  const auto grid = QuadratureGrid::uniform(m, p);

  const auto mean =
      grid_mean(grid, opts.threads, [&](const std::vector<double>& thetas) {
        std::vector<std::vector<std::complex<double>>> matrix(
            p, std::vector<std::complex<double>>(p));
        for (int a = 0; a < p; ++a)
          for (int b = 0; b < p; ++b) {
            const double phase =
                -(end_sites[a] - start_sites[b]) * thetas[a];
            matrix[a][b] = std::polar(1.0, phase);
          }
        return ipow(two_cos_sum(thetas), 2 * n) * complex_det(std::move(matrix));
      });
  return round_with_check(mean.real(), mean.imag(), m);
}

IntegralResult z_equal_sites_integral(int n, int p,
                                      const QuadratureOptions& opts,
                                      const Caps& caps) {
  if (n < 0 || p < 1)
    throw validation_error("z_equal_sites_integral needs n>=0, p>=1");
  check_quad_caps(n, p, caps);
  const int m = resolve_grid_size(opts, min_grid_points(n, p));
  const auto grid = QuadratureGrid::uniform(m, p);
  const auto mean =
      grid_mean(grid, opts.threads, [&](const std::vector<double>& thetas) {
        return std::complex<double>(
            ipow(two_cos_sum(thetas), 2 * n) * vandermonde_sq(thetas), 0.0);
      });
  const double denom = factorial(p).convert_to<double>();
  return round_with_check(mean.real() / denom, mean.imag() / denom, m);
}

IdentityReport verify_identity_ad(int n, int p, const QuadratureOptions& opts,
                                  const Caps& caps) {
  IdentityReport report;
  report.z_value = z_equal_sites_integral(n, p, opts, caps).value;
  report.binom = binomial(2 * n, n);
  report.f_value = f_np_via_shapes(n, p);
  report.holds = report.z_value == report.binom * report.f_value;
  return report;
}

}  // namespace randturns
