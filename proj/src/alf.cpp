#include "quermass/alf.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quermass::alf {

namespace {
constexpr double kFourPi = 4.0 * std::numbers::pi;
}

void normalized_row(int m, int nmax, double x, std::span<double> out) {
  assert(m >= 0 && nmax >= m);
  assert(std::abs(x) <= 1.0);
  assert(out.size() >= static_cast<std::size_t>(nmax - m + 1));

  // seed P~_m^m
  double pmm = 1.0;
  if (m > 0) {
    const double omx2 = (1.0 - x) * (1.0 + x);
    double fact = 1.0;
    for (int i = 1; i <= m; ++i) {
      pmm *= omx2 * fact / (fact + 1.0);
      fact += 2.0;
    }
  }
  pmm = std::sqrt((2.0 * m + 1.0) * pmm / kFourPi);
  if (m & 1) pmm = -pmm;
  out[0] = pmm;
  if (nmax == m) return;

  double pmmp1 = x * std::sqrt(2.0 * m + 3.0) * pmm;
  out[1] = pmmp1;
  double oldfact = std::sqrt(2.0 * m + 3.0);
  for (int n = m + 2; n <= nmax; ++n) {
    const double fact = std::sqrt((4.0 * n * n - 1.0) / (static_cast<double>(n) * n - static_cast<double>(m) * m));
    const double pll = (x * pmmp1 - pmm / oldfact) * fact;
    oldfact = fact;
    pmm = pmmp1;
    pmmp1 = pll;
    out[n - m] = pll;
  }
}

double normalized(int n, int m, double x) {
  std::vector<double> row(static_cast<std::size_t>(n - m + 1));
  normalized_row(m, n, x, row);
  return row.back();
}

void normalized_row_dtheta(int m, int nmax, double x, double sin_theta,
                           std::span<const double> row, std::span<double> out) {
  if (!(sin_theta > 0.0))
    throw std::invalid_argument("normalized_row_dtheta: needs sin(theta) > 0");
  for (int n = m; n <= nmax; ++n) {
    const double below = (n == m) ? 0.0 : row[n - m - 1];
    const double a = (n == m) ? 0.0
                              : std::sqrt((static_cast<double>(n) * n - static_cast<double>(m) * m) *
                                          (2.0 * n + 1.0) / (2.0 * n - 1.0));
    out[n - m] = (n * x * row[n - m] - a * below) / sin_theta;
  }
}

}  // namespace quermass::alf

namespace quermass::quad {

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  GaussLegendre gl;
  gl.x.assign(static_cast<std::size_t>(n), 0.0);
  gl.w.assign(static_cast<std::size_t>(n), 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton from the Chebyshev-like initial guess; converges in a few steps.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // z is the (i+1)-th root from the top; store ascending.
    gl.x[n - 1 - i] = z;
    gl.w[n - 1 - i] = 2.0 / ((1.0 - z * z) * pp * pp);
    gl.x[i] = -z;
    gl.w[i] = gl.w[n - 1 - i];
  }
  return gl;
}

}  // namespace quermass::quad
