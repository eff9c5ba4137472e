#include "quermass/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gsl/gsl_integration.h>
#include <gsl/gsl_sf_legendre.h>

namespace quermass::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct CircleSynthesis {
  const HarmonicSpectrum& s;
  double h(double t) const {
    double v = s.coeff(0, 0) / std::sqrt(kTwoPi);
    for (int n = 1; n <= s.band_limit(); ++n)
      v += (s.coeff(n, 0) * std::cos(n * t) + s.coeff(n, 1) * std::sin(n * t)) /
           std::sqrt(std::numbers::pi);
    return v;
  }
  double h2(double t) const {  // second derivative
    double v = 0.0;
    for (int n = 1; n <= s.band_limit(); ++n)
      v -= static_cast<double>(n) * n *
           (s.coeff(n, 0) * std::cos(n * t) + s.coeff(n, 1) * std::sin(n * t)) /
           std::sqrt(std::numbers::pi);
    return v;
  }
};

// GSL-based synthesis of a d=3 spectrum at (x = cos theta, phi).
struct SphereSynthesis {
  const HarmonicSpectrum& s;
  int lmax;
  mutable std::vector<double> plm;
  explicit SphereSynthesis(const HarmonicSpectrum& spec)
      : s(spec), lmax(std::max(1, spec.band_limit())) {
    plm.resize(gsl_sf_legendre_array_n(static_cast<std::size_t>(lmax)));
  }
  void load_colatitude(double x) const {
    // csphase = -1 applies the Condon-Shortley factor, matching the library basis.
    gsl_sf_legendre_array_e(GSL_SF_LEGENDRE_SPHARM, static_cast<std::size_t>(lmax), x, -1.0,
                            plm.data());
  }
  double at(double phi) const {
    double v = 0.0;
    for (int n = 0; n <= s.band_limit(); ++n) {
      v += s.coeff(n, 0) * plm[gsl_sf_legendre_array_index(n, 0)];
      for (int m = 1; m <= n; ++m) {
        const double p = plm[gsl_sf_legendre_array_index(n, m)];
        v += std::numbers::sqrt2 * p *
             (s.coeff(n, 2 * m - 1) * std::cos(m * phi) + s.coeff(n, 2 * m) * std::sin(m * phi));
      }
    }
    return v;
  }
};

}  // namespace

CurveIntegrals curve_oracle(const SupportBody& body, int n_samples) {
  if (body.dim() != 2) throw std::invalid_argument("curve_oracle: d = 2 bodies only");
  if (n_samples < 8) throw std::invalid_argument("curve_oracle: too few samples");
  const CircleSynthesis syn{body.support};
  const double w = kTwoPi / n_samples;
  long double L = 0.0L, A = 0.0L, ik = 0.0L, ik2 = 0.0L;
  bool convex = true;
#pragma omp parallel for reduction(+ : L, A, ik, ik2) reduction(&& : convex) schedule(static)
  for (int k = 0; k < n_samples; ++k) {
    const double t = kTwoPi * (k + 0.5) / n_samples;
    const double h = syn.h(t);
    const double r = h + syn.h2(t);  // radius of curvature
    if (r <= 0.0) convex = false;
    L += w * r;
    A += 0.5 * w * h * r;
    ik += w * r * r;
    ik2 += w * r * r * r;
  }
  if (!convex) throw std::invalid_argument("curve_oracle: support function is not convex");
  return {static_cast<double>(L), static_cast<double>(A), static_cast<double>(ik),
          static_cast<double>(ik2)};
}

double dense_inner_product_oracle(const HarmonicSpectrum& f, const HarmonicSpectrum& g,
                                  int grid_scale) {
  if (f.dim() != g.dim()) throw std::invalid_argument("dense_inner_product_oracle: dim mismatch");
  if (grid_scale < 1) throw std::invalid_argument("dense_inner_product_oracle: scale must be >= 1");
  const int N = std::max(f.band_limit(), g.band_limit());

  if (f.dim() == 2) {
    const int M = grid_scale * (2 * N + 2);
    const CircleSynthesis sf{f}, sg{g};
    const double w = kTwoPi / M;
    long double acc = 0.0L;
#pragma omp parallel for reduction(+ : acc) schedule(static)
    for (int k = 0; k < M; ++k) {
      const double t = kTwoPi * (k + 0.5) / M;
      acc += w * sf.h(t) * sg.h(t);
    }
    return static_cast<double>(acc);
  }
  if (f.dim() != 3)
    throw std::invalid_argument("dense_inner_product_oracle: grids exist only for d = 2, 3");

  const int nt = grid_scale * (N + 1);
  const int np = grid_scale * (2 * N + 1);
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(nt));
  long double acc = 0.0L;
#pragma omp parallel for reduction(+ : acc) schedule(dynamic)
  for (int i = 0; i < nt; ++i) {
    double xi = 0.0, wi = 0.0;
    gsl_integration_glfixed_point(-1.0, 1.0, static_cast<std::size_t>(i), &xi, &wi, table);
    SphereSynthesis sf(f), sg(g);
    sf.load_colatitude(xi);
    sg.load_colatitude(xi);
    const double wphi = kTwoPi / np;
    long double row = 0.0L;
    for (int j = 0; j < np; ++j) {
      const double phi = kTwoPi * (j + 0.5) / np;
      row += sf.at(phi) * sg.at(phi);
    }
    acc += wi * wphi * row;
  }
  gsl_integration_glfixed_table_free(table);
  return static_cast<double>(acc);
}

}  // namespace quermass::oracle
