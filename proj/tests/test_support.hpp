#pragma once

// Shared helpers for the test suites: relative comparison and random
// spectra/bodies with fixed-seed generators.

#include <algorithm>
#include <cmath>
#include <random>

#include "quermass/convex.hpp"
#include "quermass/harmonic.hpp"
#include "quermass/spectral.hpp"

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// Abstract spectrum with random per-degree squared norms on degrees [lo, N].
inline quermass::HarmonicSpectrum random_norm_spectrum(std::mt19937& rng, int N, int lo) {
  std::uniform_real_distribution<double> u(0.1, 2.0);
  std::vector<double> norms(static_cast<std::size_t>(N) + 1, 0.0);
  for (int n = lo; n <= N; ++n) norms[n] = u(rng);
  return quermass::HarmonicSpectrum::from_block_norms(norms);
}

// Coefficient spectrum for d in {2,3} with random entries on degrees [lo, N].
inline quermass::HarmonicSpectrum random_coeff_spectrum(std::mt19937& rng, int dim, int N,
                                                        int lo = 0) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  quermass::HarmonicSpectrum s(dim, N);
  for (int n = lo; n <= N; ++n)
    for (double& c : s.block(n)) c = u(rng);
  return s;
}

inline quermass::SupportBody make_ball(int d, double R, int band = 0) {
  quermass::HarmonicSpectrum h(d, band);
  h.coeff(0, 0) = R * std::sqrt(quermass::unit_sphere_area(d));
  return quermass::make_body(std::move(h));
}

struct PertTerm {
  int degree;
  int slot;
  double amplitude;
};

inline quermass::SupportBody make_perturbed(int d, double R, std::initializer_list<PertTerm> terms) {
  int band = 1;
  for (const auto& t : terms) band = std::max(band, t.degree);
  quermass::HarmonicSpectrum h(d, band);
  h.coeff(0, 0) = R * std::sqrt(quermass::unit_sphere_area(d));
  for (const auto& t : terms) h.coeff(t.degree, t.slot) += t.amplitude;
  return quermass::make_body(std::move(h));
}

// Unit-base-radius body with a random perturbation over degrees [2, deg_max],
// per-degree amplitudes shaped so certification passes; halves the
// perturbation until it does.
inline quermass::SupportBody random_convex_body(std::mt19937& rng, int d, int band_limit,
                                                int deg_max, double amplitude) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  quermass::HarmonicSpectrum pert(d, std::min(band_limit, deg_max));
  for (int n = 2; n <= pert.band_limit(); ++n) {
    const double lam = static_cast<double>(quermass::sphere_eigenvalue(n, d));
    const double scale = amplitude / std::pow(1.0 + lam, 1.25);
    for (double& c : pert.block(n)) c = scale * u(rng);
  }
  quermass::HarmonicSpectrum base(d, pert.band_limit());
  base.coeff(0, 0) = std::sqrt(quermass::unit_sphere_area(d));
  for (int tries = 0; tries < 60; ++tries) {
    quermass::SupportBody body = quermass::make_body(base + pert);
    if (body.certificate && body.certificate->positive()) return body;
    pert *= 0.5;
  }
  return quermass::make_body(base);  // ball fallback; always certified
}
