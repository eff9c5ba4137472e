#pragma once

// Convex bodies represented by the harmonic spectrum of their support
// function, and the geometric functionals built from it: mean width,
// Steiner point/ball, delta_2 distance, curvature integrals,
// quermassintegrals, mixed volume, convexity certification.
//
// Every functional is computed spectrally; grid quadrature appears only as a
// cross-check in the oracle module.

#include <array>
#include <optional>

#include "quermass/harmonic.hpp"
#include "quermass/spectral.hpp"

namespace quermass {

double unit_sphere_area(int dim);  // |S^{d-1}|
double unit_ball_volume(int dim);  // |B^d|

struct ConvexityCertificate {
  double min_eigenvalue = 0.0;  // min over grid nodes of the smallest eigenvalue of A
  int grid_resolution = 0;      // colatitude rows (d=3) or angles (d=2)
  bool positive() const { return min_eigenvalue > 0.0; }
};

struct SupportBody {
  HarmonicSpectrum support;  // h_K
  std::optional<ConvexityCertificate> certificate;
  double spectral_tail = 0.0;  // relative energy beyond the band limit (sampled kinds)
  int dim() const { return support.dim(); }
};

/// Positive-definiteness sweep of A = h I + Hess h over the grid. d = 2, 3 only.
ConvexityCertificate certify_convex(const HarmonicSpectrum& h, const QuadratureGrid& grid);

/// Wraps a spectrum into a body, certifying on the default grid when d = 2, 3.
SupportBody make_body(HarmonicSpectrum h, bool certify = true);

/// z(K) = (1/|B^d|) int h(theta) theta dtheta, read off the degree-1 block.
std::array<double, 3> steiner_point(const SupportBody& body);

/// Support spectrum of the Steiner ball: blocks 0 and 1 of h, all else zero.
HarmonicSpectrum steiner_ball_support(const SupportBody& body);

/// L2 distance of the support functions.
double delta2(const HarmonicSpectrum& hK, const HarmonicSpectrum& hL);
double delta2(const SupportBody& K, const SupportBody& L);

struct CurvatureIntegrals {
  double int_H_dm2 = 0.0;  // int_Sigma H_{d-2} dS = int h dtheta
  double int_H_dm3 = 0.0;  // int_Sigma H_{d-3} dS = <h, Lap h + (d-1)h>/(d-1)
  double int_ros = 0.0;    // int_Sigma H_{d-2}^2 / H_{d-1} dS = |h + Lap h/(d-1)|^2
};

CurvatureIntegrals curvature_integrals(const SupportBody& body);

/// V(K, L) = <h_K, Lap h_L + (d-1) h_L> / (d(d-1)); symmetric.
double mixed_volume(const SupportBody& K, const SupportBody& L);

struct Quermassintegrals {
  double w_dm1 = 0.0;  // W_{d-1} = int_Sigma H_{d-2} dS / d
  double w_dm2 = 0.0;  // W_{d-2} = int_Sigma H_{d-3} dS / d
};

Quermassintegrals quermassintegrals(const SupportBody& body);

double mean_width(const SupportBody& body);

struct GeometricSummary {
  double mean_width = 0.0;
  std::array<double, 3> steiner_point{0.0, 0.0, 0.0};
  double int_H_dm2 = 0.0;
  double int_H_dm3 = 0.0;
  double int_ros = 0.0;
  double delta2_steiner = 0.0;  // delta_2(K, B(K))
  double w_dm1 = 0.0;
  double w_dm2 = 0.0;
};

GeometricSummary geometric_summary(const SupportBody& body);

/// rho = H_{d-2}/H_{d-1} = h + Lap h/(d-1): block-n multiplier 1 - lambda_n/(d-1).
HarmonicSpectrum rho_spectrum(const HarmonicSpectrum& h);

// Degree-1 block of v . theta in the concrete bases (d = 2, 3; canonical
// coordinate convention for d >= 4), and its inverse.
std::vector<double> degree1_from_vector(std::span<const double> v, int dim);
std::array<double, 3> vector_from_degree1(std::span<const double> block1, int dim);

}  // namespace quermass
