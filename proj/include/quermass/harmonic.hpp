#pragma once

// Quadrature grids and real harmonic transforms on S^1 and S^2, plus the
// spectral differential operators. The forward/inverse kernels are
// OpenMP-parallel; a naive serial reference lives in quermass/reference.hpp.

#include <cstddef>
#include <vector>

#include "quermass/spectral.hpp"

namespace quermass {

class QuadratureGrid {
 public:
  /// d=2: n_angles equally spaced angles, weight 2pi/n_angles each.
  static QuadratureGrid circle(int n_angles);
  /// d=3: Gauss-Legendre colatitudes x uniform longitudes; no pole nodes.
  static QuadratureGrid sphere(int n_theta, int n_phi);
  /// Default resolution for a band limit (2x oversampled so products of
  /// band-limited functions integrate exactly): d=2 M=8N, d=3 (2N+2, 4N+4).
  static QuadratureGrid for_band_limit(int dim, int band_limit);

  int dim() const { return dim_; }
  std::size_t size() const;
  double total_weight() const;
  /// Largest band limit the grid transforms exactly.
  int max_band_limit() const;
  bool same_layout(const QuadratureGrid& o) const;

  // d=2 accessors
  int n_angles() const { return n_phi_; }
  double angle(int j) const;

  // d=3 accessors (rows ordered by ascending cos theta)
  int n_theta() const { return static_cast<int>(cos_theta_.size()); }
  int n_phi() const { return n_phi_; }
  double cos_theta(int i) const { return cos_theta_[i]; }
  double sin_theta(int i) const { return sin_theta_[i]; }
  double theta(int i) const;
  double theta_weight(int i) const { return theta_w_[i]; }
  double phi(int j) const;
  double phi_weight() const;

  /// d=2: node j; d=3: node i*n_phi + j.
  double node_weight(std::size_t node) const;

 private:
  QuadratureGrid() = default;
  int dim_ = 0;
  int n_phi_ = 0;                 // longitudes (d=3) or angles (d=2)
  std::vector<double> cos_theta_;  // d=3 only
  std::vector<double> sin_theta_;
  std::vector<double> theta_w_;
};

class GridFunction {
 public:
  GridFunction() = default;
  explicit GridFunction(QuadratureGrid grid)
      : grid_(std::move(grid)), values_(grid_.size(), 0.0) {}
  GridFunction(QuadratureGrid grid, std::vector<double> values);

  const QuadratureGrid& grid() const { return grid_; }
  std::vector<double>& values() { return values_; }
  const std::vector<double>& values() const { return values_; }
  double& operator[](std::size_t i) { return values_[i]; }
  double operator[](std::size_t i) const { return values_[i]; }

 private:
  QuadratureGrid grid_;
  std::vector<double> values_;
};

/// Analysis against the orthonormal real basis. Rejects grids too coarse for
/// the band limit.
HarmonicSpectrum forward(const GridFunction& f, int band_limit);

/// Pointwise synthesis on the grid nodes.
GridFunction inverse(const HarmonicSpectrum& s, const QuadratureGrid& grid);

/// sum of weights * f * g; same grid required.
double inner_product(const GridFunction& f, const GridFunction& g);

/// Lap^k: block n scaled by (-lambda_n)^k. Sphere eigenvalues from the
/// spectrum's dimension.
HarmonicSpectrum apply_laplacian(const HarmonicSpectrum& s, int power);
HarmonicSpectrum apply_laplacian(const HarmonicSpectrum& s, const EigenSystem& eigs, int power);

/// Point evaluation (synthesis at one point).
double evaluate(const HarmonicSpectrum& s, double theta);               // d=2
double evaluate(const HarmonicSpectrum& s, double theta, double phi);   // d=3

// Per-node matrix A = h I + Hess h in the orthonormal frame. d=2: scalar
// h + h'' (stored in a11); d=3: symmetric 2x2 (a11, a12, a22) in the frame
// (e_theta, e_phi / sin theta).
struct HessianField {
  int dim = 0;
  std::vector<double> a11, a12, a22;
  double min_eigenvalue(std::size_t node) const;
  double min_eigenvalue() const;
};

HessianField surface_gradient_hessian(const HarmonicSpectrum& s, const QuadratureGrid& grid);

}  // namespace quermass
