#pragma once

// Independent brute-force verifiers. The d=2 oracle parametrizes the boundary
// from the support function and integrates along the curve; the dense oracle
// recomputes spectral inner products pointwise on an oversampled grid. Both
// use their own synthesis and quadrature (GSL special functions and
// Gauss-Legendre tables for d=3), sharing no transform code with the library
// kernels.

#include "quermass/convex.hpp"

namespace quermass::oracle {

struct CurveIntegrals {
  double length = 0.0;          // L
  double area = 0.0;            // A
  double int_inv_kappa = 0.0;   // int 1/kappa ds
  double int_inv_kappa2 = 0.0;  // int 1/kappa^2 ds
};

/// Boundary X(t) = h (cos t, sin t) + h' (-sin t, cos t); 1/kappa = h + h''.
/// Composite quadrature at n_samples nodes. Throws on non-convex input.
CurveIntegrals curve_oracle(const SupportBody& body, int n_samples);

/// <f, g> by pointwise synthesis on a grid oversampled by grid_scale.
double dense_inner_product_oracle(const HarmonicSpectrum& f, const HarmonicSpectrum& g,
                                  int grid_scale = 2);

}  // namespace quermass::oracle
