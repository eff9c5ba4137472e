#pragma once

// Eigenvalue/coefficient algebra and the generalized Poincare quadratic forms,
// evaluated entirely in spectral space. Coefficient algebra is exact
// (arbitrary-precision integers/rationals); floating point enters only
// through the spectra themselves.

#include <span>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace quermass {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// A block counts as zero when its squared norm is below this fraction of the
// total squared norm (forward transforms of sampled functions leave dust).
inline constexpr double kBlockZeroTol = 1e-12;

/// lambda_n = n(n+d-2) on S^{d-1}. Throws on n < 0 or d < 2.
long long sphere_eigenvalue(int degree, int dim);

// Eigenvalue sequence 0 = lambda_0 < lambda_1 < ... of -Laplacian, either the
// sphere sequence n(n+d-2) or a user-supplied (abstract manifold) sequence.
class EigenSystem {
 public:
  static EigenSystem sphere(int dim, int max_degree);
  static EigenSystem from_values(std::vector<double> eigenvalues);

  int dim() const { return dim_; }  // 0 in abstract mode
  bool is_sphere() const { return dim_ >= 2; }
  int max_degree() const { return max_degree_; }

  double eigenvalue(int n) const;
  // Exact value; in sphere mode an integer, in abstract mode the exact
  // rational value of the stored double.
  BigRational eigenvalue_exact(int n) const;
  // gamma_n = lambda_n - lambda_1
  double gamma(int n) const { return eigenvalue(n) - eigenvalue(1); }
  BigRational gamma_exact(int n) const;

 private:
  EigenSystem() = default;
  int dim_ = 0;
  int max_degree_ = 0;
  std::vector<double> values_;  // abstract mode only
};

// Coefficients of a function grouped by eigenspace degree. Block layout:
//   d = 2 : degree 0 -> [a0]; degree n -> [a_n (cos), b_n (sin)]
//   d = 3 : degree n -> 2n+1 values, [m=0, (1,cos), (1,sin), (2,cos), ...]
//   d = 0 (abstract) or d > 3 : free-form blocks in some orthonormal basis;
//           only norms and dot products of blocks are ever used.
class HarmonicSpectrum {
 public:
  HarmonicSpectrum() = default;
  HarmonicSpectrum(int dim, int band_limit);
  // Abstract-manifold spectrum defined by per-degree squared norms.
  static HarmonicSpectrum from_block_norms(std::span<const double> norms_sq);

  static int default_block_size(int dim, int degree);

  int dim() const { return dim_; }
  int band_limit() const { return static_cast<int>(blocks_.size()) - 1; }

  std::vector<double>& block(int n) { return blocks_.at(n); }
  const std::vector<double>& block(int n) const { return blocks_.at(n); }
  double& coeff(int n, int slot) { return blocks_.at(n).at(slot); }
  double coeff(int n, int slot) const { return blocks_.at(n).at(slot); }

  double block_norm_sq(int n) const;
  double total_norm_sq() const;
  bool block_vanishes(int n, double rel_tol = kBlockZeroTol) const;
  // Largest degree whose block does not vanish; -1 for the zero spectrum.
  int significant_degree(double rel_tol = kBlockZeroTol) const;
  // Squared-norm fraction outside [lo, hi] (0 for the zero spectrum).
  double tail_fraction_outside(int lo, int hi) const;

  HarmonicSpectrum& operator+=(const HarmonicSpectrum& o);
  HarmonicSpectrum& operator-=(const HarmonicSpectrum& o);
  HarmonicSpectrum& operator*=(double s);
  friend HarmonicSpectrum operator+(HarmonicSpectrum a, const HarmonicSpectrum& b) { return a += b; }
  friend HarmonicSpectrum operator-(HarmonicSpectrum a, const HarmonicSpectrum& b) { return a -= b; }
  friend HarmonicSpectrum operator*(HarmonicSpectrum a, double s) { return a *= s; }
  friend HarmonicSpectrum operator*(double s, HarmonicSpectrum a) { return a *= s; }

  // L2 dot product of blocks of the same degree, sum over all degrees.
  friend double dot(const HarmonicSpectrum& a, const HarmonicSpectrum& b);

  // Zero-pads so degree n exists (keeps dim-specific slot counts).
  void ensure_degree(int n);

 private:
  int dim_ = 0;
  std::vector<std::vector<double>> blocks_;
};

/// sigma_j of a value sequence; sigma_0 = 1. Throws if j is out of range.
template <typename T>
T elementary_symmetric(std::span<const T> values, int j) {
  if (j < 0 || j > static_cast<int>(values.size()))
    throw std::invalid_argument("elementary_symmetric: index out of range");
  std::vector<T> e(static_cast<std::size_t>(j) + 1, T(0));
  e[0] = T(1);
  int used = 0;
  for (const T& v : values) {
    ++used;
    for (int k = std::min(j, used); k >= 1; --k) e[k] += v * e[k - 1];
  }
  return e[j];
}

// C_{l,m}(t) = prod_{j=l}^{m} (t - lambda_j), expanded exactly.
struct CoefficientPolynomial {
  int l = 0;
  int m = 0;
  std::vector<BigRational> coeffs;  // ascending powers of t, degree m-l+1

  bool all_integer() const;
  BigRational eval_exact(const BigRational& t) const;
  double eval(double t) const;
};

CoefficientPolynomial expand_C(int l, int m, const EigenSystem& eigs);

struct PoincareValue {
  double value = 0.0;
  bool equality = false;
};

// <prod_{j=l}^{m}(-Lap - lambda_j) F, F> = sum_{n>m} prod (lambda_n - lambda_j) |F_n|^2.
// Requires vanishing blocks below degree l; equality flag set when all blocks
// above degree m vanish.
PoincareValue poincare_form(const HarmonicSpectrum& F, const EigenSystem& eigs, int l, int m);

// Same value through the expanded coefficients and spectral powers
// <F, (-Lap)^k F>; agreement with poincare_form is a standing cross-check.
double poincare_form_via_coeffs(const HarmonicSpectrum& F, const EigenSystem& eigs, int l, int m);

/// <F, (-Lap)^k F> = sum_n lambda_n^k |F_n|^2
double spectral_moment(const HarmonicSpectrum& F, const EigenSystem& eigs, int k);

// P = prod_{n=1}^{m} (B - gamma_n) as a polynomial in B = -Lap - lambda_1,
// expanded exactly from the shifted eigenvalues.
struct ShiftedOperatorPolynomial {
  int m = 0;
  std::vector<BigRational> coeffs;  // ascending powers of B, degree m
};

ShiftedOperatorPolynomial expand_P_general_m(int m, const EigenSystem& eigs);

// Closed-form constants of the order-m theorem, sphere mode. Each is computed
// from the eigenvalue products and checked exactly against its factorial form;
// a mismatch is a library defect and throws std::logic_error.
//   coeff1 = prod_{j=1}^{m} lambda_j - lambda_1 prod_{j=2}^{m} gamma_j
//          = (d-1)^2 (m-1) (m-1)! (m+d-2)! / d!
//   coeff2 = lambda_1 prod_{j=2}^{m} gamma_j = (d-1) (m-1)! (m+d-1)! / d!
BigInt closed_form_coeff1(int m, int d);
BigInt closed_form_coeff2(int m, int d);

// Coefficients c_i (i = 1..m-2) of <Lap^i rho, rho> in the expanded order-m
// identity: c_i = sum_{l=i}^{m-2} sigma_{m-2-l}(Gamma) C(l,i) lambda_1^{l-i+2}.
// The overall sign (-1)^m is the caller's.
std::vector<BigInt> laplacian_power_coefficients(int m, int d);

}  // namespace quermass
