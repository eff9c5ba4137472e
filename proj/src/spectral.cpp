#include "quermass/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace quermass {

long long sphere_eigenvalue(int degree, int dim) {
  if (degree < 0) throw std::invalid_argument("sphere_eigenvalue: degree must be >= 0");
  if (dim < 2) throw std::invalid_argument("sphere_eigenvalue: dim must be >= 2");
  return static_cast<long long>(degree) * (degree + dim - 2);
}

EigenSystem EigenSystem::sphere(int dim, int max_degree) {
  if (dim < 2) throw std::invalid_argument("EigenSystem::sphere: dim must be >= 2");
  if (max_degree < 1) throw std::invalid_argument("EigenSystem::sphere: max_degree must be >= 1");
  EigenSystem e;
  e.dim_ = dim;
  e.max_degree_ = max_degree;
  return e;
}

EigenSystem EigenSystem::from_values(std::vector<double> eigenvalues) {
  if (eigenvalues.size() < 2)
    throw std::invalid_argument("EigenSystem::from_values: need at least lambda_0, lambda_1");
  if (eigenvalues[0] != 0.0)
    throw std::invalid_argument("EigenSystem::from_values: lambda_0 must be 0");
  for (std::size_t i = 1; i < eigenvalues.size(); ++i)
    if (!(eigenvalues[i] > eigenvalues[i - 1]))
      throw std::invalid_argument("EigenSystem::from_values: sequence must be strictly increasing");
  EigenSystem e;
  e.dim_ = 0;
  e.max_degree_ = static_cast<int>(eigenvalues.size()) - 1;
  e.values_ = std::move(eigenvalues);
  return e;
}

double EigenSystem::eigenvalue(int n) const {
  if (is_sphere()) return static_cast<double>(sphere_eigenvalue(n, dim_));
  if (n < 0 || n > max_degree_)
    throw std::out_of_range("EigenSystem::eigenvalue: degree beyond stored sequence");
  return values_[static_cast<std::size_t>(n)];
}

BigRational EigenSystem::eigenvalue_exact(int n) const {
  if (is_sphere()) return BigRational(sphere_eigenvalue(n, dim_));
  return BigRational(eigenvalue(n));  // exact binary rational of the double
}

BigRational EigenSystem::gamma_exact(int n) const {
  return eigenvalue_exact(n) - eigenvalue_exact(1);
}

HarmonicSpectrum::HarmonicSpectrum(int dim, int band_limit) : dim_(dim) {
  if (dim != 0 && dim < 2) throw std::invalid_argument("HarmonicSpectrum: dim must be 0 or >= 2");
  if (band_limit < 0) throw std::invalid_argument("HarmonicSpectrum: band_limit must be >= 0");
  blocks_.resize(static_cast<std::size_t>(band_limit) + 1);
  for (int n = 0; n <= band_limit; ++n)
    blocks_[n].assign(static_cast<std::size_t>(default_block_size(dim, n)), 0.0);
}

HarmonicSpectrum HarmonicSpectrum::from_block_norms(std::span<const double> norms_sq) {
  HarmonicSpectrum s(0, norms_sq.empty() ? 0 : static_cast<int>(norms_sq.size()) - 1);
  for (std::size_t n = 0; n < norms_sq.size(); ++n) {
    if (norms_sq[n] < 0.0)
      throw std::invalid_argument("HarmonicSpectrum::from_block_norms: negative squared norm");
    s.blocks_[n][0] = std::sqrt(norms_sq[n]);
  }
  return s;
}

int HarmonicSpectrum::default_block_size(int dim, int degree) {
  if (dim == 2) return degree == 0 ? 1 : 2;
  if (dim == 3) return 2 * degree + 1;
  return 1;  // abstract / general d: one representative coefficient
}

double HarmonicSpectrum::block_norm_sq(int n) const {
  if (n < 0 || n > band_limit()) return 0.0;
  long double s = 0.0L;
  for (double c : blocks_[static_cast<std::size_t>(n)]) s += static_cast<long double>(c) * c;
  return static_cast<double>(s);
}

double HarmonicSpectrum::total_norm_sq() const {
  long double s = 0.0L;
  for (int n = 0; n <= band_limit(); ++n) s += block_norm_sq(n);
  return static_cast<double>(s);
}

bool HarmonicSpectrum::block_vanishes(int n, double rel_tol) const {
  return block_norm_sq(n) <= rel_tol * total_norm_sq();
}

int HarmonicSpectrum::significant_degree(double rel_tol) const {
  for (int n = band_limit(); n >= 0; --n)
    if (!block_vanishes(n, rel_tol)) return n;
  return -1;
}

double HarmonicSpectrum::tail_fraction_outside(int lo, int hi) const {
  const double total = total_norm_sq();
  if (total == 0.0) return 0.0;
  long double outside = 0.0L;
  for (int n = 0; n <= band_limit(); ++n)
    if (n < lo || n > hi) outside += block_norm_sq(n);
  return static_cast<double>(outside / total);
}

void HarmonicSpectrum::ensure_degree(int n) {
  while (band_limit() < n) {
    const int next = band_limit() + 1;
    blocks_.emplace_back(static_cast<std::size_t>(default_block_size(dim_, next)), 0.0);
  }
}

namespace {

void align_blocks(std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0.0);
}

}  // namespace

HarmonicSpectrum& HarmonicSpectrum::operator+=(const HarmonicSpectrum& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("HarmonicSpectrum: dimension mismatch");
  ensure_degree(o.band_limit());
  for (int n = 0; n <= o.band_limit(); ++n) {
    align_blocks(blocks_[n], o.blocks_[n]);
    for (std::size_t k = 0; k < o.blocks_[n].size(); ++k) blocks_[n][k] += o.blocks_[n][k];
  }
  return *this;
}

HarmonicSpectrum& HarmonicSpectrum::operator-=(const HarmonicSpectrum& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("HarmonicSpectrum: dimension mismatch");
  ensure_degree(o.band_limit());
  for (int n = 0; n <= o.band_limit(); ++n) {
    align_blocks(blocks_[n], o.blocks_[n]);
    for (std::size_t k = 0; k < o.blocks_[n].size(); ++k) blocks_[n][k] -= o.blocks_[n][k];
  }
  return *this;
}

HarmonicSpectrum& HarmonicSpectrum::operator*=(double s) {
  for (auto& b : blocks_)
    for (double& c : b) c *= s;
  return *this;
}

double dot(const HarmonicSpectrum& a, const HarmonicSpectrum& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dot: dimension mismatch");
  long double s = 0.0L;
  const int nmax = std::min(a.band_limit(), b.band_limit());
  for (int n = 0; n <= nmax; ++n) {
    const auto& ba = a.blocks_[n];
    const auto& bb = b.blocks_[n];
    const std::size_t k = std::min(ba.size(), bb.size());
    for (std::size_t i = 0; i < k; ++i) s += static_cast<long double>(ba[i]) * bb[i];
  }
  return static_cast<double>(s);
}

bool CoefficientPolynomial::all_integer() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const BigRational& c) { return denominator(c) == 1; });
}

BigRational CoefficientPolynomial::eval_exact(const BigRational& t) const {
  BigRational v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
  return v;
}

double CoefficientPolynomial::eval(double t) const {
  return static_cast<double>(eval_exact(BigRational(t)));
}

CoefficientPolynomial expand_C(int l, int m, const EigenSystem& eigs) {
  if (l < 1 || m < l) throw std::invalid_argument("expand_C: need 1 <= l <= m");
  if (m > eigs.max_degree()) throw std::invalid_argument("expand_C: m beyond eigenvalue table");
  CoefficientPolynomial p;
  p.l = l;
  p.m = m;
  p.coeffs.assign(1, BigRational(1));
  for (int j = l; j <= m; ++j) {
    const BigRational root = eigs.eigenvalue_exact(j);
    std::vector<BigRational> next(p.coeffs.size() + 1, BigRational(0));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= root * p.coeffs[k];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

namespace {

void check_window(const HarmonicSpectrum& F, const EigenSystem& eigs, int l, int m) {
  if (l < 1 || m < l) throw std::invalid_argument("poincare_form: need 1 <= l <= m");
  if (m > eigs.max_degree()) throw std::invalid_argument("poincare_form: m beyond eigenvalue table");
  if (F.band_limit() < m) throw std::invalid_argument("poincare_form: band limit below m");
  if (F.dim() != 0 && eigs.is_sphere() && F.dim() != eigs.dim())
    throw std::invalid_argument("poincare_form: spectrum/eigensystem dimension mismatch");
  for (int n = 0; n < l; ++n)
    if (!F.block_vanishes(n))
      throw std::invalid_argument("poincare_form: nonzero block below degree l");
}

}  // namespace

PoincareValue poincare_form(const HarmonicSpectrum& F, const EigenSystem& eigs, int l, int m) {
  check_window(F, eigs, l, m);
  PoincareValue out;
  long double acc = 0.0L;
  bool equality = true;
  for (int n = m + 1; n <= F.band_limit(); ++n) {
    const double nsq = F.block_norm_sq(n);
    if (!F.block_vanishes(n)) equality = false;
    long double prod = nsq;
    for (int j = l; j <= m; ++j) prod *= eigs.eigenvalue(n) - eigs.eigenvalue(j);
    acc += prod;
  }
  out.value = static_cast<double>(acc);
  out.equality = equality;
  return out;
}

double poincare_form_via_coeffs(const HarmonicSpectrum& F, const EigenSystem& eigs, int l, int m) {
  check_window(F, eigs, l, m);
  const CoefficientPolynomial C = expand_C(l, m, eigs);
  long double acc = 0.0L;
  for (std::size_t k = 0; k < C.coeffs.size(); ++k)
    acc += static_cast<long double>(static_cast<double>(C.coeffs[k])) *
           spectral_moment(F, eigs, static_cast<int>(k));
  return static_cast<double>(acc);
}

double spectral_moment(const HarmonicSpectrum& F, const EigenSystem& eigs, int k) {
  if (k < 0) throw std::invalid_argument("spectral_moment: power must be >= 0");
  long double acc = 0.0L;
  for (int n = 0; n <= F.band_limit(); ++n) {
    long double term = F.block_norm_sq(n);
    if (term == 0.0L) continue;
    const long double lam = eigs.eigenvalue(n);
    for (int i = 0; i < k; ++i) term *= lam;
    acc += term;
  }
  return static_cast<double>(acc);
}

ShiftedOperatorPolynomial expand_P_general_m(int m, const EigenSystem& eigs) {
  if (m < 2) throw std::invalid_argument("expand_P_general_m: need m >= 2");
  if (m > eigs.max_degree())
    throw std::invalid_argument("expand_P_general_m: m beyond eigenvalue table");
  ShiftedOperatorPolynomial p;
  p.m = m;
  p.coeffs.assign(1, BigRational(1));
  for (int n = 1; n <= m; ++n) {
    const BigRational root = eigs.gamma_exact(n);
    std::vector<BigRational> next(p.coeffs.size() + 1, BigRational(0));
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
      next[k + 1] += p.coeffs[k];
      next[k] -= root * p.coeffs[k];
    }
    p.coeffs = std::move(next);
  }
  return p;
}

namespace {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) {
    b *= n - k + i;
    b /= i;
  }
  return b;
}

void require_order_params(int m, int d, const char* who) {
  if (m < 2) throw std::invalid_argument(std::string(who) + ": need m >= 2");
  if (d < 2) throw std::invalid_argument(std::string(who) + ": need d >= 2");
}

}  // namespace

BigInt closed_form_coeff1(int m, int d) {
  require_order_params(m, d, "closed_form_coeff1");
  BigInt prod_lambda = 1, prod_gamma = 1;
  for (int j = 1; j <= m; ++j) prod_lambda *= sphere_eigenvalue(j, d);
  for (int j = 2; j <= m; ++j)
    prod_gamma *= sphere_eigenvalue(j, d) - sphere_eigenvalue(1, d);
  const BigInt direct = prod_lambda - BigInt(sphere_eigenvalue(1, d)) * prod_gamma;
  const BigInt num =
      BigInt(d - 1) * (d - 1) * (m - 1) * factorial(m - 1) * factorial(m + d - 2);
  if (num % factorial(d) != 0 || direct != num / factorial(d))
    throw std::logic_error("closed_form_coeff1: factorial identity violated");
  return direct;
}

BigInt closed_form_coeff2(int m, int d) {
  require_order_params(m, d, "closed_form_coeff2");
  BigInt prod_gamma = 1;
  for (int j = 2; j <= m; ++j)
    prod_gamma *= sphere_eigenvalue(j, d) - sphere_eigenvalue(1, d);
  const BigInt direct = BigInt(sphere_eigenvalue(1, d)) * prod_gamma;
  const BigInt num = BigInt(d - 1) * factorial(m - 1) * factorial(m + d - 1);
  if (num % factorial(d) != 0 || direct != num / factorial(d))
    throw std::logic_error("closed_form_coeff2: factorial identity violated");
  return direct;
}

std::vector<BigInt> laplacian_power_coefficients(int m, int d) {
  require_order_params(m, d, "laplacian_power_coefficients");
  std::vector<BigInt> gammas;
  for (int j = 1; j <= m; ++j)
    gammas.push_back(BigInt(sphere_eigenvalue(j, d) - sphere_eigenvalue(1, d)));
  const BigInt lambda1 = sphere_eigenvalue(1, d);
  std::vector<BigInt> c;
  for (int i = 1; i <= m - 2; ++i) {
    BigInt ci = 0;
    for (int l = i; l <= m - 2; ++l) {
      BigInt pw = 1;
      for (int p = 0; p < l - i + 2; ++p) pw *= lambda1;
      ci += elementary_symmetric(std::span<const BigInt>(gammas), m - 2 - l) * binomial(l, i) * pw;
    }
    c.push_back(ci);
  }
  return c;
}

}  // namespace quermass
