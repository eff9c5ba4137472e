#include "quermass/convex.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quermass {

double unit_sphere_area(int dim) {
  if (dim < 2) throw std::invalid_argument("unit_sphere_area: dim must be >= 2");
  return 2.0 * std::pow(std::numbers::pi, dim / 2.0) / std::tgamma(dim / 2.0);
}

double unit_ball_volume(int dim) { return unit_sphere_area(dim) / dim; }

ConvexityCertificate certify_convex(const HarmonicSpectrum& h, const QuadratureGrid& grid) {
  if (h.dim() != 2 && h.dim() != 3)
    throw std::invalid_argument("certify_convex: certification exists only for d = 2, 3");
  const HessianField A = surface_gradient_hessian(h, grid);
  ConvexityCertificate cert;
  cert.min_eigenvalue = A.min_eigenvalue();
  cert.grid_resolution = (grid.dim() == 2) ? grid.n_angles() : grid.n_theta();
  return cert;
}

SupportBody make_body(HarmonicSpectrum h, bool certify) {
  SupportBody body;
  const int d = h.dim();
  body.support = std::move(h);
  if (certify && (d == 2 || d == 3)) {
    const auto grid = QuadratureGrid::for_band_limit(d, body.support.band_limit());
    body.certificate = certify_convex(body.support, grid);
  }
  return body;
}

std::vector<double> degree1_from_vector(std::span<const double> v, int dim) {
  if (static_cast<int>(v.size()) != dim)
    throw std::invalid_argument("degree1_from_vector: vector size must equal dim");
  if (dim == 2) {
    const double sp = std::sqrt(std::numbers::pi);
    return {v[0] * sp, v[1] * sp};
  }
  if (dim == 3) {
    // theta = (sin t cos p, sin t sin p, cos t); in this basis
    // x = -sqrt(4pi/3) Y_{1,1}^cos, y = -sqrt(4pi/3) Y_{1,1}^sin, z = sqrt(4pi/3) Y_{1,0}.
    const double s = std::sqrt(4.0 * std::numbers::pi / 3.0);
    return {v[2] * s, -v[0] * s, -v[1] * s};
  }
  // d >= 4: slot j is theta_j * sqrt(d/|S^{d-1}|)
  const double s = std::sqrt(unit_sphere_area(dim) / dim);
  std::vector<double> block(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) block[j] = v[j] * s;
  return block;
}

std::array<double, 3> vector_from_degree1(std::span<const double> block1, int dim) {
  std::array<double, 3> z{0.0, 0.0, 0.0};
  if (dim == 2) {
    const double isp = 1.0 / std::sqrt(std::numbers::pi);
    if (block1.size() > 0) z[0] = block1[0] * isp;
    if (block1.size() > 1) z[1] = block1[1] * isp;
    return z;
  }
  if (dim == 3) {
    const double s = std::sqrt(3.0 / (4.0 * std::numbers::pi));
    if (block1.size() > 0) z[2] = block1[0] * s;
    if (block1.size() > 1) z[0] = -block1[1] * s;
    if (block1.size() > 2) z[1] = -block1[2] * s;
    return z;
  }
  const double s = std::sqrt(static_cast<double>(dim) / unit_sphere_area(dim));
  for (std::size_t j = 0; j < std::min<std::size_t>(3, block1.size()); ++j) z[j] = block1[j] * s;
  return z;
}

std::array<double, 3> steiner_point(const SupportBody& body) {
  const auto& h = body.support;
  if (h.band_limit() < 1) return {0.0, 0.0, 0.0};
  return vector_from_degree1(h.block(1), h.dim());
}

HarmonicSpectrum steiner_ball_support(const SupportBody& body) {
  const auto& h = body.support;
  HarmonicSpectrum b(h.dim(), 1);
  b.block(0) = h.block(0);
  if (h.band_limit() >= 1) b.block(1) = h.block(1);
  return b;
}

double delta2(const HarmonicSpectrum& hK, const HarmonicSpectrum& hL) {
  if (hK.dim() != hL.dim()) throw std::invalid_argument("delta2: dimension mismatch");
  HarmonicSpectrum diff = hK - hL;
  return std::sqrt(diff.total_norm_sq());
}

double delta2(const SupportBody& K, const SupportBody& L) {
  return delta2(K.support, L.support);
}

CurvatureIntegrals curvature_integrals(const SupportBody& body) {
  const auto& h = body.support;
  const int d = h.dim();
  if (d < 2) throw std::invalid_argument("curvature_integrals: body needs a dimension");
  const double area = unit_sphere_area(d);
  CurvatureIntegrals out;
  out.int_H_dm2 = std::sqrt(area) * h.coeff(0, 0);
  long double acc_lower = 0.0L, acc_ros = 0.0L;
  for (int n = 0; n <= h.band_limit(); ++n) {
    const double lam = static_cast<double>(sphere_eigenvalue(n, d));
    const double nsq = h.block_norm_sq(n);
    acc_lower += (static_cast<long double>(d - 1) - lam) * nsq;
    const long double r = 1.0L - lam / (d - 1);
    acc_ros += r * r * nsq;
  }
  out.int_H_dm3 = static_cast<double>(acc_lower) / (d - 1);
  out.int_ros = static_cast<double>(acc_ros);
  return out;
}

double mixed_volume(const SupportBody& K, const SupportBody& L) {
  if (K.dim() != L.dim()) throw std::invalid_argument("mixed_volume: dimension mismatch");
  const int d = K.dim();
  long double acc = 0.0L;
  const int nmax = std::min(K.support.band_limit(), L.support.band_limit());
  for (int n = 0; n <= nmax; ++n) {
    const auto& bK = K.support.block(n);
    const auto& bL = L.support.block(n);
    long double dp = 0.0L;
    for (std::size_t i = 0; i < std::min(bK.size(), bL.size()); ++i)
      dp += static_cast<long double>(bK[i]) * bL[i];
    acc += (static_cast<long double>(d - 1) - static_cast<double>(sphere_eigenvalue(n, d))) * dp;
  }
  return static_cast<double>(acc) / (static_cast<double>(d) * (d - 1));
}

Quermassintegrals quermassintegrals(const SupportBody& body) {
  const auto ci = curvature_integrals(body);
  const int d = body.dim();
  return {ci.int_H_dm2 / d, ci.int_H_dm3 / d};
}

double mean_width(const SupportBody& body) {
  return 2.0 * body.support.coeff(0, 0) / std::sqrt(unit_sphere_area(body.dim()));
}

GeometricSummary geometric_summary(const SupportBody& body) {
  GeometricSummary g;
  const auto ci = curvature_integrals(body);
  g.int_H_dm2 = ci.int_H_dm2;
  g.int_H_dm3 = ci.int_H_dm3;
  g.int_ros = ci.int_ros;
  g.mean_width = mean_width(body);
  g.steiner_point = steiner_point(body);
  long double tail = 0.0L;
  for (int n = 2; n <= body.support.band_limit(); ++n) tail += body.support.block_norm_sq(n);
  g.delta2_steiner = std::sqrt(static_cast<double>(tail));
  const auto w = quermassintegrals(body);
  g.w_dm1 = w.w_dm1;
  g.w_dm2 = w.w_dm2;
  return g;
}

HarmonicSpectrum rho_spectrum(const HarmonicSpectrum& h) {
  const int d = h.dim();
  if (d < 2) throw std::invalid_argument("rho_spectrum: spectrum needs a sphere dimension");
  HarmonicSpectrum rho = h;
  for (int n = 0; n <= rho.band_limit(); ++n) {
    const double mult = 1.0 - static_cast<double>(sphere_eigenvalue(n, d)) / (d - 1);
    for (double& c : rho.block(n)) c *= mult;
  }
  return rho;
}

}  // namespace quermass
