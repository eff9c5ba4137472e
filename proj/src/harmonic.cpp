#include "quermass/harmonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "quermass/alf.hpp"

namespace quermass {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

// cos(m*phi_j), sin(m*phi_j) tables for phi_j = 2pi j / n_phi, m = 0..mmax.
struct TrigTable {
  int n_phi = 0;
  int mmax = 0;
  std::vector<double> c, s;  // [m * n_phi + j]
  TrigTable(int n_phi_, int mmax_) : n_phi(n_phi_), mmax(mmax_) {
    c.resize(static_cast<std::size_t>(mmax + 1) * n_phi);
    s.resize(static_cast<std::size_t>(mmax + 1) * n_phi);
    for (int m = 0; m <= mmax; ++m)
      for (int j = 0; j < n_phi; ++j) {
        const double a = kTwoPi * m * j / n_phi;
        c[static_cast<std::size_t>(m) * n_phi + j] = std::cos(a);
        s[static_cast<std::size_t>(m) * n_phi + j] = std::sin(a);
      }
  }
  double cos_at(int m, int j) const { return c[static_cast<std::size_t>(m) * n_phi + j]; }
  double sin_at(int m, int j) const { return s[static_cast<std::size_t>(m) * n_phi + j]; }
};

}  // namespace

QuadratureGrid QuadratureGrid::circle(int n_angles) {
  if (n_angles < 1) throw std::invalid_argument("QuadratureGrid::circle: need n_angles >= 1");
  QuadratureGrid g;
  g.dim_ = 2;
  g.n_phi_ = n_angles;
  return g;
}

QuadratureGrid QuadratureGrid::sphere(int n_theta, int n_phi) {
  if (n_theta < 1 || n_phi < 1)
    throw std::invalid_argument("QuadratureGrid::sphere: need positive resolution");
  QuadratureGrid g;
  g.dim_ = 3;
  g.n_phi_ = n_phi;
  const auto gl = quad::gauss_legendre(n_theta);
  g.cos_theta_ = gl.x;
  g.theta_w_ = gl.w;
  g.sin_theta_.resize(gl.x.size());
  for (std::size_t i = 0; i < gl.x.size(); ++i)
    g.sin_theta_[i] = std::sqrt((1.0 - gl.x[i]) * (1.0 + gl.x[i]));
  return g;
}

QuadratureGrid QuadratureGrid::for_band_limit(int dim, int band_limit) {
  if (band_limit < 0) throw std::invalid_argument("for_band_limit: band_limit must be >= 0");
  if (dim == 2) return circle(std::max(8 * band_limit, 16));
  if (dim == 3) return sphere(2 * band_limit + 2, 4 * band_limit + 4);
  throw std::invalid_argument("for_band_limit: grids exist only for d = 2, 3");
}

std::size_t QuadratureGrid::size() const {
  if (dim_ == 2) return static_cast<std::size_t>(n_phi_);
  return cos_theta_.size() * static_cast<std::size_t>(n_phi_);
}

double QuadratureGrid::total_weight() const {
  if (dim_ == 2) return kTwoPi;
  double s = 0.0;
  for (double w : theta_w_) s += w;
  return s * kTwoPi;  // phi weights sum to 2pi exactly
}

int QuadratureGrid::max_band_limit() const {
  if (dim_ == 2) return (n_phi_ - 1) / 2;
  return std::min(n_theta() - 1, (n_phi_ - 1) / 2);
}

bool QuadratureGrid::same_layout(const QuadratureGrid& o) const {
  return dim_ == o.dim_ && n_phi_ == o.n_phi_ && cos_theta_.size() == o.cos_theta_.size();
}

double QuadratureGrid::angle(int j) const { return kTwoPi * j / n_phi_; }
double QuadratureGrid::theta(int i) const { return std::acos(cos_theta_[i]); }
double QuadratureGrid::phi(int j) const { return kTwoPi * j / n_phi_; }
double QuadratureGrid::phi_weight() const { return kTwoPi / n_phi_; }

double QuadratureGrid::node_weight(std::size_t node) const {
  if (dim_ == 2) return kTwoPi / n_phi_;
  return theta_w_[node / n_phi_] * phi_weight();
}

GridFunction::GridFunction(QuadratureGrid grid, std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (values_.size() != grid_.size())
    throw std::invalid_argument("GridFunction: value count does not match grid");
}

namespace {

HarmonicSpectrum forward_circle(const GridFunction& f, int N) {
  const auto& g = f.grid();
  const int M = g.n_angles();
  if (M < 2 * N + 1) throw std::invalid_argument("forward: circle grid too coarse for band limit");
  HarmonicSpectrum s(2, N);
  const double w = kTwoPi / M;
  const double inv_sqrt_2pi = 1.0 / std::sqrt(kTwoPi);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const TrigTable tt(M, N);
  long double c0 = 0.0L;
  for (int j = 0; j < M; ++j) c0 += f[j];
  s.coeff(0, 0) = static_cast<double>(c0) * w * inv_sqrt_2pi;
#pragma omp parallel for schedule(static)
  for (int n = 1; n <= N; ++n) {
    long double a = 0.0L, b = 0.0L;
    for (int j = 0; j < M; ++j) {
      a += f[j] * tt.cos_at(n, j);
      b += f[j] * tt.sin_at(n, j);
    }
    s.coeff(n, 0) = static_cast<double>(a) * w * inv_sqrt_pi;
    s.coeff(n, 1) = static_cast<double>(b) * w * inv_sqrt_pi;
  }
  return s;
}

GridFunction inverse_circle(const HarmonicSpectrum& s, const QuadratureGrid& g) {
  const int M = g.n_angles();
  const int N = s.band_limit();
  const double inv_sqrt_2pi = 1.0 / std::sqrt(kTwoPi);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const TrigTable tt(M, N);
  GridFunction f(g);
#pragma omp parallel for schedule(static)
  for (int j = 0; j < M; ++j) {
    long double v = s.coeff(0, 0) * inv_sqrt_2pi;
    for (int n = 1; n <= N; ++n)
      v += (s.coeff(n, 0) * tt.cos_at(n, j) + s.coeff(n, 1) * tt.sin_at(n, j)) * inv_sqrt_pi;
    f[j] = static_cast<double>(v);
  }
  return f;
}

HarmonicSpectrum forward_sphere(const GridFunction& f, int N) {
  const auto& g = f.grid();
  const int nt = g.n_theta(), np = g.n_phi();
  if (nt < N + 1 || np < 2 * N + 1)
    throw std::invalid_argument("forward: sphere grid too coarse for band limit");
  HarmonicSpectrum s(3, N);
  const double wphi = g.phi_weight();
  const TrigTable tt(np, N);

  // Stage 1: phi analysis per row.
  std::vector<double> Fc(static_cast<std::size_t>(nt) * (N + 1));
  std::vector<double> Fs(static_cast<std::size_t>(nt) * (N + 1));
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nt; ++i) {
    const double* fi = f.values().data() + static_cast<std::size_t>(i) * np;
    for (int m = 0; m <= N; ++m) {
      long double ac = 0.0L, as = 0.0L;
      for (int j = 0; j < np; ++j) {
        ac += fi[j] * tt.cos_at(m, j);
        as += fi[j] * tt.sin_at(m, j);
      }
      Fc[static_cast<std::size_t>(i) * (N + 1) + m] = static_cast<double>(ac) * wphi;
      Fs[static_cast<std::size_t>(i) * (N + 1) + m] = static_cast<double>(as) * wphi;
    }
  }

  // Stage 2: colatitude analysis, independent per order m.
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m <= N; ++m) {
    std::vector<double> row(static_cast<std::size_t>(N - m + 1));
    std::vector<long double> acc_c(row.size(), 0.0L), acc_s(row.size(), 0.0L);
    for (int i = 0; i < nt; ++i) {
      alf::normalized_row(m, N, g.cos_theta(i), row);
      const double wc = g.theta_weight(i) * Fc[static_cast<std::size_t>(i) * (N + 1) + m];
      const double ws = g.theta_weight(i) * Fs[static_cast<std::size_t>(i) * (N + 1) + m];
      for (int n = m; n <= N; ++n) {
        acc_c[n - m] += row[n - m] * wc;
        if (m > 0) acc_s[n - m] += row[n - m] * ws;
      }
    }
    const double scale = (m == 0) ? 1.0 : kSqrt2;
    for (int n = m; n <= N; ++n) {
      if (m == 0) {
        s.coeff(n, 0) = static_cast<double>(acc_c[n - m]);
      } else {
        s.coeff(n, 2 * m - 1) = static_cast<double>(acc_c[n - m]) * scale;
        s.coeff(n, 2 * m) = static_cast<double>(acc_s[n - m]) * scale;
      }
    }
  }
  return s;
}

GridFunction inverse_sphere(const HarmonicSpectrum& s, const QuadratureGrid& g) {
  const int nt = g.n_theta(), np = g.n_phi();
  const int N = s.band_limit();
  const TrigTable tt(np, N);

  // Stage 1: colatitude synthesis per order.
  std::vector<double> Ac(static_cast<std::size_t>(nt) * (N + 1), 0.0);
  std::vector<double> As(static_cast<std::size_t>(nt) * (N + 1), 0.0);
#pragma omp parallel for schedule(dynamic)
  for (int m = 0; m <= N; ++m) {
    std::vector<double> row(static_cast<std::size_t>(N - m + 1));
    const double scale = (m == 0) ? 1.0 : kSqrt2;
    for (int i = 0; i < nt; ++i) {
      alf::normalized_row(m, N, g.cos_theta(i), row);
      long double ac = 0.0L, as = 0.0L;
      for (int n = m; n <= N; ++n) {
        if (m == 0) {
          ac += s.coeff(n, 0) * row[n - m];
        } else {
          ac += s.coeff(n, 2 * m - 1) * row[n - m];
          as += s.coeff(n, 2 * m) * row[n - m];
        }
      }
      Ac[static_cast<std::size_t>(i) * (N + 1) + m] = static_cast<double>(ac) * scale;
      As[static_cast<std::size_t>(i) * (N + 1) + m] = static_cast<double>(as) * scale;
    }
  }

  // Stage 2: phi synthesis per row.
  GridFunction f(g);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < nt; ++i) {
    double* fi = f.values().data() + static_cast<std::size_t>(i) * np;
    for (int j = 0; j < np; ++j) {
      long double v = Ac[static_cast<std::size_t>(i) * (N + 1)];
      for (int m = 1; m <= N; ++m)
        v += Ac[static_cast<std::size_t>(i) * (N + 1) + m] * tt.cos_at(m, j) +
             As[static_cast<std::size_t>(i) * (N + 1) + m] * tt.sin_at(m, j);
      fi[j] = static_cast<double>(v);
    }
  }
  return f;
}

}  // namespace

HarmonicSpectrum forward(const GridFunction& f, int band_limit) {
  if (band_limit < 0) throw std::invalid_argument("forward: band_limit must be >= 0");
  if (f.grid().dim() == 2) return forward_circle(f, band_limit);
  if (f.grid().dim() == 3) return forward_sphere(f, band_limit);
  throw std::invalid_argument("forward: unsupported grid dimension");
}

GridFunction inverse(const HarmonicSpectrum& s, const QuadratureGrid& grid) {
  if (s.dim() != grid.dim()) throw std::invalid_argument("inverse: dimension mismatch");
  if (s.dim() == 2) return inverse_circle(s, grid);
  if (s.dim() == 3) return inverse_sphere(s, grid);
  throw std::invalid_argument("inverse: unsupported dimension");
}

double inner_product(const GridFunction& f, const GridFunction& g) {
  if (!f.grid().same_layout(g.grid()))
    throw std::invalid_argument("inner_product: grid mismatch");
  long double acc = 0.0L;
  const std::size_t n = f.values().size();
#pragma omp parallel for reduction(+ : acc) schedule(static)
  for (std::size_t i = 0; i < n; ++i)
    acc += static_cast<long double>(f.grid().node_weight(i)) * f[i] * g[i];
  return static_cast<double>(acc);
}

HarmonicSpectrum apply_laplacian(const HarmonicSpectrum& s, int power) {
  if (s.dim() < 2)
    throw std::invalid_argument("apply_laplacian: abstract spectrum needs an EigenSystem");
  return apply_laplacian(s, EigenSystem::sphere(s.dim(), std::max(1, s.band_limit())), power);
}

HarmonicSpectrum apply_laplacian(const HarmonicSpectrum& s, const EigenSystem& eigs, int power) {
  if (power < 0) throw std::invalid_argument("apply_laplacian: power must be >= 0");
  HarmonicSpectrum out = s;
  for (int n = 0; n <= out.band_limit(); ++n) {
    double mult = 1.0;
    for (int k = 0; k < power; ++k) mult *= -eigs.eigenvalue(n);
    for (double& c : out.block(n)) c *= mult;
  }
  return out;
}

double evaluate(const HarmonicSpectrum& s, double theta) {
  if (s.dim() != 2) throw std::invalid_argument("evaluate(theta): spectrum must have d = 2");
  double v = s.coeff(0, 0) / std::sqrt(kTwoPi);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  for (int n = 1; n <= s.band_limit(); ++n)
    v += (s.coeff(n, 0) * std::cos(n * theta) + s.coeff(n, 1) * std::sin(n * theta)) * inv_sqrt_pi;
  return v;
}

double evaluate(const HarmonicSpectrum& s, double theta, double phi) {
  if (s.dim() != 3) throw std::invalid_argument("evaluate(theta,phi): spectrum must have d = 3");
  const int N = s.band_limit();
  const double x = std::cos(theta);
  double v = 0.0;
  std::vector<double> row;
  for (int m = 0; m <= N; ++m) {
    row.resize(static_cast<std::size_t>(N - m + 1));
    alf::normalized_row(m, N, x, row);
    const double cm = std::cos(m * phi), sm = std::sin(m * phi);
    for (int n = m; n <= N; ++n) {
      if (m == 0)
        v += s.coeff(n, 0) * row[n - m];
      else
        v += kSqrt2 * row[n - m] * (s.coeff(n, 2 * m - 1) * cm + s.coeff(n, 2 * m) * sm);
    }
  }
  return v;
}

double HessianField::min_eigenvalue(std::size_t node) const {
  if (dim == 2) return a11[node];
  const double tr = a11[node] + a22[node];
  const double det = a11[node] * a22[node] - a12[node] * a12[node];
  const double disc = std::sqrt(std::max(0.0, tr * tr - 4.0 * det));
  return 0.5 * (tr - disc);
}

double HessianField::min_eigenvalue() const {
  double mn = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a11.size(); ++i) mn = std::min(mn, min_eigenvalue(i));
  return mn;
}

HessianField surface_gradient_hessian(const HarmonicSpectrum& s, const QuadratureGrid& grid) {
  if (s.dim() != grid.dim())
    throw std::invalid_argument("surface_gradient_hessian: dimension mismatch");
  HessianField out;
  out.dim = s.dim();
  if (s.dim() == 2) {
    // h + h'' is the block multiplier 1 - n^2.
    HarmonicSpectrum scaled = s;
    for (int n = 0; n <= scaled.band_limit(); ++n)
      for (double& c : scaled.block(n)) c *= 1.0 - static_cast<double>(n) * n;
    out.a11 = inverse(scaled, grid).values();
    return out;
  }
  if (s.dim() != 3) throw std::invalid_argument("surface_gradient_hessian: only d = 2, 3");

  const int N = s.band_limit();
  const int nt = grid.n_theta(), np = grid.n_phi();
  const TrigTable tt(np, N);
  out.a11.assign(grid.size(), 0.0);
  out.a12.assign(grid.size(), 0.0);
  out.a22.assign(grid.size(), 0.0);

#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < nt; ++i) {
    const double x = grid.cos_theta(i);
    const double st = grid.sin_theta(i);
    const double cot = x / st;
    std::vector<double> row, drow;
    // Per-order colatitude sums: value, d/dtheta, and Laplacian-weighted.
    std::vector<double> Sc(N + 1, 0.0), Ss(N + 1, 0.0);
    std::vector<double> Dc(N + 1, 0.0), Ds(N + 1, 0.0);
    std::vector<double> Lc(N + 1, 0.0), Ls(N + 1, 0.0);
    for (int m = 0; m <= N; ++m) {
      row.resize(static_cast<std::size_t>(N - m + 1));
      drow.resize(row.size());
      alf::normalized_row(m, N, x, row);
      alf::normalized_row_dtheta(m, N, x, st, row, drow);
      const double scale = (m == 0) ? 1.0 : kSqrt2;
      long double sc = 0, ss = 0, dc = 0, ds = 0, lc = 0, ls = 0;
      for (int n = m; n <= N; ++n) {
        const double lam = static_cast<double>(sphere_eigenvalue(n, 3));
        const double cc = (m == 0) ? s.coeff(n, 0) : s.coeff(n, 2 * m - 1);
        const double cs = (m == 0) ? 0.0 : s.coeff(n, 2 * m);
        sc += cc * row[n - m];
        ss += cs * row[n - m];
        dc += cc * drow[n - m];
        ds += cs * drow[n - m];
        lc += lam * cc * row[n - m];
        ls += lam * cs * row[n - m];
      }
      Sc[m] = static_cast<double>(sc) * scale;
      Ss[m] = static_cast<double>(ss) * scale;
      Dc[m] = static_cast<double>(dc) * scale;
      Ds[m] = static_cast<double>(ds) * scale;
      Lc[m] = static_cast<double>(lc) * scale;
      Ls[m] = static_cast<double>(ls) * scale;
    }
    for (int j = 0; j < np; ++j) {
      double h = 0, ht = 0, hp = 0, htp = 0, hpp = 0, lap = 0;
      for (int m = 0; m <= N; ++m) {
        const double c = tt.cos_at(m, j), sn = tt.sin_at(m, j);
        h += Sc[m] * c + Ss[m] * sn;
        ht += Dc[m] * c + Ds[m] * sn;
        hp += m * (-Sc[m] * sn + Ss[m] * c);
        htp += m * (-Dc[m] * sn + Ds[m] * c);
        hpp += -static_cast<double>(m) * m * (Sc[m] * c + Ss[m] * sn);
        lap += Lc[m] * c + Ls[m] * sn;  // sum lambda_n h_n = -Lap h
      }
      const double htt = -lap - cot * ht - hpp / (st * st);
      const std::size_t node = static_cast<std::size_t>(i) * np + j;
      out.a11[node] = h + htt;
      out.a12[node] = (htp - cot * hp) / st;
      out.a22[node] = h + hpp / (st * st) + cot * ht;
    }
  }
  return out;
}

}  // namespace quermass
