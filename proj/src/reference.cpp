#include "quermass/reference.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "quermass/alf.hpp"

namespace quermass::reference {

namespace {

// Real basis function at a node, by slot.
double basis_circle(int n, int slot, double theta) {
  if (n == 0) return 1.0 / std::sqrt(2.0 * std::numbers::pi);
  const double t = (slot == 0) ? std::cos(n * theta) : std::sin(n * theta);
  return t / std::sqrt(std::numbers::pi);
}

double basis_sphere(int n, int slot, double x, double phi) {
  if (slot == 0) return alf::normalized(n, 0, x);
  const int m = (slot + 1) / 2;
  const double p = alf::normalized(n, m, x);
  const double t = (slot % 2 == 1) ? std::cos(m * phi) : std::sin(m * phi);
  return std::numbers::sqrt2 * p * t;
}

}  // namespace

HarmonicSpectrum forward_direct(const GridFunction& f, int band_limit) {
  const auto& g = f.grid();
  HarmonicSpectrum s(g.dim(), band_limit);
  for (int n = 0; n <= band_limit; ++n) {
    auto& block = s.block(n);
    for (std::size_t slot = 0; slot < block.size(); ++slot) {
      long double acc = 0.0L;
      for (std::size_t node = 0; node < g.size(); ++node) {
        double y;
        if (g.dim() == 2) {
          y = basis_circle(n, static_cast<int>(slot), g.angle(static_cast<int>(node)));
        } else {
          const int i = static_cast<int>(node) / g.n_phi();
          const int j = static_cast<int>(node) % g.n_phi();
          y = basis_sphere(n, static_cast<int>(slot), g.cos_theta(i), g.phi(j));
        }
        acc += g.node_weight(node) * f[node] * y;
      }
      block[slot] = static_cast<double>(acc);
    }
  }
  return s;
}

GridFunction inverse_direct(const HarmonicSpectrum& s, const QuadratureGrid& grid) {
  if (s.dim() != grid.dim()) throw std::invalid_argument("inverse_direct: dimension mismatch");
  GridFunction f(grid);
  for (std::size_t node = 0; node < grid.size(); ++node) {
    long double acc = 0.0L;
    for (int n = 0; n <= s.band_limit(); ++n) {
      const auto& block = s.block(n);
      for (std::size_t slot = 0; slot < block.size(); ++slot) {
        if (block[slot] == 0.0) continue;
        double y;
        if (grid.dim() == 2) {
          y = basis_circle(n, static_cast<int>(slot), grid.angle(static_cast<int>(node)));
        } else {
          const int i = static_cast<int>(node) / grid.n_phi();
          const int j = static_cast<int>(node) % grid.n_phi();
          y = basis_sphere(n, static_cast<int>(slot), grid.cos_theta(i), grid.phi(j));
        }
        acc += block[slot] * y;
      }
    }
    f[node] = static_cast<double>(acc);
  }
  return f;
}

}  // namespace quermass::reference
