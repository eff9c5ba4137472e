#pragma once

// Normalized associated Legendre functions and Gauss-Legendre rules, the
// colatitude machinery behind the S^2 transforms. No external
// special-function dependency; standard stable recurrences.

#include <span>
#include <vector>

namespace quermass::alf {

// P~_n^m(x) = sqrt((2n+1)/(4pi) (n-m)!/(n+m)!) P_n^m(x), Condon-Shortley
// phase included, so that Y_{n,0} = P~_n^0 and Y_{n,m}^{cos/sin} =
// sqrt(2) P~_n^m(cos theta) cos/sin(m phi) are L2-orthonormal on S^2.

/// Fills out[k] = P~_{m+k}^m(x) for k = 0..nmax-m.
void normalized_row(int m, int nmax, double x, std::span<double> out);

/// Single value P~_n^m(x).
double normalized(int n, int m, double x);

// d/dtheta P~_n^m(cos theta) = (n x P~_n^m - a_{n,m} P~_{n-1}^m)/sin theta,
// a_{n,m} = sqrt((n^2-m^2)(2n+1)/(2n-1)). Requires sin theta > 0.
void normalized_row_dtheta(int m, int nmax, double x, double sin_theta,
                           std::span<const double> row, std::span<double> out);

}  // namespace quermass::alf

namespace quermass::quad {

struct GaussLegendre {
  std::vector<double> x;  // nodes in (-1, 1), ascending
  std::vector<double> w;  // weights, sum = 2
};

/// n-point rule, exact for polynomials of degree <= 2n-1.
GaussLegendre gauss_legendre(int n);

}  // namespace quermass::quad
