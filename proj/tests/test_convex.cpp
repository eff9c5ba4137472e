#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "quermass/convex.hpp"
#include "test_support.hpp"

using namespace quermass;

namespace {

constexpr double kPi = std::numbers::pi;

SupportBody ball(int d, double R, int band = 0) {
  HarmonicSpectrum h(d, band);
  h.coeff(0, 0) = R * std::sqrt(unit_sphere_area(d));
  return make_body(std::move(h));
}

SupportBody perturbed_ball(int d, double R, int degree, int slot, double eps) {
  HarmonicSpectrum h(d, degree);
  h.coeff(0, 0) = R * std::sqrt(unit_sphere_area(d));
  h.coeff(degree, slot) = eps;
  return make_body(std::move(h));
}

}  // namespace

TEST_CASE("area and volume constants") {
  CHECK(rel_diff(unit_sphere_area(2), 2.0 * kPi) < 1e-15);
  CHECK(rel_diff(unit_sphere_area(3), 4.0 * kPi) < 1e-15);
  CHECK(rel_diff(unit_ball_volume(2), kPi) < 1e-15);
  CHECK(rel_diff(unit_ball_volume(3), 4.0 * kPi / 3.0) < 1e-15);
  CHECK(rel_diff(unit_sphere_area(4), 2.0 * kPi * kPi) < 1e-14);
}

TEST_CASE("degree-1 block round trip against quadrature") {
  // the block <-> vector maps must be mutually inverse and match the
  // transform conventions: sample v.theta, forward, read the block
  for (int d : {2, 3}) {
    const std::vector<double> v =
        (d == 2) ? std::vector<double>{0.3, -0.2} : std::vector<double>{0.3, -0.2, 0.45};
    const auto block = degree1_from_vector(v, d);
    const auto back = vector_from_degree1(block, d);
    for (int k = 0; k < d; ++k) CHECK(rel_diff(back[k], v[k]) < 1e-14);

    const auto grid = QuadratureGrid::for_band_limit(d, 4);
    GridFunction f(grid);
    if (d == 2) {
      for (int j = 0; j < grid.n_angles(); ++j)
        f[j] = v[0] * std::cos(grid.angle(j)) + v[1] * std::sin(grid.angle(j));
    } else {
      for (int i = 0; i < grid.n_theta(); ++i)
        for (int j = 0; j < grid.n_phi(); ++j) {
          const double st = grid.sin_theta(i);
          f[static_cast<std::size_t>(i) * grid.n_phi() + j] =
              v[0] * st * std::cos(grid.phi(j)) + v[1] * st * std::sin(grid.phi(j)) +
              v[2] * grid.cos_theta(i);
        }
    }
    const auto s = forward(f, 4);
    for (std::size_t k = 0; k < block.size(); ++k) CHECK(std::abs(s.coeff(1, k) - block[k]) < 1e-12);
  }
}

TEST_CASE("convexity certification") {
  SUBCASE("unit ball has min eigenvalue 1") {
    const auto b = ball(3, 1.0);
    REQUIRE(b.certificate.has_value());
    CHECK(rel_diff(b.certificate->min_eigenvalue, 1.0) < 1e-11);
  }
  SUBCASE("small degree-2 bump on the sphere stays convex") {
    const auto b = perturbed_ball(3, 1.0, 2, 0, 0.05);
    REQUIRE(b.certificate.has_value());
    CHECK(b.certificate->positive());
  }
  SUBCASE("large cos(2t) bump on the circle is not convex") {
    HarmonicSpectrum h(2, 2);
    h.coeff(0, 0) = std::sqrt(2.0 * kPi);
    h.coeff(2, 0) = 0.5 * std::sqrt(kPi);  // h = 1 + 0.5 cos 2t
    const auto grid = QuadratureGrid::for_band_limit(2, 2);
    const auto cert = certify_convex(h, grid);
    CHECK(cert.min_eigenvalue < 0.0);
    CHECK(cert.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-10));  // 1 - 1.5
  }
  SUBCASE("certificate scales with the body") {
    std::mt19937 rng(44);
    const auto body = random_convex_body(rng, 3, 6, 6, 0.3);
    const double t = 2.75;
    HarmonicSpectrum scaled = body.support * t;
    const auto grid = QuadratureGrid::for_band_limit(3, body.support.band_limit());
    const auto c1 = certify_convex(body.support, grid);
    const auto c2 = certify_convex(scaled, grid);
    CHECK(rel_diff(c2.min_eigenvalue, t * c1.min_eigenvalue) < 1e-10);
  }
  SUBCASE("d >= 4 carries no certificate") {
    HarmonicSpectrum h(5, 0);
    h.coeff(0, 0) = std::sqrt(unit_sphere_area(5));
    const auto body = make_body(std::move(h));
    CHECK_FALSE(body.certificate.has_value());
    const auto grid = QuadratureGrid::for_band_limit(3, 2);
    CHECK_THROWS_AS(certify_convex(body.support, grid), std::invalid_argument);
  }
}

TEST_CASE("steiner point") {
  SUBCASE("centered ball") {
    const auto z = steiner_point(ball(3, 2.0));
    CHECK(std::abs(z[0]) < 1e-15);
    CHECK(std::abs(z[1]) < 1e-15);
    CHECK(std::abs(z[2]) < 1e-15);
  }
  SUBCASE("translated ball returns the center") {
    for (int d : {2, 3}) {
      const std::vector<double> v =
          (d == 2) ? std::vector<double>{0.12, -0.07} : std::vector<double>{0.12, -0.07, 0.2};
      HarmonicSpectrum h(d, 1);
      h.coeff(0, 0) = std::sqrt(unit_sphere_area(d));
      h.block(1) = degree1_from_vector(v, d);
      const auto z = steiner_point(make_body(std::move(h)));
      for (int k = 0; k < d; ++k) CHECK(rel_diff(z[k], v[k]) < 1e-13);
    }
  }
  SUBCASE("zero degree-1 block means the origin") {
    const auto z = steiner_point(perturbed_ball(3, 1.0, 3, 2, 0.05));
    CHECK(std::abs(z[0]) + std::abs(z[1]) + std::abs(z[2]) == 0.0);
  }
}

TEST_CASE("steiner ball support function") {
  SUBCASE("ball is its own steiner ball") {
    const auto b = ball(3, 1.7);
    const auto sb = steiner_ball_support(b);
    CHECK(rel_diff(sb.coeff(0, 0), b.support.coeff(0, 0)) < 1e-15);
    CHECK(sb.total_norm_sq() == doctest::Approx(b.support.total_norm_sq()));
  }
  SUBCASE("higher harmonics are truncated") {
    const auto b = perturbed_ball(3, 1.0, 2, 1, 0.2);
    const auto sb = steiner_ball_support(b);
    CHECK(sb.band_limit() == 1);
    CHECK(sb.block_norm_sq(1) == 0.0);
    CHECK(rel_diff(sb.coeff(0, 0), std::sqrt(4.0 * kPi)) < 1e-15);
  }
  SUBCASE("blocks 0 and 1 pass through") {
    HarmonicSpectrum h(3, 3);
    h.coeff(0, 0) = std::sqrt(4.0 * kPi);
    h.block(1) = degree1_from_vector(std::vector<double>{0.1, 0.0, -0.1}, 3);
    h.coeff(3, 4) = 0.07;
    const auto sb = steiner_ball_support(make_body(std::move(h), false));
    CHECK(sb.block_norm_sq(1) > 0.0);
    const auto z = vector_from_degree1(sb.block(1), 3);
    CHECK(rel_diff(z[0], 0.1) < 1e-14);
    CHECK(rel_diff(z[2], -0.1) < 1e-14);
  }
}

TEST_CASE("delta2 distance") {
  SUBCASE("identical bodies") {
    const auto b = perturbed_ball(3, 1.0, 2, 0, 0.3);
    CHECK(delta2(b, b) == 0.0);
  }
  SUBCASE("perturbation to its steiner ball") {
    const double eps = 0.05;
    const auto b = perturbed_ball(3, 1.0, 2, 0, eps);
    SupportBody sb;
    sb.support = steiner_ball_support(b);
    CHECK(rel_diff(delta2(b, sb), eps) < 1e-14);
  }
  SUBCASE("concentric balls") {
    CHECK(rel_diff(delta2(ball(3, 1.5), ball(3, 0.5)), 1.0 * std::sqrt(4.0 * kPi)) < 1e-14);
  }
  SUBCASE("dimension mismatch") {
    CHECK_THROWS_AS(delta2(ball(2, 1.0), ball(3, 1.0)), std::invalid_argument);
  }
}

TEST_CASE("curvature integrals") {
  SUBCASE("ball in d=3") {
    const double R = 1.3;
    const auto ci = curvature_integrals(ball(3, R));
    CHECK(rel_diff(ci.int_H_dm2, 4.0 * kPi * R) < 1e-14);
    CHECK(rel_diff(ci.int_H_dm3, 4.0 * kPi * R * R) < 1e-14);
    CHECK(rel_diff(ci.int_ros, 4.0 * kPi * R * R) < 1e-14);
  }
  SUBCASE("degree-2 perturbation, d=3") {
    const double eps = 0.05;
    const auto ci = curvature_integrals(perturbed_ball(3, 1.0, 2, 0, eps));
    CHECK(rel_diff(ci.int_H_dm2, 4.0 * kPi) < 1e-14);
    CHECK(rel_diff(ci.int_H_dm3, 4.0 * kPi - 2.0 * eps * eps) < 1e-13);
    CHECK(rel_diff(ci.int_ros, 4.0 * kPi + 4.0 * eps * eps) < 1e-13);
  }
  SUBCASE("circle of radius R (d=2 conventions)") {
    const double R = 0.8;
    const auto ci = curvature_integrals(ball(2, R));
    CHECK(rel_diff(ci.int_H_dm2, 2.0 * kPi * R) < 1e-14);        // L
    CHECK(rel_diff(ci.int_H_dm3, 2.0 * kPi * R * R) < 1e-14);    // 2A
    CHECK(rel_diff(ci.int_ros, 2.0 * kPi * R * R) < 1e-14);      // int 1/kappa ds
  }
}

TEST_CASE("mixed volume") {
  SUBCASE("V(K,K) equals W_{d-2}") {
    std::mt19937 rng(7);
    for (int d : {2, 3}) {
      const auto body = random_convex_body(rng, d, 8, 6, 0.2);
      const double v = mixed_volume(body, body);
      const auto w = quermassintegrals(body);
      CHECK(rel_diff(v, w.w_dm2) < 1e-12);
      const auto ci = curvature_integrals(body);
      CHECK(rel_diff(v, ci.int_H_dm3 / d) < 1e-12);
    }
  }
  SUBCASE("balls in d=3") {
    CHECK(rel_diff(mixed_volume(ball(3, 2.0), ball(3, 0.5)), 4.0 * kPi / 3.0 * 2.0 * 0.5) < 1e-14);
  }
  SUBCASE("symmetry on random spectra") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      SupportBody K, L;
      K.support = random_coeff_spectrum(rng, 3, 6);
      L.support = random_coeff_spectrum(rng, 3, 6);
      CHECK(rel_diff(mixed_volume(K, L), mixed_volume(L, K)) < 1e-12);
    }
  }
}

TEST_CASE("quermassintegrals") {
  SUBCASE("unit ball in d=3") {
    const auto w = quermassintegrals(ball(3, 1.0));
    CHECK(rel_diff(w.w_dm1, 4.0 * kPi / 3.0) < 1e-14);
    CHECK(rel_diff(w.w_dm2, 4.0 * kPi / 3.0) < 1e-14);
    CHECK(rel_diff(w.w_dm1, unit_ball_volume(3)) < 1e-14);  // W_d(K) = kappa_d as well
  }
  SUBCASE("W_{d-1} is 1-homogeneous") {
    std::mt19937 rng(3);
    const auto body = random_convex_body(rng, 3, 6, 5, 0.2);
    SupportBody scaled;
    scaled.support = body.support * 3.0;
    CHECK(rel_diff(quermassintegrals(scaled).w_dm1, 3.0 * quermassintegrals(body).w_dm1) < 1e-13);
  }
}

TEST_CASE("triple agreement for the mean width") {
  std::mt19937 rng(21);
  for (int d : {2, 3}) {
    const auto body = random_convex_body(rng, d, 8, 6, 0.2);
    const auto ci = curvature_integrals(body);
    const auto g = geometric_summary(body);
    // int_Sigma H_{d-2} = int h dtheta = (|S^{d-1}|/2) wbar
    const double via_width = 0.5 * unit_sphere_area(d) * g.mean_width;
    CHECK(rel_diff(ci.int_H_dm2, via_width) < 1e-13);
    const auto grid = QuadratureGrid::for_band_limit(d, body.support.band_limit());
    const auto f = inverse(body.support, grid);
    GridFunction one(grid);
    for (auto& v : one.values()) v = 1.0;
    CHECK(rel_diff(ci.int_H_dm2, inner_product(f, one)) < 1e-10);
  }
}

TEST_CASE("translation invariance of the spectral functionals") {
  std::mt19937 rng(17);
  for (int d : {2, 3}) {
    const auto body = random_convex_body(rng, d, 8, 6, 0.15);
    const std::vector<double> v =
        (d == 2) ? std::vector<double>{0.21, -0.13} : std::vector<double>{0.21, -0.13, 0.08};
    SupportBody moved = body;
    moved.support.ensure_degree(1);
    const auto b1 = degree1_from_vector(v, d);
    for (std::size_t k = 0; k < b1.size(); ++k) moved.support.block(1)[k] += b1[k];

    const auto a = curvature_integrals(body);
    const auto b = curvature_integrals(moved);
    CHECK(a.int_H_dm2 == b.int_H_dm2);  // block 0 untouched
    CHECK(rel_diff(a.int_H_dm3, b.int_H_dm3) < 1e-9);
    CHECK(rel_diff(a.int_ros, b.int_ros) < 1e-9);

    SupportBody sb1, sb2;
    sb1.support = steiner_ball_support(body);
    sb2.support = steiner_ball_support(moved);
    CHECK(rel_diff(delta2(body, {sb1.support, {}, 0.0}), delta2(moved, {sb2.support, {}, 0.0})) <
          1e-9);
  }
}

TEST_CASE("geometric summary collects the pieces consistently") {
  const double eps = 0.04;
  const auto b = perturbed_ball(3, 1.0, 2, 2, eps);
  const auto g = geometric_summary(b);
  CHECK(rel_diff(g.mean_width, 2.0) < 1e-14);
  CHECK(rel_diff(g.delta2_steiner, eps) < 1e-13);
  CHECK(rel_diff(g.w_dm1, g.int_H_dm2 / 3.0) < 1e-15);
  CHECK(rel_diff(g.w_dm2, g.int_H_dm3 / 3.0) < 1e-15);
}
