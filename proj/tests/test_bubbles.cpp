#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <random>

#include "frnlab/bubble.hpp"
#include "frnlab/special_functions.hpp"

using namespace frnlab;
using Eigen::Vector3d;
using Eigen::VectorXd;

namespace {
const FracParams P35 = make_params(3, 0.5);
}

TEST_CASE("parameter validation and derived exponents") {
  CHECK(P35.p == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(P35.two_star == doctest::Approx(3.0).epsilon(1e-15));
  CHECK(P35.p == P35.two_star - 1.0);  // exact
  CHECK_THROWS_AS(make_params(3, 1.5), std::domain_error);
  CHECK_THROWS_AS(make_params(3, 0.0), std::domain_error);
  CHECK_THROWS_AS(make_params(1, 0.4), std::domain_error);
  const FracParams q = make_params(5, 0.75);
  CHECK(q.p == q.two_star - 1.0);
}

TEST_CASE("amplitude constant closed form") {
  // (3, 1/2): 2^1 * (Gamma(2)/Gamma(1))^1 = 2.
  CHECK(amplitude_constant(P35) == doctest::Approx(2.0).epsilon(1e-14));
  // (2, 1/2): sqrt(2) * (Gamma(3/2)/Gamma(1/2))^(1/2) = 1.
  CHECK(amplitude_constant(make_params(2, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  // The local limit gamma -> 1 reproduces the classical amplitude
  // (N(N-2))^((N-2)/4); at N = 3 both expressions equal 3^(1/4).
  FracParams almost_local = make_params(3, 1.0 - 1e-12);
  CHECK(amplitude_constant(almost_local) ==
        doctest::Approx(std::pow(3.0, 0.25)).epsilon(1e-9));
  // Positivity across the admissible range.
  for (int n : {2, 3, 4, 6})
    for (double g : {0.1, 0.3, 0.5, 0.7, 0.9})
      if (2 * g < n) CHECK(amplitude_constant(make_params(n, g)) > 0.0);
}

TEST_CASE("sobolev constant closed form") {
  // Direct Gamma-function substitution at (3, 1/2).
  const double expected =
      std::pow(0.5 * std::pow(std::numbers::pi, -0.5) * (gamma_fn(1.0) / gamma_fn(2.0)) *
                   std::pow(gamma_fn(3.0) / gamma_fn(1.5), 1.0 / 3.0),
               -1.5);
  CHECK(sobolev_constant(P35) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(4.4422626241).epsilon(1e-9));
  for (int n : {2, 3, 5})
    for (double g : {0.25, 0.5, 0.75}) CHECK(sobolev_constant(make_params(n, g)) > 0.0);
}

TEST_CASE("bubble evaluation") {
  Bubble b = make_bubble(Vector3d(0.5, -1.0, 2.0), 1.0);
  CHECK(bubble_value(b, P35, b.center) == doctest::Approx(2.0).epsilon(1e-14));

  // At the center the value is C0 * scale^((N-2g)/2).
  b.scale = 4.0;
  CHECK(bubble_value(b, P35, b.center) == doctest::Approx(8.0).epsilon(1e-14));

  // Far-field decay C0 * scale^(-(N-2g)/2) |x-y|^(-(N-2g)).
  b.scale = 2.0;
  Vector3d far = b.center + Vector3d(2000.0, 0, 0);
  const double asym = 2.0 * std::pow(2.0, -1.0) * std::pow(2000.0, -2.0);
  CHECK(bubble_value(b, P35, far) == doctest::Approx(asym).epsilon(1e-5));

  CHECK_THROWS_AS(make_bubble(Vector3d::Zero(), -1.0), std::domain_error);
  CHECK_THROWS_AS(make_bubble(Vector3d::Zero(), 1.0, 0.0), std::domain_error);
}

TEST_CASE("scaling covariance") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    Vector3d y(unif(rng), unif(rng), unif(rng));
    Vector3d x(unif(rng), unif(rng), unif(rng));
    const double lam = std::exp(unif(rng));
    Bubble b = make_bubble(y, lam);
    Bubble unit = make_bubble(Vector3d::Zero(), 1.0);
    const double lhs = bubble_value(b, P35, x);
    const double rhs = std::pow(lam, P35.half_exponent()) *
                       bubble_value(unit, P35, (lam * (x - y)).eval());
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("parameter derivatives against central differences") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> unif(-1.5, 1.5);
  for (const FracParams& prm : {P35, make_params(2, 0.5), make_params(3, 0.75)}) {
    for (int trial = 0; trial < 10; ++trial) {
      VectorXd y = VectorXd::NullaryExpr(prm.dim, [&](int) { return unif(rng); });
      VectorXd x = VectorXd::NullaryExpr(prm.dim, [&](int) { return unif(rng); });
      const double lam = std::exp(unif(rng));

      Bubble b = make_bubble(y, lam);
      const double h = 1e-5 * lam;
      Bubble bp = b, bm = b;
      bp.scale += h;
      bm.scale -= h;
      const double fd_scale = (bubble_value(bp, prm, x) - bubble_value(bm, prm, x)) / (2 * h);
      CHECK(bubble_dscale(b, prm, x) == doctest::Approx(fd_scale).epsilon(1e-6));

      for (int i = 0; i < prm.dim; ++i) {
        const double hc = 1e-5 * std::max(1.0, y.cwiseAbs().maxCoeff());
        Bubble cp = b, cm = b;
        cp.center[i] += hc;
        cm.center[i] -= hc;
        const double fd = (bubble_value(cp, prm, x) - bubble_value(cm, prm, x)) / (2 * hc);
        CHECK(bubble_dcenter(b, prm, x, i) == doctest::Approx(fd).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("derivative values at the center") {
  Bubble b = make_bubble(Vector3d(1.0, 2.0, 3.0), 2.5);
  // d/dscale at x = center: (N-2g)/2 * C0 * scale^((N-2g)/2 - 1).
  const double expected = 1.0 * 2.0 * std::pow(2.5, 0.0);
  CHECK(bubble_dscale(b, P35, b.center) == doctest::Approx(expected).epsilon(1e-13));
  for (int i = 0; i < 3; ++i) CHECK(bubble_dcenter(b, P35, b.center, i) == 0.0);
}

TEST_CASE("derivative bounds over a grid") {
  // |dU/dscale| * scale / U and |dU/dcenter| / (scale U) stay bounded by a
  // single constant (the half exponent controls both).
  const double m = P35.half_exponent();
  Bubble b = make_bubble(Vector3d(0.2, -0.3, 0.1), 3.0);
  double worst_scale = 0.0, worst_center = 0.0;
  for (int i = 0; i < 22; ++i)
    for (int j = 0; j < 22; ++j)
      for (int k = 0; k < 22; ++k) {
        Vector3d x(-4.0 + 0.4 * i, -4.0 + 0.4 * j, -4.0 + 0.4 * k);
        const double u = bubble_value(b, P35, x);
        worst_scale = std::max(worst_scale, std::abs(bubble_dscale(b, P35, x)) * b.scale / u);
        for (int c = 0; c < 3; ++c)
          worst_center =
              std::max(worst_center, std::abs(bubble_dcenter(b, P35, x, c)) / (b.scale * u));
      }
  CHECK(worst_scale <= m + 1e-12);
  CHECK(worst_center <= m + 1e-12);
}

TEST_CASE("exact fractional Laplacian values") {
  Bubble b = make_bubble(Vector3d::Zero(), 1.0);
  CHECK(bubble_frac_laplacian(b, P35, b.center) == doctest::Approx(4.0).epsilon(1e-14));

  // Scaled bubble at scale |x-y| = 1: (C0 (scale/2)^((N-2g)/2))^p.
  Bubble big = make_bubble(Vector3d::Zero(), 10.0);
  Vector3d x(0.1, 0.0, 0.0);
  CHECK(bubble_frac_laplacian(big, P35, x) ==
        doctest::Approx(std::pow(2.0 * (10.0 / 2.0), 2.0)).epsilon(1e-13));

  Bubble scaled = make_bubble(Vector3d::Zero(), 1.0, 1.5);
  CHECK_THROWS_AS(bubble_frac_laplacian(scaled, P35, x), std::invalid_argument);
}

TEST_CASE("geometric constants") {
  // C1(3, 1/2) = pi^2 via the Beta closed form.
  GeometricConstants gc = geometric_constants(P35, 1.5);
  CHECK(gc.c1 == doctest::Approx(std::numbers::pi * std::numbers::pi).epsilon(1e-13));

  // Quadrature agrees with the closed Beta-function forms.
  CHECK(gc.moment == doctest::Approx(moment_closed_form(3, 1.5)).epsilon(1e-9));
  CHECK(gc.signed_moment ==
        doctest::Approx(signed_moment_closed_form(3, 1.5)).epsilon(1e-8));

  // Two independent meshes agree: rerun with a different truncation radius.
  QuadratureSpec alt;
  alt.far_field_radius = 3177.0;
  alt.rel_tol = 1e-10;
  GeometricConstants gc2 = geometric_constants(P35, 1.5, alt);
  CHECK(gc.signed_moment == doctest::Approx(gc2.signed_moment).epsilon(1e-8));

  for (double beta : {1.1, 1.5, 1.9})
    CHECK(geometric_constants(P35, beta).moment > 0.0);
  CHECK_THROWS_AS(geometric_constants(P35, 0.5), std::domain_error);
  CHECK_THROWS_AS(geometric_constants(P35, 2.5), std::domain_error);
}

TEST_CASE("bubble mass closed form") {
  // int U^{2*} at (3, 1/2) equals C0^3 * pi^(3/2) Gamma(3/2)/Gamma(3).
  const double a = bubble_mass(P35);
  CHECK(a == doctest::Approx(8.0 * std::pow(std::numbers::pi, 1.5) * gamma_fn(1.5) / 2.0)
                 .epsilon(1e-13));
  // Relation to the printed Sobolev constant: A = S^((N-2g)/(2g)).
  CHECK(a == doctest::Approx(std::pow(sobolev_constant(P35), 2.0)).epsilon(1e-12));
}
