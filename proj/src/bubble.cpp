#include "frnlab/bubble.hpp"

#include <cmath>
#include <numbers>

#include "frnlab/special_functions.hpp"

namespace frnlab {

double amplitude_constant(const FracParams& prm) {
  const double n = prm.dim, g = prm.gamma;
  const double ratio = std::exp(log_gamma(0.5 * (n + 2.0 * g)) - log_gamma(0.5 * (n - 2.0 * g)));
  return std::pow(2.0, 0.5 * (n - 2.0 * g)) * std::pow(ratio, (n - 2.0 * g) / (4.0 * g));
}

double sobolev_constant(const FracParams& prm) {
  const double n = prm.dim, g = prm.gamma;
  const double inner = std::pow(2.0, -2.0 * g) * std::pow(std::numbers::pi, -g) *
                       std::exp(log_gamma(0.5 * (n - 2.0 * g)) - log_gamma(0.5 * (n + 2.0 * g))) *
                       std::pow(std::exp(log_gamma(n) - log_gamma(0.5 * n)), 2.0 * g / n);
  return std::pow(inner, -0.5 * prm.two_star);
}

double pv_normalization(const FracParams& prm) {
  const double n = prm.dim, g = prm.gamma;
  return std::pow(4.0, g) * g * gamma_fn(0.5 * n + g) /
         (std::pow(std::numbers::pi, 0.5 * n) * gamma_fn(1.0 - g));
}

double bubble_mass(const FracParams& prm) {
  const double n = prm.dim;
  return std::pow(amplitude_constant(prm), prm.two_star) * std::pow(std::numbers::pi, 0.5 * n) *
         std::exp(log_gamma(0.5 * n) - log_gamma(n));
}

double bubble_value(const Bubble& b, const FracParams& prm,
                    const Eigen::Ref<const Eigen::VectorXd>& x) {
  const double rho2 = (x - b.center).squaredNorm();
  const double base = b.scale / (1.0 + b.scale * b.scale * rho2);
  return b.amplitude * amplitude_constant(prm) * std::pow(base, prm.half_exponent());
}

double bubble_dscale(const Bubble& b, const FracParams& prm,
                     const Eigen::Ref<const Eigen::VectorXd>& x) {
  const double rho2 = (x - b.center).squaredNorm();
  const double lr2 = b.scale * b.scale * rho2;
  const double u = bubble_value(b, prm, x);
  return prm.half_exponent() / b.scale * u * (1.0 - lr2) / (1.0 + lr2);
}

double bubble_dcenter(const Bubble& b, const FracParams& prm,
                      const Eigen::Ref<const Eigen::VectorXd>& x, int i) {
  const double rho2 = (x - b.center).squaredNorm();
  const double u = bubble_value(b, prm, x);
  return 2.0 * prm.half_exponent() * b.scale * b.scale * (x[i] - b.center[i]) * u /
         (1.0 + b.scale * b.scale * rho2);
}

double bubble_frac_laplacian(const Bubble& b, const FracParams& prm,
                             const Eigen::Ref<const Eigen::VectorXd>& x) {
  if (std::abs(b.amplitude - 1.0) > 1e-14)
    throw std::invalid_argument(
        "the exact fractional-Laplacian identity holds only for amplitude-1 profiles");
  return std::pow(bubble_value(b, prm, x), prm.p);
}

double moment_closed_form(int dim, double beta) {
  return sphere_area(dim) * 0.5 * beta_fn(0.5 * (dim + beta), 0.5 * (dim + 2.0 - beta));
}

double signed_moment_closed_form(int dim, double beta) {
  return sphere_area(dim) * 0.5 *
         (beta_fn(0.5 * (dim + beta), 0.5 * (dim + 2.0 - beta)) -
          beta_fn(0.5 * (dim + beta + 2.0), 0.5 * (dim - beta)));
}

GeometricConstants geometric_constants(const FracParams& prm, double beta,
                                       const QuadratureSpec& spec) {
  if (!(beta > 1.0 && beta < prm.dim - 2.0 * prm.gamma))
    throw std::domain_error("beta must lie in (1, N - 2*gamma)");
  const int n = prm.dim;
  GeometricConstants gc;
  gc.c1 = std::pow(std::numbers::pi, 0.5 * n) *
          std::exp(log_gamma(prm.gamma) - log_gamma(0.5 * n + prm.gamma));

  QuadratureSpec s = spec;
  s.decay_exponent = 2.0 * (n + 1.0) - beta;
  gc.moment = integrate_radial(
                  [&](double r) {
                    return std::pow(r, beta) * std::pow(1.0 + r * r, -(n + 1.0));
                  },
                  n, s, {1.0})
                  .value;
  s.decay_exponent = 2.0 * n - beta;
  gc.signed_moment = integrate_radial(
                         [&](double r) {
                           return std::pow(r, beta) * (1.0 - r * r) *
                                  std::pow(1.0 + r * r, -(n + 1.0));
                         },
                         n, s.with_abs_tol(1e-13), {1.0})
                         .value;
  return gc;
}

}  // namespace frnlab
