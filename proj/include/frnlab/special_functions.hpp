#pragma once

#include <cmath>
#include <numbers>

namespace frnlab {

inline double gamma_fn(double x) { return std::tgamma(x); }
inline double log_gamma(double x) { return std::lgamma(x); }

// Beta function for positive arguments.
inline double beta_fn(double a, double b) {
  return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// Surface measure of the unit sphere S^{n-1} in R^n.
inline double sphere_area(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n) / gamma_fn(0.5 * n);
}

// Measure of the (n-2)-sphere appearing in the polar-angle reduction
// dx = S_{n-2} r^{n-1} sin^{n-2}(theta) dr dtheta, valid for n >= 2.
inline double polar_angle_measure(int n) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (n - 1)) / gamma_fn(0.5 * (n - 1));
}

// int_{S^{n-1}} |w_1|^beta dsigma(w).
inline double angular_abs_moment(int n, double beta) {
  return 2.0 * std::pow(std::numbers::pi, 0.5 * (n - 1)) *
         gamma_fn(0.5 * (beta + 1.0)) / gamma_fn(0.5 * (n + beta));
}

// Ratio int |w_1|^beta dsigma / int dsigma; equals 1/n at beta = 2.
inline double angular_moment_ratio(int n, double beta) {
  return angular_abs_moment(n, beta) / sphere_area(n);
}

}  // namespace frnlab
