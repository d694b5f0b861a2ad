#pragma once

#include <Eigen/Core>
#include <functional>
#include <limits>
#include <stdexcept>
#include <vector>

namespace frnlab {

// A localized feature of an integrand: a point where it is peaked or kinked,
// with its characteristic length scale. Drives the initial subdivision.
struct Feature {
  Eigen::VectorXd point;
  double scale = 1.0;
  bool axis_kinks = false;   // integrand has |x_i - p_i|^beta kinks through the point
  double kink_radius = 0.0;  // kinks only matter within this distance of the point
};

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = default_max_subdivisions();
  double far_field_radius = 0.0;  // 0 = choose from features
  std::vector<Feature> split_centers;
  // Declared far-field decay of the R^n integrand, f ~ A |x|^(-q). Use
  // infinity for integrands with (numerically) compact support.
  double decay_exponent = std::numeric_limits<double>::infinity();

  // Reads FRNLAB_QUAD_BUDGET once; falls back to the built-in default.
  static int default_max_subdivisions();

  QuadratureSpec with_rel_tol(double r) const {
    QuadratureSpec s = *this;
    s.rel_tol = r;
    return s;
  }
  QuadratureSpec with_abs_tol(double a) const {
    QuadratureSpec s = *this;
    s.abs_tol = a;
    return s;
  }
};

struct IntegralResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions_used = 0;
  double tail_correction = 0.0;
};

class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, IntegralResult best)
      : std::runtime_error(what), best_estimate(best) {}
  IntegralResult best_estimate;
};

using Fn1D = std::function<double(double)>;
using FnND = std::function<double(const Eigen::VectorXd&)>;
// Two-center integrand: value as a function of the distances to both centers.
using Fn2C = std::function<double(double ra, double rb)>;

// Adaptive Gauss-Kronrod integration over [a,b]. `breakpoints` seed the
// initial partition (values outside (a,b) are ignored).
IntegralResult integrate_segment(const Fn1D& f, double a, double b,
                                 const QuadratureSpec& spec,
                                 const std::vector<double>& breakpoints = {});

// int_0^infty h(r) r^(dim-1) dr with power-law tail beyond the truncation
// radius. `feature_scales` seed the partition near r = 0 and at given radii.
IntegralResult integrate_radial_profile(const Fn1D& h, int dim,
                                        const QuadratureSpec& spec,
                                        const std::vector<double>& feature_radii = {});

// int_{R^dim} g(|x|) dx for a radial integrand.
IntegralResult integrate_radial(const Fn1D& g, int dim, const QuadratureSpec& spec,
                                const std::vector<double>& feature_radii = {});

// int_{R^dim} F(|x - a|, |x - b|) dx where |a - b| = dist. scale_a/scale_b are
// the characteristic widths of the structure around each center.
IntegralResult integrate_two_center(const Fn2C& F, int dim, double dist,
                                    double scale_a, double scale_b,
                                    const QuadratureSpec& spec);

// Recovers cos(theta) between (x-a) and (b-a) from the two distances.
inline double two_center_cos(double ra, double dist, double rb) {
  if (ra <= 0.0 || dist <= 0.0) return 1.0;
  double c = (ra * ra + dist * dist - rb * rb) / (2.0 * ra * dist);
  return std::max(-1.0, std::min(1.0, c));
}

// Adaptive cubature over an axis-aligned box (Genz-Malik rule, dim >= 2).
IntegralResult integrate_box(const FnND& f, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi, const QuadratureSpec& spec);

// Adaptive cubature over R^dim: box cover refined around the declared
// features, plus a power-law far-field correction.
IntegralResult integrate_rn(const FnND& f, int dim, const QuadratureSpec& spec);

}  // namespace frnlab
