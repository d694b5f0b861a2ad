#pragma once

#include <Eigen/Core>
#include <functional>
#include <variant>

#include "frnlab/bubble.hpp"
#include "frnlab/pairings.hpp"
#include "frnlab/params.hpp"
#include "frnlab/quadrature.hpp"

namespace frnlab {

// A radially symmetric function f(x) = profile(|x - center|) with declared
// regularity data: characteristic width and far-field power decay.
struct RadialFn {
  Eigen::VectorXd center;
  std::function<double(double)> profile;
  std::function<double(double)> dprofile;  // may be empty
  double scale = 1.0;
  double decay = std::numeric_limits<double>::infinity();

  double operator()(const Eigen::Ref<const Eigen::VectorXd>& x) const {
    return profile((x - center).norm());
  }
};

RadialFn bubble_as_radial(const Bubble& b, const FracParams& prm);
RadialFn gaussian_fn(Eigen::VectorXd center, double width);
RadialFn rational_bump_fn(Eigen::VectorXd center, double power, double width);

// Principal-value evaluation of the fractional Laplacian at x: the singular
// ball is handled by the angularly symmetrized difference, the remainder by
// direct kernel quadrature plus analytic tails.
double pv_frac_laplacian(const RadialFn& f, const FracParams& prm,
                         const Eigen::Ref<const Eigen::VectorXd>& x,
                         const QuadratureSpec& spec = {});

// Tabulates rho -> (-Lap)^g f on a graded grid and returns it as a radial
// function (cubic-spline interpolated, power-law extended).
RadialFn pv_radial_table(const RadialFn& f, const FracParams& prm,
                         const QuadratureSpec& spec = {});

// int f * g for two radial functions.
double radial_product_integral(const RadialFn& a, const RadialFn& b, int dim,
                               const QuadratureSpec& spec = {});

using HOperand = std::variant<BubbleOp, RadialFn>;

// H^gamma pairing <f,g>. Bubble operands route through the exact identity
// (single integrals); generic radial pairs go through the numeric
// principal-value Laplacian.
double hgamma_inner(const HOperand& f, const HOperand& g, const FracParams& prm,
                    const QuadratureSpec& spec = {});

}  // namespace frnlab
