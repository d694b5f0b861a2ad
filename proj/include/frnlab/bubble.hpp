#pragma once

#include <Eigen/Core>

#include "frnlab/params.hpp"
#include "frnlab/quadrature.hpp"

namespace frnlab {

// One extremal profile amplitude * C0 * (scale / (1 + scale^2 |x-center|^2))^((N-2g)/2).
struct Bubble {
  Eigen::VectorXd center;
  double scale = 1.0;
  double amplitude = 1.0;
};

inline Bubble make_bubble(Eigen::VectorXd center, double scale, double amplitude = 1.0) {
  if (!(scale > 0.0)) throw std::domain_error("bubble scale must be positive");
  if (!(amplitude > 0.0)) throw std::domain_error("bubble amplitude must be positive");
  return Bubble{std::move(center), scale, amplitude};
}

// The unique C0 > 0 normalizing the profile so that (-Lap)^g U = U^p.
double amplitude_constant(const FracParams& prm);

// Sharp fractional Sobolev embedding constant, in the Gamma-function form.
double sobolev_constant(const FracParams& prm);

// Normalization of the principal-value kernel making the Fourier symbol |xi|^(2g).
double pv_normalization(const FracParams& prm);

// int U^{2*} for an amplitude-1 bubble; independent of center and scale.
double bubble_mass(const FracParams& prm);

double bubble_value(const Bubble& b, const FracParams& prm,
                    const Eigen::Ref<const Eigen::VectorXd>& x);
double bubble_dscale(const Bubble& b, const FracParams& prm,
                     const Eigen::Ref<const Eigen::VectorXd>& x);
double bubble_dcenter(const Bubble& b, const FracParams& prm,
                      const Eigen::Ref<const Eigen::VectorXd>& x, int i);

// Exact value of (-Lap)^g U at x for the normalized (amplitude 1) profile.
double bubble_frac_laplacian(const Bubble& b, const FracParams& prm,
                             const Eigen::Ref<const Eigen::VectorXd>& x);

struct GeometricConstants {
  double c1 = 0.0;            // int (1+|x|^2)^(-(N+2g)/2)
  double moment = 0.0;        // int |x|^b (1+|x|^2)^(-(N+1))
  double signed_moment = 0.0; // int |x|^b (1-|x|^2)(1+|x|^2)^(-(N+1))
};

// Radial-reduction quadrature of the three reference integrals; beta must lie
// in (1, N-2g).
GeometricConstants geometric_constants(const FracParams& prm, double beta,
                                       const QuadratureSpec& spec = {});

// Closed Beta-function forms, used as the independent cross-check.
double moment_closed_form(int dim, double beta);
double signed_moment_closed_form(int dim, double beta);

}  // namespace frnlab
