#pragma once

#include <stdexcept>
#include <string>

namespace frnlab {

// Dimension and fractional order of the problem, together with the derived
// critical exponents. Single source of truth for everything (N, gamma)-dependent.
struct FracParams {
  int dim = 3;            // N
  double gamma = 0.5;     // order of the fractional Laplacian, in (0,1)
  double p = 2.0;         // critical power (N+2g)/(N-2g)
  double two_star = 3.0;  // critical Sobolev exponent 2N/(N-2g)

  // Half of the bubble decay exponent, (N-2g)/2.
  double half_exponent() const { return 0.5 * (dim - 2.0 * gamma); }
};

inline FracParams make_params(int dim, double gamma) {
  if (dim < 2) throw std::domain_error("dimension must be >= 2");
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("gamma must lie in (0,1), got " + std::to_string(gamma));
  if (!(2.0 * gamma < dim)) throw std::domain_error("2*gamma must be < dimension");
  FracParams prm;
  prm.dim = dim;
  prm.gamma = gamma;
  prm.two_star = 2.0 * dim / (dim - 2.0 * gamma);
  prm.p = prm.two_star - 1.0;  // keeps p == two_star - 1 exact in floating point
  return prm;
}

}  // namespace frnlab
