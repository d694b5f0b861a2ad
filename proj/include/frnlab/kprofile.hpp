#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "frnlab/params.hpp"

#include <nlohmann/json_fwd.hpp>

namespace frnlab {

// One critical point of the perturbation with its local model data.
struct CriticalPoint {
  Eigen::VectorXd z;
  double K_value = 0.0;
  Eigen::VectorXd a;
  double beta = 1.5;
  double sigma = 0.5;
};

// Piecewise-local perturbation: K(z^j) + sum_i a_i |x_i - z_i|^beta inside
// radius r0 of each point, blended to zero by a C^2 cutoff between r0 and
// 2 r0, identically zero elsewhere.
struct KProfile {
  std::vector<CriticalPoint> points;
  double cutoff_radius = 0.25;
  double global_bound = 1.0;
  // Optional remainder hook c * |x - z|^(beta+sigma) inside the patch; the
  // canonical instance keeps it at zero so the local expansion is exact.
  double remainder_coeff = 0.0;
};

// C^2 smoothstep: 1 for rho <= r0, 0 for rho >= 2 r0.
double smooth_cutoff(double rho, double r0);

double eval_K(const KProfile& profile, const Eigen::Ref<const Eigen::VectorXd>& x);

// Empty result means all invariants hold. Violations are data, not errors.
std::vector<std::string> validate_profile(const KProfile& profile, const FracParams& prm);

KProfile profile_from_json(const nlohmann::json& doc);
nlohmann::json profile_to_json(const KProfile& profile);
KProfile load_profile(const std::string& path);
void save_profile(const KProfile& profile, const std::string& path);

// Bundled two-peak demo instance: N = 3, beta = 3/2, a = (-1,-1,-1) at both
// points, centers distance 2 apart.
KProfile demo_profile();

}  // namespace frnlab
