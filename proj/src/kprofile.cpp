#include "frnlab/kprofile.hpp"

#include <cmath>
#include <fstream>

#include <nlohmann/json.hpp>

namespace frnlab {

double smooth_cutoff(double rho, double r0) {
  if (rho <= r0) return 1.0;
  if (rho >= 2.0 * r0) return 0.0;
  const double t = (rho - r0) / r0;
  return 1.0 - t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
}

double eval_K(const KProfile& profile, const Eigen::Ref<const Eigen::VectorXd>& x) {
  const double r0 = profile.cutoff_radius;
  double total = 0.0;
  for (const auto& pt : profile.points) {
    const double rho = (x - pt.z).norm();
    if (rho >= 2.0 * r0) continue;
    double local = pt.K_value;
    for (int i = 0; i < pt.a.size(); ++i)
      local += pt.a[i] * std::pow(std::abs(x[i] - pt.z[i]), pt.beta);
    if (profile.remainder_coeff != 0.0)
      local += profile.remainder_coeff * std::pow(rho, pt.beta + pt.sigma);
    total += local * smooth_cutoff(rho, r0);
  }
  return total;
}

std::vector<std::string> validate_profile(const KProfile& profile, const FracParams& prm) {
  std::vector<std::string> v;
  const double beta_hi = prm.dim - 2.0 * prm.gamma;
  if (profile.cutoff_radius <= 0.0) v.push_back("cutoff_radius must be positive");
  if (profile.points.size() < 2)
    v.push_back("profile has fewer than 2 critical points; two-peak runs need two");

  for (size_t j = 0; j < profile.points.size(); ++j) {
    const auto& pt = profile.points[j];
    const std::string tag = "point " + std::to_string(j) + ": ";
    if (pt.z.size() != prm.dim || pt.a.size() != prm.dim)
      v.push_back(tag + "z and a must have dimension N");
    double sum = 0.0;
    for (int i = 0; i < pt.a.size(); ++i) {
      if (pt.a[i] == 0.0) v.push_back(tag + "a_" + std::to_string(i) + " = 0");
      sum += pt.a[i];
    }
    if (!(sum < 0.0)) v.push_back(tag + "sum of a_i must be negative");
    if (!(pt.beta > 1.0 && pt.beta < beta_hi))
      v.push_back(tag + "beta " + std::to_string(pt.beta) + " not in (1, N-2*gamma) = (1, " +
                  std::to_string(beta_hi) + ")");
    if (!(pt.sigma > 0.0 && pt.sigma < 1.0))
      v.push_back(tag + "sigma must lie in (0,1)");

    double model_sup = std::abs(pt.K_value);
    for (int i = 0; i < pt.a.size(); ++i)
      model_sup += std::abs(pt.a[i]) * std::pow(2.0 * profile.cutoff_radius, pt.beta);
    if (model_sup > profile.global_bound * (1.0 + 1e-12))
      v.push_back(tag + "local model exceeds global_bound (sup ~ " +
                  std::to_string(model_sup) + ")");
  }

  for (size_t j = 0; j < profile.points.size(); ++j)
    for (size_t k = j + 1; k < profile.points.size(); ++k) {
      const double d = (profile.points[j].z - profile.points[k].z).norm();
      if (!(d > 4.0 * profile.cutoff_radius))
        v.push_back("points " + std::to_string(j) + "," + std::to_string(k) +
                    ": patches overlap (|z_j - z_k| = " + std::to_string(d) +
                    " <= 4 r0)");
    }
  return v;
}

KProfile profile_from_json(const nlohmann::json& doc) {
  KProfile p;
  p.cutoff_radius = doc.at("cutoff_radius").get<double>();
  p.global_bound = doc.at("global_bound").get<double>();
  if (doc.contains("remainder_coeff"))
    p.remainder_coeff = doc.at("remainder_coeff").get<double>();
  for (const auto& jp : doc.at("points")) {
    CriticalPoint pt;
    const auto z = jp.at("z").get<std::vector<double>>();
    const auto a = jp.at("a").get<std::vector<double>>();
    pt.z = Eigen::Map<const Eigen::VectorXd>(z.data(), z.size());
    pt.a = Eigen::Map<const Eigen::VectorXd>(a.data(), a.size());
    pt.K_value = jp.at("K_value").get<double>();
    pt.beta = jp.at("beta").get<double>();
    pt.sigma = jp.at("sigma").get<double>();
    p.points.push_back(std::move(pt));
  }
  return p;
}

nlohmann::json profile_to_json(const KProfile& profile) {
  nlohmann::json doc;
  doc["cutoff_radius"] = profile.cutoff_radius;
  doc["global_bound"] = profile.global_bound;
  if (profile.remainder_coeff != 0.0) doc["remainder_coeff"] = profile.remainder_coeff;
  doc["points"] = nlohmann::json::array();
  for (const auto& pt : profile.points) {
    nlohmann::json jp;
    jp["z"] = std::vector<double>(pt.z.data(), pt.z.data() + pt.z.size());
    jp["a"] = std::vector<double>(pt.a.data(), pt.a.data() + pt.a.size());
    jp["K_value"] = pt.K_value;
    jp["beta"] = pt.beta;
    jp["sigma"] = pt.sigma;
    doc["points"].push_back(jp);
  }
  return doc;
}

KProfile load_profile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open profile file: " + path);
  nlohmann::json doc;
  in >> doc;
  return profile_from_json(doc);
}

void save_profile(const KProfile& profile, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write profile file: " + path);
  out << profile_to_json(profile).dump(2) << "\n";
}

KProfile demo_profile() {
  KProfile p;
  p.cutoff_radius = 0.4;
  p.global_bound = 2.0;
  CriticalPoint p1;
  p1.z = Eigen::Vector3d(0.0, 0.0, 0.0);
  p1.K_value = 1.0;
  p1.a = Eigen::Vector3d(-1.0, -1.0, -1.0);
  p1.beta = 1.5;
  p1.sigma = 0.5;
  CriticalPoint p2 = p1;
  p2.z = Eigen::Vector3d(2.0, 0.0, 0.0);
  p.points = {p1, p2};
  return p;
}

}  // namespace frnlab
