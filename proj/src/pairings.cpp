#include "frnlab/pairings.hpp"

#include <cmath>

#include "frnlab/special_functions.hpp"

namespace frnlab {

namespace {

// Radial factorization of an operand: X(x) = scalar(r) or vec(r) * (x - c)_axis.
struct Split {
  std::function<double(double)> scalar;
  std::function<double(double)> vec;
  bool is_vec = false;
  double decay = 0.0;
};

Split operand_split(const BubbleOp& op, const FracParams& prm) {
  const double m = prm.half_exponent();
  const double lam = op.b.scale;
  const double amp = op.b.amplitude;
  const double c0 = amplitude_constant(prm);
  auto base = [lam](double r) { return lam / (1.0 + lam * lam * r * r); };

  Split s;
  switch (op.kind) {
    case BubbleOp::Value:
      s.scalar = [=](double r) { return amp * c0 * std::pow(base(r), m); };
      s.decay = 2.0 * m;
      break;
    case BubbleOp::DScale:
      s.scalar = [=](double r) {
        const double lr2 = lam * lam * r * r;
        return amp * c0 * std::pow(base(r), m) * (m / lam) * (1.0 - lr2) / (1.0 + lr2);
      };
      s.decay = 2.0 * m;
      break;
    case BubbleOp::DCenter:
      s.vec = [=](double r) {
        return amp * c0 * std::pow(base(r), m) * 2.0 * m * lam * lam /
               (1.0 + lam * lam * r * r);
      };
      s.is_vec = true;
      s.decay = 2.0 * m + 1.0;
      break;
  }
  return s;
}

// Kernel factorization: U^p, U^(p-1) dU/dscale, or U^(p-1) dU/dcenter for a
// unit-amplitude bubble.
Split kernel_split(const BubbleOp& op, const FracParams& prm) {
  const double m = prm.half_exponent();
  const double p = prm.p;
  const double lam = op.b.scale;
  const double c0 = amplitude_constant(prm);
  auto base = [lam](double r) { return lam / (1.0 + lam * lam * r * r); };
  auto u = [=](double r) { return c0 * std::pow(base(r), m); };

  Split s;
  switch (op.kind) {
    case BubbleOp::Value:
      s.scalar = [=](double r) { return std::pow(u(r), p); };
      s.decay = 2.0 * m * p;
      break;
    case BubbleOp::DScale:
      s.scalar = [=](double r) {
        const double lr2 = lam * lam * r * r;
        return std::pow(u(r), p) * (m / lam) * (1.0 - lr2) / (1.0 + lr2);
      };
      s.decay = 2.0 * m * p;
      break;
    case BubbleOp::DCenter:
      s.vec = [=](double r) {
        return std::pow(u(r), p) * 2.0 * m * lam * lam / (1.0 + lam * lam * r * r);
      };
      s.is_vec = true;
      s.decay = 2.0 * m * p + 1.0;
      break;
  }
  return s;
}

double assemble(const Split& ka, int axis_a, const Eigen::VectorXd& ya,
                const Split& ob, int axis_b, const Eigen::VectorXd& yb,
                double scale_a, double scale_b, const FracParams& prm,
                QuadratureSpec spec) {
  const int n = prm.dim;
  const double d = (yb - ya).norm();
  spec.decay_exponent = ka.decay + ob.decay;

  const bool same = d < 1e-13 * (1.0 + ya.norm() + yb.norm());
  if (same) {
    if (ka.is_vec != ob.is_vec) return 0.0;  // odd integrand
    if (!ka.is_vec) {
      return integrate_radial([&](double r) { return ka.scalar(r) * ob.scalar(r); }, n,
                              spec, {scale_a})
          .value;
    }
    if (axis_a != axis_b) return 0.0;
    return integrate_radial([&](double r) { return r * r * ka.vec(r) * ob.vec(r); }, n,
                            spec, {scale_a})
               .value /
           n;
  }

  const Eigen::VectorXd e = (yb - ya) / d;
  auto two_center = [&](const Fn2C& F) {
    return integrate_two_center(F, n, d, scale_a, scale_b, spec).value;
  };

  if (!ka.is_vec && !ob.is_vec)
    return two_center([&](double r, double s) { return ka.scalar(r) * ob.scalar(s); });

  if (ka.is_vec && !ob.is_vec) {
    const double t1 = two_center([&](double r, double s) {
      return r * two_center_cos(r, d, s) * ka.vec(r) * ob.scalar(s);
    });
    return e[axis_a] * t1;
  }
  if (!ka.is_vec && ob.is_vec) {
    // (x - yb) = (x - ya) - d e
    const double t1 = two_center([&](double r, double s) {
      return r * two_center_cos(r, d, s) * ka.scalar(r) * ob.vec(s);
    });
    const double t0 =
        two_center([&](double r, double s) { return ka.scalar(r) * ob.vec(s); });
    return e[axis_b] * (t1 - d * t0);
  }

  // both vector factors
  const double t2par = two_center([&](double r, double s) {
    const double u = two_center_cos(r, d, s);
    return r * r * u * u * ka.vec(r) * ob.vec(s);
  });
  const double t2perp = two_center([&](double r, double s) {
                          const double u = two_center_cos(r, d, s);
                          return r * r * (1.0 - u * u) * ka.vec(r) * ob.vec(s);
                        }) /
                        (n - 1);
  const double t1 = two_center([&](double r, double s) {
    return r * two_center_cos(r, d, s) * ka.vec(r) * ob.vec(s);
  });
  const double delta = (axis_a == axis_b) ? 1.0 : 0.0;
  const double ee = e[axis_a] * e[axis_b];
  return ee * t2par + (delta - ee) * t2perp - d * ee * t1;
}

}  // namespace

double bubble_cross_integral(const BubbleOp& kernel, const BubbleOp& operand,
                             const FracParams& prm, const QuadratureSpec& spec) {
  if (std::abs(kernel.b.amplitude - 1.0) > 1e-14)
    throw std::invalid_argument("cross integrals require a unit-amplitude kernel bubble");
  Split ka = kernel_split(kernel, prm);
  Split ob = operand_split(operand, prm);
  return assemble(ka, kernel.axis, kernel.b.center, ob, operand.axis, operand.b.center,
                  1.0 / kernel.b.scale, 1.0 / operand.b.scale, prm, spec);
}

double bubble_cross_integral_radial(const BubbleOp& kernel,
                                    const Eigen::VectorXd& op_center,
                                    const std::function<double(double)>& op_profile,
                                    double op_scale, double op_decay,
                                    const FracParams& prm, const QuadratureSpec& spec) {
  if (std::abs(kernel.b.amplitude - 1.0) > 1e-14)
    throw std::invalid_argument("cross integrals require a unit-amplitude kernel bubble");
  Split ka = kernel_split(kernel, prm);
  Split ob;
  ob.scalar = op_profile;
  ob.decay = op_decay;
  return assemble(ka, kernel.axis, kernel.b.center, ob, 0, op_center,
                  1.0 / kernel.b.scale, op_scale, prm, spec);
}

double hgamma_pair(const BubbleOp& a, const BubbleOp& b, const FracParams& prm,
                   const QuadratureSpec& spec) {
  BubbleOp unit = a;
  const double amp = unit.b.amplitude;
  unit.b.amplitude = 1.0;
  const double factor = (a.kind == BubbleOp::Value) ? amp : amp * prm.p;
  return factor * bubble_cross_integral(unit, b, prm, spec);
}

}  // namespace frnlab
