#pragma once

#include <Eigen/Core>
#include <functional>

#include "frnlab/bubble.hpp"
#include "frnlab/params.hpp"
#include "frnlab/quadrature.hpp"

namespace frnlab {

// A bubble or one of its parameter derivatives, used as a pairing operand.
struct BubbleOp {
  enum Kind { Value, DScale, DCenter };
  Bubble b;
  Kind kind = Value;
  int axis = 0;

  static BubbleOp value(Bubble bb) { return {std::move(bb), Value, 0}; }
  static BubbleOp dscale(Bubble bb) { return {std::move(bb), DScale, 0}; }
  static BubbleOp dcenter(Bubble bb, int i) { return {std::move(bb), DCenter, i}; }

  double eval(const FracParams& prm, const Eigen::Ref<const Eigen::VectorXd>& x) const {
    switch (kind) {
      case Value:  return bubble_value(b, prm, x);
      case DScale: return bubble_dscale(b, prm, x);
      default:     return bubble_dcenter(b, prm, x, axis);
    }
  }
};

// Raw cross integrals against powers of a unit-amplitude bubble `a`:
//   kind Value:   int U_a^p * X
//   kind DScale:  int U_a^(p-1) dU_a/dscale * X
//   kind DCenter: int U_a^(p-1) dU_a/dcenter_i * X
// X is the operand bubble (or derivative), amplitudes of both sides included
// multiplicatively. Everything reduces to 1-D/2-D quadrature.
double bubble_cross_integral(const BubbleOp& kernel, const BubbleOp& operand,
                             const FracParams& prm, const QuadratureSpec& spec = {});

// Same kernel against a generic radial profile (scalar operand only).
double bubble_cross_integral_radial(const BubbleOp& kernel,
                                    const Eigen::VectorXd& op_center,
                                    const std::function<double(double)>& op_profile,
                                    double op_scale, double op_decay,
                                    const FracParams& prm,
                                    const QuadratureSpec& spec = {});

// H^gamma inner product through the exact identity: <U_a-kind, X_b>.
// Valid whenever the operand does not depend on the kernel's parameters.
double hgamma_pair(const BubbleOp& a, const BubbleOp& b, const FracParams& prm,
                   const QuadratureSpec& spec = {});

}  // namespace frnlab
