// Principal-value evaluation of (-Lap)^g for radial profiles. The singular
// ball uses the angularly symmetrized difference with the gradient term
// removed analytically; the remainder is direct kernel quadrature in polar
// coordinates with analytic power-law closures at infinity.

#include "frnlab/pv.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "frnlab/special_functions.hpp"

namespace frnlab {

RadialFn bubble_as_radial(const Bubble& b, const FracParams& prm) {
  const double m = prm.half_exponent();
  const double lam = b.scale;
  const double amp = b.amplitude * amplitude_constant(prm);
  RadialFn f;
  f.center = b.center;
  f.profile = [=](double r) { return amp * std::pow(lam / (1.0 + lam * lam * r * r), m); };
  f.dprofile = [=](double r) {
    const double den = 1.0 + lam * lam * r * r;
    return amp * std::pow(lam / den, m) * (-2.0 * m * lam * lam * r / den);
  };
  f.scale = 1.0 / lam;
  f.decay = 2.0 * m;
  return f;
}

RadialFn gaussian_fn(Eigen::VectorXd center, double width) {
  RadialFn f;
  f.center = std::move(center);
  f.profile = [width](double r) { return std::exp(-r * r / (width * width)); };
  f.dprofile = [width](double r) {
    return -2.0 * r / (width * width) * std::exp(-r * r / (width * width));
  };
  f.scale = width;
  f.decay = std::numeric_limits<double>::infinity();
  return f;
}

RadialFn rational_bump_fn(Eigen::VectorXd center, double power, double width) {
  RadialFn f;
  f.center = std::move(center);
  f.profile = [=](double r) { return std::pow(1.0 + r * r / (width * width), -power); };
  f.dprofile = [=](double r) {
    const double den = 1.0 + r * r / (width * width);
    return -2.0 * power * r / (width * width) * std::pow(den, -power - 1.0);
  };
  f.scale = width;
  f.decay = 2.0 * power;
  return f;
}

double pv_frac_laplacian(const RadialFn& f, const FracParams& prm,
                         const Eigen::Ref<const Eigen::VectorXd>& x,
                         const QuadratureSpec& spec) {
  const int n = prm.dim;
  const double g = prm.gamma;
  const double rho = (x - f.center).norm();
  const double fx = f.profile(rho);
  const double dfx = f.dprofile ? f.dprofile(rho) : 0.0;
  const bool regularize = static_cast<bool>(f.dprofile);

  const double delta = 0.1 * (f.scale + 0.5 * rho);
  const double R = 1000.0 * std::max(1.0, f.scale) + 2.0 * rho;
  const double Sang = polar_angle_measure(n);
  const double spower = n - 2;

  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(0.25 * spec.rel_tol, 1e-14);
  inner.abs_tol = 0.0;

  // Distance to the profile center from x + h, |h| = r, angle theta to the
  // center direction.
  auto dist = [&](double r, double th) {
    const double sh = std::sin(0.5 * th);
    return std::sqrt((rho - r) * (rho - r) + 4.0 * rho * r * sh * sh);
  };

  auto angular = [&](double r, bool with_grad) {
    const double th0 = std::min(1.0, std::max(f.scale, 1e-3) / std::max({rho, r, f.scale}));
    std::vector<double> brk;
    for (double t = 0.125 * th0; t < std::numbers::pi; t *= 4.0) brk.push_back(t);
    brk.push_back(0.5 * std::numbers::pi);
    Fn1D fn = [&](double th) {
      const double w = (spower == 0) ? 1.0 : std::pow(std::sin(th), spower);
      double v = fx - f.profile(dist(r, th));
      if (with_grad) v -= r * std::cos(th) * dfx;
      return v * w;
    };
    return integrate_segment(fn, 0.0, std::numbers::pi, inner, brk).value;
  };

  // Singular ball: integrand ~ r^(1-2g) after the angular cancellation.
  std::vector<double> brk_in;
  for (double t = delta * 1e-5; t < delta; t *= 4.0) brk_in.push_back(t);
  QuadratureSpec in_spec = spec;
  in_spec.abs_tol = 0.0;
  const double inner_val =
      Sang *
      integrate_segment(
          [&](double r) { return std::pow(r, n - 1 - n - 2.0 * g) * angular(r, regularize); },
          0.0, delta, in_spec, brk_in)
          .value;

  // Shell delta < |h| < R.
  std::vector<double> brk_sh;
  for (double t = delta * 4.0; t < R; t *= 4.0) brk_sh.push_back(t);
  for (double w : {0.25 * f.scale, f.scale, 4.0 * f.scale}) {
    if (rho - w > delta && rho - w < R) brk_sh.push_back(rho - w);
    if (rho + w > delta && rho + w < R) brk_sh.push_back(rho + w);
  }
  if (rho > delta && rho < R) brk_sh.push_back(rho);
  const double shell_val =
      Sang *
      integrate_segment(
          [&](double r) { return std::pow(r, -1.0 - 2.0 * g) * angular(r, false); }, delta,
          R, in_spec, brk_sh)
          .value;

  // Far field: exact kernel mass times f(x), minus the decaying remainder.
  const double far_kernel = fx * sphere_area(n) * std::pow(R, -2.0 * g) / (2.0 * g);
  double far_tail = 0.0;
  if (!std::isinf(f.decay)) {
    const double q = f.decay;
    const double A = f.profile(R) * std::pow(R, q);
    far_tail = A * sphere_area(n) * std::pow(R, -q - 2.0 * g) / (q + 2.0 * g);
  }

  return pv_normalization(prm) * (inner_val + shell_val + far_kernel - far_tail);
}

// ---------------------------------------------------------------------------
// Radial tabulation with cubic-spline interpolation
// ---------------------------------------------------------------------------

namespace {

struct Spline {
  std::vector<double> x, y, m;  // nodes, values, second derivatives

  void build() {
    const size_t n = x.size();
    m.assign(n, 0.0);
    std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);
    b[0] = 1.0;
    b[n - 1] = 1.0;
    for (size_t i = 1; i + 1 < n; ++i) {
      const double h0 = x[i] - x[i - 1], h1 = x[i + 1] - x[i];
      a[i] = h0 / 6.0;
      b[i] = (h0 + h1) / 3.0;
      c[i] = h1 / 6.0;
      d[i] = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
    }
    for (size_t i = 1; i < n; ++i) {  // Thomas algorithm
      const double w = a[i] / b[i - 1];
      b[i] -= w * c[i - 1];
      d[i] -= w * d[i - 1];
    }
    m[n - 1] = d[n - 1] / b[n - 1];
    for (size_t i = n - 1; i-- > 0;) m[i] = (d[i] - c[i] * m[i + 1]) / b[i];
  }

  double eval(double t) const {
    const size_t n = x.size();
    size_t lo = std::upper_bound(x.begin(), x.end(), t) - x.begin();
    lo = std::min(std::max<size_t>(lo, 1), n - 1);
    const size_t i = lo - 1;
    const double h = x[lo] - x[i];
    const double A = (x[lo] - t) / h, B = (t - x[i]) / h;
    return A * y[i] + B * y[lo] +
           ((A * A * A - A) * m[i] + (B * B * B - B) * m[lo]) * h * h / 6.0;
  }
};

}  // namespace

RadialFn pv_radial_table(const RadialFn& f, const FracParams& prm,
                         const QuadratureSpec& spec) {
  const double R_tab = 60.0 * std::max(1.0, f.scale);
  auto sp = std::make_shared<Spline>();
  sp->x.push_back(0.0);
  for (double r = 1e-3 * f.scale; r < R_tab; r *= 1.06) sp->x.push_back(r);
  sp->x.push_back(R_tab);

  const int dim = prm.dim;
  sp->y.resize(sp->x.size());
  for (size_t i = 0; i < sp->x.size(); ++i) {
    Eigen::VectorXd x = f.center;
    x[0] += sp->x[i];
    sp->y[i] = pv_frac_laplacian(f, prm, x, spec);
  }
  sp->build();

  // Power-law continuation beyond the table from the last two nodes.
  const size_t n = sp->x.size();
  const double r1 = sp->x[n - 8], r2 = sp->x[n - 1];
  const double v1 = sp->y[n - 8], v2 = sp->y[n - 1];
  double q = dim + 2.0 * prm.gamma;  // generic nonlocal tail
  if (std::abs(v1) > 0 && std::abs(v2) > 0 && v1 * v2 > 0)
    q = std::log(std::abs(v1 / v2)) / std::log(r2 / r1);
  q = std::min(std::max(q, dim + 0.5), 2.0 * (dim + 2.0));
  const double amp = v2 * std::pow(r2, q);

  RadialFn out;
  out.center = f.center;
  out.scale = f.scale;
  out.decay = q;
  out.profile = [sp, q, amp, R_tab](double r) {
    if (r <= R_tab) return sp->eval(r);
    return amp * std::pow(r, -q);
  };
  return out;
}

double radial_product_integral(const RadialFn& a, const RadialFn& b, int dim,
                               const QuadratureSpec& spec) {
  QuadratureSpec s = spec;
  s.decay_exponent = a.decay + b.decay;
  const double d = (a.center - b.center).norm();
  if (d < 1e-13 * (1.0 + a.center.norm())) {
    return integrate_radial([&](double r) { return a.profile(r) * b.profile(r); }, dim, s,
                            {a.scale, b.scale})
        .value;
  }
  return integrate_two_center(
             [&](double r, double t) { return a.profile(r) * b.profile(t); }, dim, d,
             a.scale, b.scale, s)
      .value;
}

double hgamma_inner(const HOperand& f, const HOperand& g, const FracParams& prm,
                    const QuadratureSpec& spec) {
  const bool f_bubble = std::holds_alternative<BubbleOp>(f);
  const bool g_bubble = std::holds_alternative<BubbleOp>(g);

  if (f_bubble) {
    BubbleOp a = std::get<BubbleOp>(f);
    const double amp = a.b.amplitude;
    a.b.amplitude = 1.0;
    const double factor = (a.kind == BubbleOp::Value) ? amp : amp * prm.p;
    if (g_bubble)
      return factor * bubble_cross_integral(a, std::get<BubbleOp>(g), prm, spec);
    const RadialFn& rg = std::get<RadialFn>(g);
    return factor * bubble_cross_integral_radial(a, rg.center, rg.profile, rg.scale,
                                                 rg.decay, prm, spec);
  }
  if (g_bubble) return hgamma_inner(g, f, prm, spec);

  const RadialFn& rf = std::get<RadialFn>(f);
  const RadialFn lam_f = pv_radial_table(rf, prm, spec);
  return radial_product_integral(lam_f, std::get<RadialFn>(g), prm.dim, spec);
}

}  // namespace frnlab
