// Deterministic adaptive quadrature: Gauss-Kronrod 15(7) segments in 1-D,
// a nested (r, theta) reduction for two-center integrands, and an adaptive
// Genz-Malik cubature over box covers for everything else. Unbounded domains
// are truncated at a far-field radius and closed with a fitted power-law
// tail. No randomness anywhere; identical inputs give identical bits.

#include "frnlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <queue>

#include "frnlab/special_functions.hpp"

namespace frnlab {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Gauss-Kronrod 15-point nodes and weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct PanelResult {
  double value = 0.0;
  double error = 0.0;
  double resabs = 0.0;
};

PanelResult gk15(const Fn1D& f, double a, double b) {
  const double hlgth = 0.5 * (b - a);
  const double centre = 0.5 * (a + b);

  double fv1[7], fv2[7];
  const double fc = f(centre);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk[j];
    fv1[j] = f(centre - absc);
    fv2[j] = f(centre + absc);
    const double fsum = fv1[j] + fv2[j];
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    resk += kWgk[j] * fsum;
    resabs += kWgk[j] * (std::abs(fv1[j]) + std::abs(fv2[j]));
  }
  const double reskh = resk * 0.5;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j)
    resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  PanelResult r;
  r.value = resk * hlgth;
  r.resabs = resabs * std::abs(hlgth);
  resasc *= std::abs(hlgth);
  double err = std::abs((resk - resg) * hlgth);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  if (r.resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    err = std::max(err, 50.0 * kEps * r.resabs);
  r.error = err;
  return r;
}

struct Segment {
  double a, b;
  PanelResult res;
  int id;
};

struct SegmentWorse {
  bool operator()(const Segment& s, const Segment& t) const {
    if (s.res.error != t.res.error) return s.res.error < t.res.error;
    return s.id > t.id;  // older segment first on ties
  }
};

double env_budget() {
  static const double value = [] {
    const char* s = std::getenv("FRNLAB_QUAD_BUDGET");
    if (!s) return -1.0;
    char* end = nullptr;
    double v = std::strtod(s, &end);
    return (end != s && v >= 1.0) ? v : -1.0;
  }();
  return value;
}

}  // namespace

int QuadratureSpec::default_max_subdivisions() {
  double env = env_budget();
  if (env > 0) return static_cast<int>(env);
  return 20000;
}

IntegralResult integrate_segment(const Fn1D& f, double a, double b,
                                 const QuadratureSpec& spec,
                                 const std::vector<double>& breakpoints) {
  if (!(b > a)) return IntegralResult{};

  std::vector<double> knots;
  knots.push_back(a);
  for (double x : breakpoints)
    if (x > a * (1.0 + 1e-14) + 1e-300 && x < b && x > a) knots.push_back(x);
  knots.push_back(b);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> heap;
  std::vector<Segment> done;
  int next_id = 0;
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    Segment s{knots[i], knots[i + 1], gk15(f, knots[i], knots[i + 1]), next_id++};
    heap.push(s);
  }

  auto totals = [&] {
    std::vector<Segment> all(done);
    std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Segment& s, const Segment& t) { return s.a < t.a; });
    double val = 0, err = 0, resabs = 0;
    for (const auto& s : all) {
      val += s.res.value;
      err += s.res.error;
      resabs += s.res.resabs;
    }
    return std::array<double, 3>{val, err, resabs};
  };

  int splits = 0;
  double val = 0, err = 0, resabs = 0;
  {
    auto t = totals();
    val = t[0];
    err = t[1];
    resabs = t[2];
  }
  while (true) {
    const double target =
        std::max({spec.abs_tol, spec.rel_tol * std::abs(val), 100.0 * kEps * resabs});
    if (err <= target) break;
    if (splits >= spec.max_subdivisions || heap.empty()) {
      IntegralResult best{val, err, splits, 0.0};
      if (err <= std::max(target * 4.0, 1e3 * kEps * resabs) || heap.empty()) break;
      throw ToleranceError("1-D quadrature budget exhausted", best);
    }
    Segment worst = heap.top();
    heap.pop();
    if (worst.res.error <= 100.0 * kEps * worst.res.resabs ||
        worst.b - worst.a < 16.0 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      done.push_back(worst);  // at roundoff; refining further cannot help
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    Segment s1{worst.a, mid, gk15(f, worst.a, mid), next_id++};
    Segment s2{mid, worst.b, gk15(f, mid, worst.b), next_id++};
    heap.push(s1);
    heap.push(s2);
    ++splits;
    val += s1.res.value + s2.res.value - worst.res.value;
    err += s1.res.error + s2.res.error - worst.res.error;
    resabs += s1.res.resabs + s2.res.resabs - worst.res.resabs;
    if (splits % 64 == 0) {  // refresh running sums in a fixed order
      auto t = totals();
      val = t[0];
      err = t[1];
      resabs = t[2];
    }
  }
  auto t = totals();
  return IntegralResult{t[0], t[1], splits, 0.0};
}

namespace {

// Geometric ladder of breakpoints around a radius, clipped to (0, hi).
void ladder(std::vector<double>& out, double r, double width, double hi) {
  for (double w : {0.0625 * width, 0.25 * width, width, 4.0 * width, 16.0 * width}) {
    if (r - w > 0 && r - w < hi) out.push_back(r - w);
    if (r + w > 0 && r + w < hi) out.push_back(r + w);
  }
  if (r > 0 && r < hi) out.push_back(r);
}

// Two-point power-law fit h(r) ~ A r^-q + B r^-(q+2) closing
// int_R^inf h(r) r^(dim-1) dr. Returns {tail, tail_error}.
std::array<double, 2> power_tail(const Fn1D& h, int dim, double R, double q) {
  if (std::isinf(q)) return {0.0, 0.0};
  if (!(q > dim + 0.25))
    throw std::domain_error("declared far-field decay too weak for a convergent tail");
  const double r1 = 0.7 * R, r2 = R;
  const double u1 = h(r1) * std::pow(r1, q);
  const double u2 = h(r2) * std::pow(r2, q);
  const double B = (u1 - u2) / (1.0 / (r1 * r1) - 1.0 / (r2 * r2));
  const double A = u2 - B / (r2 * r2);
  const double termA = A * std::pow(R, dim - q) / (q - dim);
  const double termB = B * std::pow(R, dim - q - 2.0) / (q + 2.0 - dim);
  return {termA + termB, 0.3 * std::abs(termB) + 8.0 * kEps * std::abs(termA)};
}

double auto_radius(const QuadratureSpec& spec, double max_scale, double max_dist) {
  if (spec.far_field_radius > 0) return spec.far_field_radius;
  return 1000.0 * std::max(1.0, max_scale) + 2.0 * max_dist;
}

}  // namespace

IntegralResult integrate_radial_profile(const Fn1D& h, int dim,
                                        const QuadratureSpec& spec,
                                        const std::vector<double>& feature_radii) {
  double max_feat = 0.0;
  for (double r : feature_radii) max_feat = std::max(max_feat, r);
  const double R = auto_radius(spec, max_feat, 0.0);

  std::vector<double> brk;
  double smallest = R;
  for (double r : feature_radii)
    if (r > 0) smallest = std::min(smallest, r);
  for (double w = smallest * 1e-3; w < R; w *= 4.0) brk.push_back(w);
  for (double r : feature_radii) ladder(brk, r, std::max(r * 0.25, smallest * 0.25), R);

  Fn1D g = [&](double r) { return h(r) * std::pow(r, dim - 1); };
  IntegralResult res = integrate_segment(g, 0.0, R, spec, brk);
  auto [tail, tail_err] = power_tail(h, dim, R, spec.decay_exponent);
  res.value += tail;
  res.tail_correction = tail;
  res.error_estimate += tail_err;
  return res;
}

IntegralResult integrate_radial(const Fn1D& g, int dim, const QuadratureSpec& spec,
                                const std::vector<double>& feature_radii) {
  IntegralResult r = integrate_radial_profile(g, dim, spec, feature_radii);
  const double area = sphere_area(dim);
  r.value *= area;
  r.error_estimate *= area;
  r.tail_correction *= area;
  return r;
}

IntegralResult integrate_two_center(const Fn2C& F, int dim, double dist,
                                    double scale_a, double scale_b,
                                    const QuadratureSpec& spec) {
  if (dim < 2) throw std::domain_error("two-center reduction needs dim >= 2");
  if (!(dist > 0)) throw std::domain_error("two-center reduction needs distinct centers");
  const double Sang = polar_angle_measure(dim);
  const double R = auto_radius(spec, std::max({scale_a, scale_b, 1.0}), dist);

  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(0.25 * spec.rel_tol, 1e-14);
  inner.abs_tol = 0.0;

  const double spower = dim - 2;  // sin^{dim-2}(theta) weight
  auto theta_integral = [&](double r) {
    const double theta0 =
        std::min(1.0, std::max(scale_b, 1e-3 * dist) / std::max(dist, 1e-300));
    std::vector<double> brk;
    for (double t = 0.125 * theta0; t < std::numbers::pi; t *= 4.0) brk.push_back(t);
    brk.push_back(0.5 * std::numbers::pi);
    Fn1D g = [&](double th) {
      const double sh = std::sin(0.5 * th);
      const double s = std::sqrt((r - dist) * (r - dist) + 4.0 * r * dist * sh * sh);
      const double w = (spower == 0) ? 1.0 : std::pow(std::sin(th), spower);
      return F(r, s) * w;
    };
    return integrate_segment(g, 0.0, std::numbers::pi, inner, brk).value;
  };

  std::vector<double> brk;
  double smallest = std::min({scale_a, scale_b, dist});
  for (double w = smallest * 1e-3; w < R; w *= 4.0) brk.push_back(w);
  ladder(brk, dist, scale_b, R);
  Fn1D g = [&](double r) { return theta_integral(r) * std::pow(r, dim - 1); };
  IntegralResult res = integrate_segment(g, 0.0, R, spec, brk);
  res.value *= Sang;
  res.error_estimate *= Sang;

  Fn1D profile = [&](double r) { return Sang * theta_integral(r); };
  auto [tail, tail_err] = power_tail(profile, dim, R, spec.decay_exponent);
  res.value += tail;
  res.tail_correction = tail;
  res.error_estimate += tail_err;
  return res;
}

// ---------------------------------------------------------------------------
// Genz-Malik adaptive cubature
// ---------------------------------------------------------------------------

namespace {

struct Box {
  Eigen::VectorXd lo, hi;
  double width(int d) const { return hi[d] - lo[d]; }
  double volume() const { return (hi - lo).prod(); }
  bool contains(const Eigen::VectorXd& p) const {
    return (p.array() > lo.array()).all() && (p.array() < hi.array()).all();
  }
};

struct GMWeights {
  double w1, w2, w3, w4, w5;       // degree-7 rule
  double e1, e2, e3, e4;           // embedded degree-5 rule
  explicit GMWeights(int n) {
    w1 = (12824.0 - 9120.0 * n + 400.0 * n * n) / 19683.0;
    w2 = 980.0 / 6561.0;
    w3 = (1820.0 - 400.0 * n) / 19683.0;
    w4 = 200.0 / 19683.0;
    w5 = 6859.0 / 19683.0 / std::pow(2.0, n);
    e1 = (729.0 - 950.0 * n + 50.0 * n * n) / 729.0;
    e2 = 245.0 / 486.0;
    e3 = (265.0 - 100.0 * n) / 1458.0;
    e4 = 25.0 / 729.0;
  }
};

const double kL2 = std::sqrt(9.0 / 70.0);
const double kL3 = std::sqrt(9.0 / 10.0);
const double kL4 = std::sqrt(9.0 / 10.0);
const double kL5 = std::sqrt(9.0 / 19.0);

struct GMResult {
  double value = 0, error = 0, resabs = 0;
  int split_axis = 0;
};

GMResult gm_rule(const FnND& f, const Box& box, const GMWeights& w) {
  const int n = static_cast<int>(box.lo.size());
  const Eigen::VectorXd c = 0.5 * (box.lo + box.hi);
  const Eigen::VectorXd h = 0.5 * (box.hi - box.lo);
  const double vol = box.volume();

  Eigen::VectorXd x = c;
  const double fc = f(c);
  double sum2 = 0, sum3 = 0, sum4 = 0, sum5 = 0;
  double absacc = std::abs(fc) * std::abs(w.w1);

  double max_diff = -1.0;
  int split_axis = 0;
  const double ratio = (kL2 * kL2) / (kL3 * kL3);
  for (int i = 0; i < n; ++i) {
    x = c;
    x[i] = c[i] - kL2 * h[i];
    const double f2m = f(x);
    x[i] = c[i] + kL2 * h[i];
    const double f2p = f(x);
    x[i] = c[i] - kL3 * h[i];
    const double f3m = f(x);
    x[i] = c[i] + kL3 * h[i];
    const double f3p = f(x);
    sum2 += f2m + f2p;
    sum3 += f3m + f3p;
    absacc += std::abs(w.w2) * (std::abs(f2m) + std::abs(f2p)) +
              std::abs(w.w3) * (std::abs(f3m) + std::abs(f3p));
    const double diff =
        std::abs(f2m + f2p - 2.0 * fc - ratio * (f3m + f3p - 2.0 * fc));
    if (diff > max_diff + 1e-30 ||
        (diff > max_diff - 1e-30 && h[i] > h[split_axis])) {
      max_diff = diff;
      split_axis = i;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          x = c;
          x[i] = c[i] + si * kL4 * h[i];
          x[j] = c[j] + sj * kL4 * h[j];
          const double v = f(x);
          sum4 += v;
          absacc += std::abs(w.w4) * std::abs(v);
        }
  const int corners = 1 << n;
  for (int m = 0; m < corners; ++m) {
    x = c;
    for (int i = 0; i < n; ++i)
      x[i] = c[i] + ((m >> i) & 1 ? kL5 : -kL5) * h[i];
    const double v = f(x);
    sum5 += v;
    absacc += std::abs(w.w5) * std::abs(v);
  }

  GMResult r;
  const double i7 = w.w1 * fc + w.w2 * sum2 + w.w3 * sum3 + w.w4 * sum4 + w.w5 * sum5;
  const double i5 = w.e1 * fc + w.e2 * sum2 + w.e3 * sum3 + w.e4 * sum4;
  r.value = vol * i7;
  r.error = vol * std::abs(i7 - i5);
  r.resabs = vol * absacc;
  r.split_axis = split_axis;
  if (r.resabs > std::numeric_limits<double>::min() / (50.0 * kEps))
    r.error = std::max(r.error, 50.0 * kEps * r.resabs);
  return r;
}

struct Region {
  Box box;
  GMResult res;
  int id;
};

struct RegionWorse {
  bool operator()(const Region& a, const Region& b) const {
    if (a.res.error != b.res.error) return a.res.error < b.res.error;
    return a.id > b.id;
  }
};

// Peels A \ B (B nested in A, faces may touch) into at most 2*dim boxes.
void peel(const Box& A, const Box& B, std::vector<Box>& out) {
  Box cur = A;
  const int n = static_cast<int>(A.lo.size());
  for (int d = 0; d < n; ++d) {
    if (B.lo[d] > cur.lo[d] + 0.0) {
      Box piece = cur;
      piece.hi[d] = B.lo[d];
      if (piece.volume() > 0) out.push_back(piece);
      cur.lo[d] = B.lo[d];
    }
    if (B.hi[d] < cur.hi[d] - 0.0) {
      Box piece = cur;
      piece.lo[d] = B.hi[d];
      if (piece.volume() > 0) out.push_back(piece);
      cur.hi[d] = B.hi[d];
    }
  }
}

Box clip(const Box& a, const Box& b) {
  Box r;
  r.lo = a.lo.cwiseMax(b.lo);
  r.hi = a.hi.cwiseMin(b.hi);
  return r;
}

// Concentric nested boxes around a feature, geometrically growing from its
// scale until the parent box is covered.
void shells(const Box& parent, const Feature& f, std::vector<Box>& out) {
  const int n = static_cast<int>(parent.lo.size());
  double w = std::max(f.scale, 1e-300) * 2.0;
  Box inner;
  inner.lo = f.point.array() - w;
  inner.hi = f.point.array() + w;
  inner = clip(inner, parent);
  if (inner.volume() > 0) out.push_back(inner);
  for (int k = 0; k < 2048; ++k) {
    w *= 4.0;
    Box next;
    next.lo = f.point.array() - w;
    next.hi = f.point.array() + w;
    next = clip(next, parent);
    peel(next, inner, out);
    bool covers = true;
    for (int d = 0; d < n; ++d)
      covers = covers && next.lo[d] <= parent.lo[d] && next.hi[d] >= parent.hi[d];
    inner = next;
    if (covers) break;
  }
}

void build_cover(const Box& box, std::vector<Feature> feats, std::vector<Box>& out) {
  std::erase_if(feats, [&](const Feature& f) { return !box.contains(f.point); });
  if (feats.empty()) {
    out.push_back(box);
    return;
  }
  if (feats.size() == 1) {
    shells(box, feats[0], out);
    return;
  }
  const int n = static_cast<int>(box.lo.size());
  int axis = 0;
  double best_span = -1.0;
  for (int d = 0; d < n; ++d) {
    double lo = feats[0].point[d], hi = feats[0].point[d];
    for (const auto& f : feats) {
      lo = std::min(lo, f.point[d]);
      hi = std::max(hi, f.point[d]);
    }
    if (hi - lo > best_span) {
      best_span = hi - lo;
      axis = d;
    }
  }
  double lo = feats[0].point[axis], hi = feats[0].point[axis];
  for (const auto& f : feats) {
    lo = std::min(lo, f.point[axis]);
    hi = std::max(hi, f.point[axis]);
  }
  double cut = 0.5 * (lo + hi);
  for (const auto& f : feats)
    if (std::abs(f.point[axis] - cut) < 1e-12 * (1.0 + std::abs(cut)))
      cut += 1e-9 * (box.hi[axis] - box.lo[axis]);
  Box left = box, right = box;
  left.hi[axis] = cut;
  right.lo[axis] = cut;
  std::vector<Feature> fl, fr;
  for (const auto& f : feats) (f.point[axis] < cut ? fl : fr).push_back(f);
  build_cover(left, fl, out);
  build_cover(right, fr, out);
}

// Splits boxes crossing the axis planes through kink features so the kinks
// lie on region boundaries.
void split_kinks(std::vector<Box>& boxes, const std::vector<Feature>& feats) {
  for (const auto& f : feats) {
    if (!f.axis_kinks) continue;
    const double radius =
        f.kink_radius > 0 ? f.kink_radius : 8.0 * std::max(f.scale, 0.0);
    const int n = static_cast<int>(f.point.size());
    for (int d = 0; d < n; ++d) {
      const double v = f.point[d];
      std::vector<Box> next;
      next.reserve(boxes.size() + 8);
      for (const auto& b : boxes) {
        bool near = true;
        for (int e = 0; e < n; ++e) {
          const double lo = b.lo[e] - f.point[e], hi = b.hi[e] - f.point[e];
          const double dist = (lo > 0) ? lo : (hi < 0 ? -hi : 0.0);
          if (dist > radius) near = false;
        }
        if (near && b.lo[d] < v && v < b.hi[d]) {
          Box b1 = b, b2 = b;
          b1.hi[d] = v;
          b2.lo[d] = v;
          next.push_back(b1);
          next.push_back(b2);
        } else {
          next.push_back(b);
        }
      }
      boxes.swap(next);
    }
  }
}

IntegralResult gm_adaptive(const FnND& f, std::vector<Box> boxes,
                           const QuadratureSpec& spec) {
  const int n = static_cast<int>(boxes.front().lo.size());
  const GMWeights w(n);

  std::priority_queue<Region, std::vector<Region>, RegionWorse> heap;
  std::vector<Region> done;
  int next_id = 0;
  for (const auto& b : boxes) heap.push(Region{b, gm_rule(f, b, w), next_id++});

  auto totals = [&] {
    std::vector<Region> all(done);
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Region& a, const Region& b) { return a.id < b.id; });
    double val = 0, err = 0, resabs = 0;
    for (const auto& r : all) {
      val += r.res.value;
      err += r.res.error;
      resabs += r.res.resabs;
    }
    return std::array<double, 3>{val, err, resabs};
  };

  auto t0 = totals();
  double val = t0[0], err = t0[1], resabs = t0[2];
  int splits = 0;
  while (true) {
    const double target =
        std::max({spec.abs_tol, spec.rel_tol * std::abs(val), 100.0 * kEps * resabs});
    if (err <= target) break;
    if (splits >= spec.max_subdivisions || heap.empty()) {
      IntegralResult best{val, err, splits, 0.0};
      if (err <= std::max(target * 4.0, 1e3 * kEps * resabs) || heap.empty()) break;
      throw ToleranceError("cubature budget exhausted", best);
    }
    Region worst = heap.top();
    heap.pop();
    const int ax = worst.res.split_axis;
    if (worst.res.error <= 100.0 * kEps * worst.res.resabs ||
        worst.box.width(ax) <
            16.0 * kEps * std::max(std::abs(worst.box.lo[ax]), std::abs(worst.box.hi[ax]))) {
      done.push_back(worst);
      continue;
    }
    Box b1 = worst.box, b2 = worst.box;
    const double mid = 0.5 * (worst.box.lo[ax] + worst.box.hi[ax]);
    b1.hi[ax] = mid;
    b2.lo[ax] = mid;
    Region r1{b1, gm_rule(f, b1, w), next_id++};
    Region r2{b2, gm_rule(f, b2, w), next_id++};
    heap.push(r1);
    heap.push(r2);
    ++splits;
    val += r1.res.value + r2.res.value - worst.res.value;
    err += r1.res.error + r2.res.error - worst.res.error;
    resabs += r1.res.resabs + r2.res.resabs - worst.res.resabs;
    if (splits % 64 == 0) {
      auto t = totals();
      val = t[0];
      err = t[1];
      resabs = t[2];
    }
  }
  auto t = totals();
  return IntegralResult{t[0], t[1], splits, 0.0};
}

}  // namespace

IntegralResult integrate_box(const FnND& f, const Eigen::VectorXd& lo,
                             const Eigen::VectorXd& hi, const QuadratureSpec& spec) {
  if (lo.size() < 2) throw std::domain_error("cubature needs dim >= 2");
  Box root{lo, hi};
  if (!(root.volume() > 0)) return IntegralResult{};
  std::vector<Box> cover;
  build_cover(root, spec.split_centers, cover);
  split_kinks(cover, spec.split_centers);
  return gm_adaptive(f, std::move(cover), spec);
}

IntegralResult integrate_rn(const FnND& f, int dim, const QuadratureSpec& spec) {
  double max_scale = 0.0, max_dist = 0.0;
  for (const auto& feat : spec.split_centers) {
    max_scale = std::max(max_scale, feat.scale);
    max_dist = std::max(max_dist, feat.point.cwiseAbs().maxCoeff());
  }
  const double R = auto_radius(spec, max_scale, max_dist);

  Eigen::VectorXd lo = Eigen::VectorXd::Constant(dim, -R);
  Eigen::VectorXd hi = Eigen::VectorXd::Constant(dim, R);
  IntegralResult res = integrate_box(f, lo, hi, spec);

  if (!std::isinf(spec.decay_exponent)) {
    const double q = spec.decay_exponent;
    if (!(q > dim + 0.25))
      throw std::domain_error("declared far-field decay too weak for a convergent tail");
    // Average the far-field amplitude over a fixed direction set; the box
    // already covers the [R, R*sqrt(dim)] corners, so the ball-complement
    // tail is charged at 50% to the error budget.
    double acc = 0.0;
    int cnt = 0;
    const double rs = 0.999 * R;
    for (int d = 0; d < dim; ++d)
      for (int s = -1; s <= 1; s += 2) {
        Eigen::VectorXd x = Eigen::VectorXd::Zero(dim);
        x[d] = s * rs;
        acc += f(x) * std::pow(rs, q);
        ++cnt;
      }
    Eigen::VectorXd diag = Eigen::VectorXd::Constant(dim, 1.0 / std::sqrt(double(dim)));
    for (int s = -1; s <= 1; s += 2) {
      acc += f((s * rs) * diag) * std::pow(rs, q);
      ++cnt;
    }
    const double A = acc / cnt;
    const double tail = A * sphere_area(dim) * std::pow(R, dim - q) / (q - dim);
    res.value += tail;
    res.tail_correction = tail;
    res.error_estimate += 0.5 * std::abs(tail);
  }
  return res;
}

}  // namespace frnlab
