#include "chermnykh/equilibria.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "chermnykh/errors.hpp"
#include "chermnykh/roots.hpp"

namespace chermnykh {

std::string to_string(PointLabel label) {
  switch (label) {
    case PointLabel::L1: return "L1";
    case PointLabel::L2: return "L2";
    case PointLabel::L3: return "L3";
    case PointLabel::l1_new: return "l1";
    case PointLabel::L4: return "L4";
    case PointLabel::L5: return "L5";
  }
  return "?";
}

std::string to_string(Interval interval) {
  switch (interval) {
    case Interval::Right: return "right";
    case Interval::MidRight: return "mid_right";
    case Interval::MidLeft: return "mid_left";
    case Interval::Left: return "left";
    case Interval::OffAxis: return "off_axis";
  }
  return "?";
}

std::string to_string(Method method) {
  switch (method) {
    case Method::NumericRoot: return "numeric";
    case Method::Series: return "series";
    case Method::NewtonRefined: return "newton";
  }
  return "?";
}

std::optional<PointLabel> parse_label(const std::string& text) {
  if (text == "L1") return PointLabel::L1;
  if (text == "L2") return PointLabel::L2;
  if (text == "L3") return PointLabel::L3;
  if (text == "l1" || text == "l1_new") return PointLabel::l1_new;
  if (text == "L4") return PointLabel::L4;
  if (text == "L5") return PointLabel::L5;
  return std::nullopt;
}

Interval interval_of(double x, const Model& model) {
  const double mu = model.mu();
  if (x == -mu || x == 1.0 - mu || (x == 0.0 && model.has_disk())) {
    throw DomainError("x = " + std::to_string(x) + " is a singular point of K(x)");
  }
  if (x > 1.0 - mu) return Interval::Right;
  if (x >= 0.0) return Interval::MidRight;
  if (x > -mu) return Interval::MidLeft;
  return Interval::Left;
}

PointLabel label_for(Interval interval) {
  switch (interval) {
    case Interval::Right: return PointLabel::L1;
    case Interval::MidRight: return PointLabel::L2;
    case Interval::MidLeft: return PointLabel::l1_new;
    case Interval::Left: return PointLabel::L3;
    case Interval::OffAxis: break;
  }
  throw DomainError("off-axis interval has no collinear label");
}

Interval interval_for(PointLabel label) {
  switch (label) {
    case PointLabel::L1: return Interval::Right;
    case PointLabel::L2: return Interval::MidRight;
    case PointLabel::l1_new: return Interval::MidLeft;
    case PointLabel::L3: return Interval::Left;
    default: return Interval::OffAxis;
  }
}

double k_of_x(const Model& model, double x) {
  const double mu = model.mu();
  const auto& p = model.params();
  const Interval where = interval_of(x, model);

  const double s1 = x + mu;
  const double s2 = x + mu - 1.0;
  const double primary1 = (1.0 - mu) * p.q1 / (s1 * s1);
  const double primary2 = mu / (s2 * s2) + 1.5 * mu * p.a2 / (s2 * s2 * s2 * s2);
  double disk_lin = 0.0;
  double disk_log = 0.0;
  if (model.has_disk()) {
    disk_lin = 2.0 * model.disk_linear() / (x * x);
    disk_log = 0.375 * model.disk_log() / (x * x * x);
  }
  const double centrifugal = model.n2() * x;

  switch (where) {
    case Interval::Right:
      return centrifugal - primary1 - primary2 - disk_lin - disk_log;
    case Interval::MidRight:
      return centrifugal - primary1 + primary2 - disk_lin - disk_log;
    case Interval::MidLeft:
      return centrifugal - primary1 + primary2 + disk_lin - disk_log;
    case Interval::Left:
      return centrifugal + primary1 + primary2 + disk_lin - disk_log;
    case Interval::OffAxis:
      break;
  }
  return 0.0;
}

double relative_residual(const Model& model, Point2 p) {
  const double mu = model.mu();
  const auto& prm = model.params();
  const double r1 = std::hypot(p.x + mu, p.y);
  const double r2 = std::hypot(p.x + mu - 1.0, p.y);
  const double r = std::hypot(p.x, p.y);
  double scale = model.n2() * r + (1.0 - mu) * prm.q1 / (r1 * r1) + mu / (r2 * r2) +
                 1.5 * mu * prm.a2 / (r2 * r2 * r2 * r2);
  if (model.has_disk()) {
    scale += 2.0 * model.disk_linear() / (r * r) + 0.375 * model.disk_log() / (r * r * r);
  }
  const Gradient g = model.omega_gradient(p);
  return std::hypot(g.x, g.y) / scale;
}

namespace {

struct Span {
  double lo;
  double hi;
};

Span search_span(const Model& model, Interval interval, const CollinearScan& scan) {
  const double mu = model.mu();
  const double eps = scan.exclusion;
  switch (interval) {
    case Interval::Right: return {1.0 - mu + eps, scan.x_max};
    case Interval::MidRight: return {model.has_disk() ? eps : 0.0, 1.0 - mu - eps};
    case Interval::MidLeft: return {-mu + eps, -eps};
    case Interval::Left: return {-scan.x_max, -mu - eps};
    case Interval::OffAxis: break;
  }
  return {0.0, 0.0};
}

EquilibriumPoint make_point(const Model& model, PointLabel label, Point2 p, Interval interval,
                            Method method) {
  EquilibriumPoint e;
  e.label = label;
  e.x = p.x;
  e.y = p.y;
  e.interval = interval;
  e.method = method;
  const Gradient g = model.omega_gradient(p);
  e.residual = std::hypot(g.x, g.y);
  e.relative_residual = relative_residual(model, p);
  return e;
}

}  // namespace

std::vector<double> collinear_roots(const Model& model, Interval interval,
                                    const CollinearScan& scan) {
  const Span span = search_span(model, interval, scan);
  std::vector<double> out;
  if (!(span.hi > span.lo)) return out;
  // Keep at least ~200 cells across narrow intervals such as (-mu, 0).
  const double step = std::min(scan.step, (span.hi - span.lo) / 200.0);
  auto k = [&](double x) { return k_of_x(model, x); };
  for (const auto& br : roots::scan_sign_changes(k, span.lo, span.hi, step)) {
    const double x = roots::polish(k, br.lo, br.hi, scan.ftol);
    if (interval_of(x, model) == interval) out.push_back(x);
  }
  return out;
}

std::vector<KSample> k_curve(const Model& model, Interval interval, double x_max, int samples,
                             double exclusion) {
  CollinearScan scan;
  scan.x_max = x_max;
  scan.exclusion = exclusion;
  const Span span = search_span(model, interval, scan);
  std::vector<KSample> out;
  if (!(span.hi > span.lo) || samples < 2) return out;
  for (int i = 0; i < samples; ++i) {
    const double x = span.lo + (span.hi - span.lo) * i / (samples - 1);
    out.push_back({x, k_of_x(model, x)});
  }
  return out;
}

int sign_changes(const std::vector<KSample>& curve) {
  int n = 0;
  for (std::size_t i = 1; i < curve.size(); ++i) {
    if ((curve[i - 1].k < 0.0) != (curve[i].k < 0.0)) ++n;
  }
  return n;
}

std::vector<EquilibriumPoint> collinear_points(const Model& model, const CollinearScan& scan) {
  std::vector<EquilibriumPoint> out;
  for (Interval iv : {Interval::Right, Interval::MidRight, Interval::MidLeft, Interval::Left}) {
    for (double x : collinear_roots(model, iv, scan)) {
      out.push_back(make_point(model, label_for(iv), {x, 0.0}, iv, Method::NumericRoot));
    }
  }
  return out;
}

TriangularDeltas triangular_deltas(const Model& model) {
  const auto& p = model.params();
  const double mu = p.mu;
  const double q23 = std::cbrt(p.q1 * p.q1);
  // Squared distance of the unperturbed triangular point from the origin.
  const double r0_sq = mu * mu + q23 * (1.0 - mu);
  double disk = 0.0;
  if (model.has_disk()) {
    disk = 2.0 * model.disk_linear() / std::pow(r0_sq, 1.5) +
           0.375 * model.disk_log() / (r0_sq * r0_sq);
  }
  TriangularDeltas d;
  d.delta1 = (1.0 - model.n2() + disk) / 3.0;
  d.delta2 = (1.0 + 1.5 * p.a2 - model.n2() + disk) / (3.0 * (1.0 + 2.5 * p.a2));
  return d;
}

std::optional<Point2> newton_refine(const Model& model, Point2 seed, const NewtonOptions& opts) {
  Point2 p = seed;
  for (int it = 0; it < opts.max_iter; ++it) {
    Gradient g;
    Hessian h;
    try {
      g = model.omega_gradient(p);
      h = model.omega_hessian(p);
    } catch (const DomainError&) {
      return std::nullopt;
    }
    if (std::hypot(g.x, g.y) <= opts.tol) return p;
    const double det = h.xx * h.yy - h.xy * h.xy;
    if (det == 0.0 || !std::isfinite(det)) return std::nullopt;
    const double dx = (h.yy * g.x - h.xy * g.y) / det;
    const double dy = (h.xx * g.y - h.xy * g.x) / det;
    p.x -= dx;
    p.y -= dy;
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return std::nullopt;
    // Rounding floor reached: the step no longer changes the iterate.
    if (std::hypot(dx, dy) <= 1e-15 * (1.0 + std::hypot(p.x, p.y))) {
      return relative_residual(model, p) < 1e-10 ? std::optional<Point2>(p) : std::nullopt;
    }
  }
  return std::nullopt;
}

TriangularPair triangular_points(const Model& model, TriangularMethod method) {
  const auto& prm = model.params();
  const double q13 = std::cbrt(prm.q1);
  const double q23 = q13 * q13;
  TriangularPair pair;
  pair.deltas = triangular_deltas(model);
  const double d1 = pair.deltas.delta1;
  const double d2 = pair.deltas.delta2;

  const double radicand = 1.0 - q23 / 4.0 + (2.0 - q23) * d1 + d2;
  if (radicand < 0.0) {
    throw DomainError("no off-axis equilibrium: triangular y radicand is negative");
  }
  Point2 series{q23 / 2.0 - prm.mu + (q23 * d1 - d2), q13 * std::sqrt(radicand)};

  Point2 l4 = series;
  Method used = Method::Series;
  bool warning = false;
  if (method == TriangularMethod::NewtonRefined) {
    used = Method::NewtonRefined;
    std::optional<Point2> refined = newton_refine(model, series);
    if (!refined || refined->y <= 0.0) {
      // Unperturbed seed: r1 = q1^(1/3), r2 = 1.
      refined = newton_refine(model, {q23 / 2.0 - prm.mu, q13 * std::sqrt(1.0 - q23 / 4.0)});
    }
    if (refined && refined->y > 0.0) {
      l4 = *refined;
    } else {
      used = Method::Series;
      warning = true;
    }
  }
  pair.l4 = make_point(model, PointLabel::L4, l4, Interval::OffAxis, used);
  pair.l5 = make_point(model, PointLabel::L5, {l4.x, -l4.y}, Interval::OffAxis, used);
  pair.l4.warning = pair.l5.warning = warning;
  return pair;
}

}  // namespace chermnykh
