#include "chermnykh/stability.hpp"

#include <algorithm>
#include <cmath>

#include "chermnykh/errors.hpp"
#include "chermnykh/parallel.hpp"
#include "chermnykh/roots.hpp"

namespace chermnykh {

std::string to_string(Verdict verdict) {
  return verdict == Verdict::Stable ? "stable" : "unstable";
}

Quartic characteristic_coefficients(const Hessian& h, double n2) {
  return {4.0 * n2 - h.xx - h.yy, h.xx * h.yy - h.xy * h.xy};
}

Quartic characteristic_coefficients(const EquilibriumPoint& point, const Model& model) {
  const double rel = relative_residual(model, point.position());
  if (!(rel <= 1e-8)) {
    throw PreconditionError("point (" + std::to_string(point.x) + ", " + std::to_string(point.y) +
                            ") is not an equilibrium: relative residual " + std::to_string(rel));
  }
  return characteristic_coefficients(model.omega_hessian(point.position()), model.n2());
}

std::array<std::complex<double>, 4> solve_quartic(double p, double q) {
  using C = std::complex<double>;
  const C disc = std::sqrt(C(p * p - 4.0 * q, 0.0));
  // Pick the root of z^2 + p z + q without cancellation, then use z1 z2 = q.
  const C big = (p >= 0.0) ? (-p - disc) / 2.0 : (-p + disc) / 2.0;
  const C small = (big == C(0.0, 0.0)) ? C(0.0, 0.0) : C(q, 0.0) / big;
  const C s1 = std::sqrt(big);
  const C s2 = std::sqrt(small);
  return {s1, -s1, s2, -s2};
}

StabilityReport classify(const EquilibriumPoint& point, const Model& model) {
  StabilityReport r;
  r.point = point;
  r.quartic = characteristic_coefficients(point, model);
  r.hessian = model.omega_hessian(point.position());
  r.discriminant = r.quartic.p * r.quartic.p - 4.0 * r.quartic.q;
  r.lambdas = solve_quartic(r.quartic.p, r.quartic.q);
  r.max_real = r.lambdas[0].real();
  for (const auto& l : r.lambdas) r.max_real = std::max(r.max_real, l.real());
  r.verdict = r.max_real <= kMarginalRe ? Verdict::Stable : Verdict::Unstable;
  return r;
}

L4Terms l4_condition_terms(const Model& model, const EquilibriumPoint& l4) {
  const auto& p = model.params();
  const double mu = p.mu;
  const double x = l4.x;
  const double y = l4.y;
  const double r1 = std::hypot(x + mu, y);
  const double r2 = std::hypot(x + mu - 1.0, y);
  const double r0 = std::hypot(x, y);
  const double r1_5 = std::pow(r1, 5);
  const double r2_5 = std::pow(r2, 5);
  const double r0_5 = std::pow(r0, 5);
  const double obl = 1.0 + 2.5 * p.a2 / (r2 * r2);

  L4Terms t;
  t.p_l4 = model.n2() - 3.0 * mu * p.a2 / r2_5;
  double gamma = p.q1 / (r1_5 * r2_5) * obl;
  if (model.has_disk()) {
    const double a = p.disk.a;
    const double b = p.disk.b;
    const double shape = 2.0 * (b - a) / (a * b) + std::log(b / a) / (2.0 * r0);
    const double chpi = p.disk.c * p.disk.h * p.pi();
    t.p_l4 -= 0.375 * model.disk_log() / (r0 * r0 * r0 * r0);
    gamma += p.q1 * mu / (r1_5 * r0_5) * shape + chpi * (1.0 - mu) / (r0_5 * r2_5) * obl * shape;
  }
  t.gamma0 = y * y * gamma;
  t.q_l4 = 9.0 * mu * (1.0 - mu) * t.gamma0;
  return t;
}

namespace {

struct L4Sample {
  Point2 l4;
  double d;
};

SystemParams with_mu(SystemParams p, double mu) {
  p.mu = mu;
  return p;
}

std::optional<L4Sample> follow_l4(const SystemParams& base, double mu, std::optional<Point2> seed) {
  const Model model(with_mu(base, mu));
  std::optional<Point2> l4;
  if (seed) l4 = newton_refine(model, *seed);
  if (!l4 || l4->y <= 0.0) {
    const auto pair = triangular_points(model, TriangularMethod::NewtonRefined);
    if (pair.l4.warning) return std::nullopt;
    l4 = pair.l4.position();
  }
  const Quartic pq = characteristic_coefficients(model.omega_hessian(*l4), model.n2());
  return L4Sample{*l4, pq.p * pq.p - 4.0 * pq.q};
}

}  // namespace

CriticalMassResult critical_mass(const SystemParams& base, const CriticalMassOptions& opts) {
  if (!(opts.mu_lo > 0.0 && opts.mu_hi <= 0.5 && opts.mu_lo < opts.mu_hi)) {
    throw ModelError("critical_mass: bracket must lie inside (0, 0.5]");
  }
  const double top = std::nextafter(opts.mu_hi, 0.0);
  auto sample = [&](double mu, std::optional<Point2> seed) {
    auto s = follow_l4(base, mu, seed);
    if (!s) throw NumericError("critical_mass: L4 lost at mu = " + std::to_string(mu), mu, mu);
    return *s;
  };

  double lo = opts.mu_lo;
  L4Sample s_lo = sample(lo, std::nullopt);
  CriticalMassResult out;
  if (s_lo.d < 0.0) {
    out.mu_c = lo;
    out.discriminant = s_lo.d;
    return out;
  }
  const auto steps = static_cast<long>(std::ceil((top - lo) / opts.scan_step));
  double hi = lo;
  std::optional<L4Sample> s_hi;
  for (long i = 1; i <= steps; ++i) {
    const double mu = (i == steps) ? top : opts.mu_lo + static_cast<double>(i) * opts.scan_step;
    const L4Sample s = sample(mu, s_lo.l4);
    if (s.d < 0.0) {
      hi = mu;
      s_hi = s;
      break;
    }
    lo = mu;
    s_lo = s;
  }
  if (!s_hi) {
    out.mu_c = opts.mu_hi;
    out.saturated = true;
    out.discriminant = s_lo.d;
    return out;
  }
  while (hi - lo > opts.mu_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const L4Sample s = sample(mid, s_lo.l4);
    if (s.d < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      s_lo = s;
    }
  }
  out.mu_c = lo;
  out.discriminant = s_lo.d;
  return out;
}

SystemParams with_outer_radius(const SystemParams& base, double b, DiskHold hold,
                               double held_value) {
  SystemParams p = base;
  if (hold == DiskHold::Mass) {
    p.disk = DiskProfile::from_mass(base.disk.a, b, base.disk.h, held_value, base.pi_mode);
  } else {
    p.disk.b = b;
    p.disk.c = held_value;
  }
  return p;
}

namespace {

std::vector<double> grid(double lo, double hi, double step) {
  std::vector<double> out;
  const auto cells = static_cast<long>(std::llround((hi - lo) / step));
  for (long i = 0; i <= cells; ++i) out.push_back(i == cells ? hi : lo + static_cast<double>(i) * step);
  return out;
}

}  // namespace

CriticalMassCurve critical_mass_curve(const SystemParams& base, double b_lo, double b_hi,
                                      double step, DiskHold hold, double held_value,
                                      const CriticalMassOptions& opts) {
  CriticalMassCurve curve;
  curve.q1 = base.q1;
  curve.a2 = base.a2;
  const auto bs = grid(b_lo, b_hi, step);
  curve.samples.resize(bs.size());
  parallel_for(bs.size(), [&](std::size_t i) {
    const auto r = critical_mass(with_outer_radius(base, bs[i], hold, held_value), opts);
    curve.samples[i] = {bs[i], r.mu_c, r.saturated};
  });
  return curve;
}

namespace {

BandSample band_sample(PointLabel label, const SystemParams& base, double b,
                       const BandOptions& opts) {
  BandSample s;
  s.b = b;
  const Model model(with_outer_radius(base, b, opts.hold, opts.held_value));
  const Interval iv = interval_for(label);
  const auto roots = collinear_roots(model, iv);
  if (roots.empty()) return s;
  s.x = roots.front();
  EquilibriumPoint e;
  e.label = label;
  e.x = s.x;
  e.interval = iv;
  s.verdict = classify(e, model).verdict;
  return s;
}

bool is_stable(const BandSample& s) { return s.verdict && *s.verdict == Verdict::Stable; }

}  // namespace

BandScan stability_band_scan(PointLabel label, const SystemParams& base, const BandOptions& opts) {
  if (interval_for(label) == Interval::OffAxis) {
    throw ModelError("band scan needs a collinear point label");
  }
  if (!(opts.b_lo >= base.disk.a && opts.b_hi > opts.b_lo && opts.step > 0.0)) {
    throw ModelError("band scan needs a <= b_lo < b_hi and a positive step");
  }
  BandScan scan;
  scan.label = label;
  const auto bs = grid(opts.b_lo, opts.b_hi, opts.step);
  scan.samples.resize(bs.size());
  parallel_for(bs.size(), [&](std::size_t i) {
    scan.samples[i] = band_sample(label, base, bs[i], opts);
  });

  auto stable_at = [&](double b) { return is_stable(band_sample(label, base, b, opts)); };
  double open_at = opts.b_lo;
  bool open = false;
  for (std::size_t i = 0; i < scan.samples.size(); ++i) {
    const auto& s = scan.samples[i];
    if (!s.verdict) scan.gaps.push_back(s.b);
    const bool st = is_stable(s);
    const bool prev = i > 0 && is_stable(scan.samples[i - 1]);
    if (st && !prev) {
      open = true;
      open_at = (i == 0) ? s.b
                         : roots::bisect_predicate(stable_at, scan.samples[i - 1].b, s.b,
                                                   opts.refine_tol);
    } else if (!st && prev) {
      const double end =
          roots::bisect_predicate(stable_at, scan.samples[i - 1].b, s.b, opts.refine_tol);
      scan.stable.push_back({open_at, end});
      open = false;
    }
  }
  if (open) scan.stable.push_back({open_at, scan.samples.back().b});
  return scan;
}

}  // namespace chermnykh
