#include "chermnykh/series.hpp"

#include <cmath>
#include <limits>

#include "chermnykh/errors.hpp"

namespace chermnykh {

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::Case1: return "case1";
    case CaseId::Case2i: return "case2i";
    case CaseId::Case2ii: return "case2ii";
    case CaseId::Case3: return "case3";
  }
  return "?";
}

Interval interval_for(CaseId id) {
  switch (id) {
    case CaseId::Case1: return Interval::Right;
    case CaseId::Case2i: return Interval::MidRight;
    case CaseId::Case2ii: return Interval::MidLeft;
    case CaseId::Case3: return Interval::Left;
  }
  return Interval::OffAxis;
}

PointLabel label_for(CaseId id) { return label_for(interval_for(id)); }

namespace {

/// Shared B-list of cases 1, 2i and 2ii.
struct BList {
  double b[11];  // b[1] .. b[10]
};

BList inner_blist(double n2, double q1, double a2, double mu, double clog) {
  const double m2 = mu * mu;
  const double m3 = m2 * mu;
  const double m4 = m3 * mu;
  BList B{};
  B.b[1] = 48 * n2 - 32 * n2 * mu;
  B.b[2] = 120 * n2 - 160 * n2 * mu + 48 * n2 * m2;
  B.b[3] = 160 * n2 - 8 * q1 + 8 * (-40 * n2 + q1) * mu + 192 * n2 * m2 - 32 * n2 * m3;
  B.b[4] = 120 * n2 - 3 * clog - 24 * q1 + 16 * (3 * q1 - 20 * n2) * mu +
           24 * (-q1 + 12 * n2) * m2 - 96 * m3 + 8 * n2 * m4;
  B.b[5] = 48 * n2 - 6 * clog - 24 * q1 - 4 * (40 * n2 + 3 * a2 - 18 * q1) * mu +
           24 * (8 * n2 - 3 * q1) * m2 + 24 * (-4 * n2 + q1) * m3 + 16 * n2 * m4;
  B.b[6] = 8 * n2 - 3 * clog - 8 * q1 - 4 * (8 * n2 + 15 * a2 - 8 * q1) * mu +
           12 * (4 * n2 + 3 * a2 - 4 * q1) * m2 + 32 * (-n2 + q1) * m3 + 8 * (n2 - q1) * m4;
  B.b[7] = -40 * (1 + 3 * a2) * mu + 48 * (2 + 3 * a2) * m2 - 36 * (2 + a2) * m3 + 16 * m4;
  B.b[8] = -8 * (1 + 15 * a2) * mu + 24 * (1 + 9 * a2) * m2 - 12 * (2 + 9 * a2) * m3 +
           4 * (2 + 3 * a2) * m4;
  B.b[9] = -60 * a2 * mu + 144 * a2 * m2 - 108 * a2 * m3 + 24 * a2 * m4;
  B.b[10] = -12 * a2 * mu + 36 * a2 * m2 - 36 * a2 * m3 + 12 * a2 * m4;
  return B;
}

Degree10 case3_polynomial(double n2, double q1, double a2, double mu, double t, double clog) {
  const double m2 = mu * mu;
  const double m3 = m2 * mu;
  const double m4 = m3 * mu;
  Degree10 c{};
  c[0] = 8 * n2;
  c[1] = -112 * n2 - 32 * n2 * mu;
  c[2] = 696 * n2 + 416 * n2 * mu + 48 * n2 * m2;
  c[3] = -2528 * n2 + 16 * t + 8 * q1 - 8 * (296 * n2 + q1 - 1) * mu;
  c[4] = 5944 * n2 - 176 * t - 3 * clog - 88 * q1 + 8 * (968 * n2 - 16 * t - 8 * q1 - 9) * mu +
         24 * (124 * n2 + q1 - 1) * m2 + 352 * n2 * m3 + 8 * n2 * m4;
  c[5] = -9456 * n2 + 816 * t + 30 * clog + 408 * q1 +
         4 * (-4008 * n2 + 40 * t + 3 * a2 - 42 * q1 + 68) * mu -
         8 * (1080 * n2 + 27 * q1 - 24) * m2 - 24 * (68 * n2 + q1 - 1) * m3 - 80 * n2 * m4;
  c[6] = 10312 * n2 - 2064 * t - 123 * clog - 1032 * q1 +
         4 * (5448 * n2 - 164 * t - 15 * a2 + 12 * q1 - 140) * mu +
         12 * (1284 * n2 - 3 * a2 - 64 * q1 - 52) * m2 + 8 * (516 * n2 + 26 * q1 - 21) * m3 +
         8 * (41 * n2 + q1 - 1) * m4;
  c[7] = -7616 * n2 + 3072 * t + 264 * clog + 1536 * q1 +
         8 * (2432 * n2 + 176 * t + 15 * a2 + 72 * q1 + 85) * mu +
         4 * (-4320 * n2 + 36 * a2 + 336 * q1 + 264) * m2 +
         4 * (-1536 * n2 + 9 * a2 - 176 * q1 + 114) * m3 - 16 * (44 * n2 + 4 * q1 - 3) * m4;
  c[8] = 3648 * n2 - 2688 * t - 312 * clog - 1344 * q1 +
         8 * (1376 * n2 - 208 * t - 15 * a2 - 144 * q1 - 61) * mu +
         8 * (1488 * n2 - 27 * a2 + 144 * q1 - 123) * m2 +
         4 * (1344 * n2 - 27 * a2 + 288 * q1 - 150) * m3 +
         4 * (208 * n2 - 3 * a2 + 48 * q1 - 13) * m4;
  c[9] = -1024 * n2 + 1280 * t + 192 * clog + 640 * q1 +
         4 * (-896 * n2 + 256 * t + 15 * a2 + 224 * q1 + 48) * mu +
         8 * (-576 * n2 + 18 * a2 - 48 * q1 + 60) * m2 +
         4 * (-640 * n2 + 27 * a2 - 224 * q1 + 96) * m3 +
         8 * (-64 * n2 + 3 * a2 - 32 * q1 + 12) * m4;
  c[10] = 128 * n2 - 256 * t - 48 * clog - 128 * q1 +
          4 * (128 * n2 - 64 * t - 3 * a2 - 64 * q1 - 8) * mu + 12 * (64 * n2 - 3 * a2 - 8) * m2 +
          4 * (128 * n2 - 9 * a2 + 64 * q1 - 24) * m3 + 4 * (32 * n2 - 3 * a2 + 32 * q1 - 8) * m4;
  return c;
}

}  // namespace

Degree10 degree10_coefficients(CaseId id, const Model& model) {
  const auto& p = model.params();
  const double n2 = model.n2();
  const double mu = p.mu;
  const double m2 = mu * mu;
  const double m3 = m2 * mu;
  const double m4 = m3 * mu;
  const double t = model.disk_linear();
  const double clog = model.disk_log();

  if (id == CaseId::Case3) return case3_polynomial(n2, p.q1, p.a2, mu, t, clog);

  const BList B = inner_blist(n2, p.q1, p.a2, mu, clog);
  Degree10 c{};
  c[0] = 8 * n2;
  c[2] = B.b[2];
  c[8] = B.b[8];
  c[10] = B.b[10];
  switch (id) {
    case CaseId::Case1:
      c[1] = B.b[1];
      c[3] = B.b[3] - 16 * t - 8 * mu;
      c[4] = B.b[4] - 48 * t + 8 * (2 * t - 5) * mu + 24 * m2;
      c[5] = B.b[5] - 48 * t + 16 * (2 * t - 5) * mu + 96 * m2 - 24 * m3;
      c[6] = B.b[6] - 16 * t + 16 * (t - 5) * mu + 144 * m2 - 72 * m3 + 8 * m4;
      c[7] = B.b[7];
      c[9] = B.b[9];
      break;
    case CaseId::Case2i:
      c[1] = -B.b[1];
      c[3] = -B.b[3] + 16 * t - 8 * mu;
      c[4] = B.b[4] - 48 * t + 8 * (16 * t + 5) * mu - 24 * m2;
      c[5] = -B.b[5] + 48 * t - 16 * (2 * t + 5) * mu + 96 * m2 - 24 * m3;
      c[6] = B.b[6] - 16 * t + 16 * (16 * t - 5) * mu - 144 * m2 + 72 * m3 - 8 * m4;
      c[7] = -B.b[7];
      c[9] = -B.b[9];
      break;
    case CaseId::Case2ii:
      c[1] = -B.b[1];
      c[3] = -B.b[3] - 16 * t - 8 * mu;
      c[4] = B.b[4] + 48 * t - 8 * (2 * t - 5) * mu - 24 * m2;
      c[5] = -B.b[5] - 48 * t + 16 * (2 * t - 5) * mu + 96 * m2 - 24 * m3;
      c[6] = B.b[6] + 16 * t - 16 * (t - 5) * mu - 144 * m2 + 72 * m3 - 8 * m4;
      c[7] = -B.b[7];
      c[9] = -B.b[9];
      break;
    case CaseId::Case3:
      break;
  }
  return c;
}

double evaluate(const Degree10& poly, double rho) {
  double acc = 0.0;
  for (double c : poly) acc = acc * rho + c;
  return acc;
}

std::array<double, 6> series_constants(CaseId id, const Model& model) {
  const auto& p = model.params();
  const double a = p.disk.a;
  const double b = p.disk.b;
  const double q = p.q1;
  const double n2 = model.n2();
  const double n4 = n2 * n2;
  const double n6 = n4 * n2;
  const double ab = a * b;
  const double a2b2 = ab * ab;
  // c h pi (b - a) and c h pi ln(b / a); both vanish with the disk.
  const double w = model.disk_linear() * ab;
  const double lg = model.disk_log();

  std::array<double, 6> d{};
  if (id == CaseId::Case1 || id == CaseId::Case2i) {
    d[0] = 8 * ab * n2 - 16 * w - 3 * ab * lg - 8 * ab * q;
    d[1] = 8 * ab * n2 + 32 * w + 9 * ab * lg + 16 * ab * q;
    d[2] = 448 * a2b2 * n4 - 6656 * a * a * n2 * w + 1024 * w * w + 135 * a2b2 * lg * lg +
           144 * ab * (15 * ab * n2 + 4 * w) * lg;
    d[3] = 32 * ab * (104 * ab * n2 + 32 * w + 9 * ab * q * lg) + 256 * a2b2 * q * q;
    d[4] = 512 * a2b2 * n6 - 16384 * a * a * n4 * w + 20480 * n2 * w * w +
           5952 * a2b2 * n4 * lg + 2232 * a2b2 * n2 * lg * lg - 27 * a2b2 * lg * lg * lg +
           12288 * ab * n2 * w * lg;
    d[5] = 2048 * ab * n2 * (4 * ab * n2 + 10 * b * w + 3 * ab * lg) * q + 5120 * a2b2 * n2 * q * q;
    return d;
  }

  // Case 2ii; Case 3 shares d3 and d5.
  d[2] = 448 * a2b2 * n4 - 6656 * ab * n2 * w + 1024 * w * w + 135 * a2b2 * lg * lg +
         144 * ab * (15 * ab * n2 - 4 * w) * lg;
  d[4] = 512 * a2b2 * n6 - 16384 * ab * n4 * w + 20480 * n2 * w * w + 5952 * a2b2 * n4 * lg +
         2232 * a2b2 * n2 * lg * lg + 27 * a2b2 * lg * lg * lg - 12288 * ab * n2 * w * lg;
  if (id == CaseId::Case2ii) {
    d[0] = 8 * ab * n2 + 16 * w - 3 * ab * lg - 8 * ab * q;
    d[1] = 8 * ab * n2 - 32 * a * w + 9 * ab * lg + 16 * ab * q;
    d[3] = 32 * ab * (104 * ab * n2 - 32 * w + 9 * ab * lg) * q + 256 * a2b2 * q * q;
    d[5] = 2048 * ab * n2 * (4 * ab * n2 - 10 * w + 3 * ab * lg) * q + 5120 * a2b2 * n2 * q * q;
  } else {
    d[0] = 8 * ab * n2 + 16 * w - 3 * ab * lg + 8 * ab * q;
    d[1] = -8 * ab * n2 + 32 * w - 9 * ab * lg + 16 * ab * q;
    d[3] = -32 * ab * (104 * ab * n2 - 32 * w + 9 * ab * lg) * q + 256 * a2b2 * q * q;
    d[5] = -2048 * ab * n2 * (4 * ab * n2 - 10 * w + 3 * ab * lg) * q + 5120 * a2b2 * n2 * q * q;
  }
  return d;
}

SeriesResult series_rho(CaseId id, const Model& model, Branch branch) {
  const auto& p = model.params();
  if (p.a2 == 0.0) {
    throw DegenerateSeriesError(
        "series needs A2 > 0 (alpha_3, alpha_4 divide by A2); use collinear_points instead");
  }
  SeriesResult out;
  auto& sc = out.coefficients;
  sc.case_id = id;
  sc.d = series_constants(id, model);
  const auto [d1, d2, d3, d4, d5, d6] = sc.d;
  if (d1 == 0.0) throw DegenerateSeriesError("series constant d1 vanishes");

  const double ab = p.disk.a * p.disk.b;
  const double a2 = p.a2;
  sc.alpha_base = 12.0 * ab * a2 / d1;
  const double radicand = (id == CaseId::Case2i) ? -sc.alpha_base : sc.alpha_base;
  if (radicand < 0.0) {
    throw BranchError(to_string(id) + ": fourth-root radicand " + std::to_string(radicand) +
                      " is negative, no real series branch");
  }
  const double w = std::sqrt(std::sqrt(radicand));
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;

  sc.alpha[0] = sign * w / d1;
  sc.alpha[1] = d2 / (4.0 * d1) * w * w;
  sc.alpha[2] = sign * (d1 * d1 + 3.0 * a2 * (d3 + d4)) / (6.0 * a2 * d1 * d1) * w * w * w;
  sc.alpha[3] = -(2.0 * d1 * d1 * d2 + 3.0 * ab * a2 * (d5 + d6)) / (12.0 * a2 * d1 * d1 * d1) *
                radicand;

  const double m = std::sqrt(std::sqrt(p.mu));
  double rho = 0.0;
  double power = 1.0;
  for (double alpha : sc.alpha) {
    power *= m;
    rho += alpha * power;
  }
  if (id == CaseId::Case3) rho += 2.0;
  out.rho = rho;
  return out;
}

double series_x(CaseId id, double rho, double mu) {
  switch (id) {
    case CaseId::Case1: return 1.0 - mu + rho;
    case CaseId::Case2i: return 1.0 - mu - rho;
    case CaseId::Case2ii: return -1.0 + mu + rho;
    case CaseId::Case3: return -1.0 + mu - (rho - 2.0);
  }
  return 0.0;
}

EquilibriumPoint series_to_point(CaseId id, double rho, const Model& model) {
  EquilibriumPoint e;
  e.label = label_for(id);
  e.x = series_x(id, rho, model.mu());
  e.y = 0.0;
  e.method = Method::Series;
  try {
    e.interval = interval_of(e.x, model);
    const Gradient g = model.omega_gradient(e.position());
    e.residual = std::abs(g.x);
    e.relative_residual = relative_residual(model, e.position());
  } catch (const DomainError&) {
    e.interval = interval_for(id);
    e.residual = std::numeric_limits<double>::infinity();
    e.relative_residual = e.residual;
  }
  e.interval_violation = e.interval != interval_for(id);
  return e;
}

}  // namespace chermnykh
