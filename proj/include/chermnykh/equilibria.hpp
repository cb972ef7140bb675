#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chermnykh/model.hpp"

namespace chermnykh {

enum class PointLabel { L1, L2, L3, l1_new, L4, L5 };

/// Partition of the x-axis by the primaries and the disk centre.
enum class Interval {
  Right,     ///< 1 - mu < x
  MidRight,  ///< 0 <= x < 1 - mu
  MidLeft,   ///< -mu < x < 0
  Left,      ///< x < -mu
  OffAxis
};

enum class Method { NumericRoot, Series, NewtonRefined };

struct EquilibriumPoint {
  PointLabel label = PointLabel::L1;
  double x = 0.0;
  double y = 0.0;
  Interval interval = Interval::OffAxis;
  Method method = Method::NumericRoot;
  /// |grad Omega| at the point.
  double residual = 0.0;
  /// residual divided by the magnitude of the largest force term; the
  /// rounding floor near the primaries makes this the meaningful measure.
  double relative_residual = 0.0;
  /// Series point whose x falls outside the interval its case was derived for.
  bool interval_violation = false;
  /// Newton refinement did not converge; coordinates are the series seed.
  bool warning = false;

  Point2 position() const { return {x, y}; }
  bool collinear() const { return interval != Interval::OffAxis; }
};

std::string to_string(PointLabel label);
std::string to_string(Interval interval);
std::string to_string(Method method);
std::optional<PointLabel> parse_label(const std::string& text);

/// Interval containing x. Throws DomainError on the singular set {-mu, 1 - mu}
/// and on x = 0 when a disk is present.
Interval interval_of(double x, const Model& model);

/// Conventional label for the collinear root of an interval.
PointLabel label_for(Interval interval);
Interval interval_for(PointLabel label);

/// Piecewise K(x) = Omega_x(x, 0) in the per-interval form.
double k_of_x(const Model& model, double x);

struct KSample {
  double x = 0.0;
  double k = 0.0;
};

/// K(x) at `samples` evenly spaced abscissae of one interval, intersected with
/// [-x_max, x_max] and shrunk by `exclusion` at each pole.
std::vector<KSample> k_curve(const Model& model, Interval interval, double x_max, int samples,
                             double exclusion);

/// Sign changes between consecutive samples.
int sign_changes(const std::vector<KSample>& curve);

/// |grad Omega| normalised by the largest single force term magnitude at p.
double relative_residual(const Model& model, Point2 p);

struct CollinearScan {
  double x_max = 3.0;
  double step = 1e-4;
  double exclusion = 1e-6;
  double ftol = 1e-12;
};

/// Every root of K strictly inside one interval (intersected with [-x_max, x_max]).
std::vector<double> collinear_roots(const Model& model, Interval interval,
                                    const CollinearScan& scan = {});

/// Roots of K in all four intervals, labelled Right -> L1, MidRight -> L2,
/// MidLeft -> l1_new, Left -> L3. Intervals without a root are absent.
std::vector<EquilibriumPoint> collinear_points(const Model& model, const CollinearScan& scan = {});

/// First-order corrections of r1 = q1^(1/3)(1 + delta1), r2 = 1 + delta2.
struct TriangularDeltas {
  double delta1 = 0.0;
  double delta2 = 0.0;
};

TriangularDeltas triangular_deltas(const Model& model);

enum class TriangularMethod { Series, NewtonRefined };

struct TriangularPair {
  EquilibriumPoint l4;
  EquilibriumPoint l5;
  TriangularDeltas deltas;
};

/// L4/L5 from the delta corrections, optionally polished by 2D Newton on
/// grad Omega = 0. Throws DomainError when the y radicand is negative.
TriangularPair triangular_points(const Model& model,
                                 TriangularMethod method = TriangularMethod::NewtonRefined);

struct NewtonOptions {
  double tol = 1e-12;
  int max_iter = 50;
};

/// 2D Newton with the analytic Hessian. Returns nullopt on divergence.
std::optional<Point2> newton_refine(const Model& model, Point2 seed, const NewtonOptions& opts = {});

}  // namespace chermnykh
