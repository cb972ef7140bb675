#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "chermnykh/equilibria.hpp"

namespace chermnykh {

enum class Verdict { Stable, Unstable };

std::string to_string(Verdict verdict);

/// Coefficients of lambda^4 + p lambda^2 + q = 0.
struct Quartic {
  double p = 0.0;
  double q = 0.0;
};

struct StabilityReport {
  EquilibriumPoint point;
  Quartic quartic;
  std::array<std::complex<double>, 4> lambdas{};
  Verdict verdict = Verdict::Unstable;
  double discriminant = 0.0;  ///< p^2 - 4q
  Hessian hessian;            ///< Omega second partials at the point
  double max_real = 0.0;      ///< largest Re(lambda)
};

/// Re(lambda) at or below this counts as marginally stable.
inline constexpr double kMarginalRe = 1e-12;

/// (p, q) from the Hessian at an equilibrium. Throws PreconditionError when
/// the point's relative gradient residual exceeds 1e-8.
Quartic characteristic_coefficients(const EquilibriumPoint& point, const Model& model);

/// (p, q) from a Hessian directly, for callers that already hold it.
Quartic characteristic_coefficients(const Hessian& h, double n2);

/// The four roots as {s1, -s1, s2, -s2} with s_i the principal square roots
/// of the two lambda^2 values.
std::array<std::complex<double>, 4> solve_quartic(double p, double q);

StabilityReport classify(const EquilibriumPoint& point, const Model& model);

/// Closed forms at L4: p_L4 = n^2 - 3 mu A2 / r2^5 - 3/8 CL / r^4 and
/// q_L4 = 9 mu (1 - mu) gamma0, distances evaluated at the given point.
struct L4Terms {
  double p_l4 = 0.0;
  double q_l4 = 0.0;
  double gamma0 = 0.0;
};

L4Terms l4_condition_terms(const Model& model, const EquilibriumPoint& l4);

struct CriticalMassOptions {
  double mu_lo = 1e-4;
  double mu_hi = 0.5;
  double scan_step = 1e-3;
  double mu_tol = 1e-13;
};

struct CriticalMassResult {
  double mu_c = 0.0;
  /// No sign change of D up to mu_hi; mu_c is capped at mu_hi.
  bool saturated = false;
  /// D = p^2 - 4q at mu_c.
  double discriminant = 0.0;
};

/// Smallest mu at which D = p^2 - 4q at the Newton-refined L4 turns negative.
///
/// base.mu is ignored. mu is scanned upward from mu_lo with the previous L4 as
/// Newton seed, then the first sign change is bisected. Throws NumericError if
/// L4 cannot be followed.
CriticalMassResult critical_mass(const SystemParams& base, const CriticalMassOptions& opts = {});

/// What stays fixed while the disk's outer radius varies.
enum class DiskHold { Mass, Density };

struct CriticalMassSample {
  double b = 0.0;
  double mu_c = 0.0;
  bool saturated = false;
};

struct CriticalMassCurve {
  double q1 = 1.0;
  double a2 = 0.0;
  std::vector<CriticalMassSample> samples;  ///< sorted by b
};

/// mu_c over b in [b_lo, b_hi] with the given step; the disk is rebuilt for
/// every b keeping either its mass m_b or its density constant c. Evaluated in
/// parallel; output order is deterministic.
CriticalMassCurve critical_mass_curve(const SystemParams& base, double b_lo, double b_hi,
                                      double step, DiskHold hold, double held_value,
                                      const CriticalMassOptions& opts = {});

struct BandSample {
  double b = 0.0;
  std::optional<Verdict> verdict;  ///< empty when the point does not exist
  double x = 0.0;
};

struct Band {
  double lo = 0.0;
  double hi = 0.0;
};

struct BandScan {
  PointLabel label = PointLabel::L2;
  std::vector<BandSample> samples;
  std::vector<Band> stable;  ///< maximal stable sub-intervals, endpoints refined
  std::vector<double> gaps;  ///< b values where the point was not found
};

struct BandOptions {
  double b_lo = 1.0;
  double b_hi = 2.0;
  double step = 1e-3;
  double refine_tol = 1e-4;
  DiskHold hold = DiskHold::Mass;
  double held_value = 0.4;
};

/// Classify a collinear point across disk widths. For each b the disk is
/// rebuilt (holding m_b or c), the labelled root is relocated inside its own
/// interval and classified.
BandScan stability_band_scan(PointLabel label, const SystemParams& base, const BandOptions& opts);

/// Parameters of base with the disk's outer radius replaced by b.
SystemParams with_outer_radius(const SystemParams& base, double b, DiskHold hold, double held_value);

}  // namespace chermnykh
