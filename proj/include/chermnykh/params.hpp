#pragma once

#include <string>

namespace chermnykh {

enum class PiMode { Exact, Paper314 };

/// Which disk potential enters Omega.
///
/// ForceConsistent uses the potential whose radial derivative is the disk
/// force f_b, so grad(Omega) equals the equilibrium/dynamics force field and
/// the Jacobi integral is conserved. Printed uses the closed form V(r) with the
/// 7/8 log coefficient; it is kept for reproducing printed level sets only.
enum class PotentialForm { ForceConsistent, Printed };

double pi_value(PiMode mode);

/// Annular disk with surface density c / r^3 between radii a and b.
struct DiskProfile {
  double a = 1.0;
  double b = 1.0;
  double h = 1e-4;
  double c = 0.0;

  /// Build from total mass via m_b = 2 pi c h (b - a) / (a b). a == b gives c = 0.
  static DiskProfile from_mass(double a, double b, double h, double mass, PiMode pi_mode);

  double mass(PiMode pi_mode) const;
  bool vanishes() const { return b == a || c == 0.0; }

  /// c h pi (b - a) / (a b), the coefficient of the 1/r disk terms (halved).
  double linear_coefficient(PiMode pi_mode) const;
  /// c h pi ln(b / a), the coefficient of the logarithmic disk terms.
  double log_coefficient(PiMode pi_mode) const;

  void validate() const;
};

struct SystemParams {
  double mu = 0.0;
  double q1 = 1.0;
  double a2 = 0.0;
  DiskProfile disk;
  double r_ref = 0.99;
  PiMode pi_mode = PiMode::Exact;
  PotentialForm potential = PotentialForm::ForceConsistent;

  /// Throws ModelError on any violated invariant.
  void validate() const;

  double pi() const { return pi_value(pi_mode); }
};

/// mu = 0.000953728, q1 = 0.75, A2 = 0.0025, a = 1, b = 1.5, h = 1e-4,
/// c = 1910.83, r_ref = 0.99, pi = 3.14.
SystemParams paper_preset();

/// Classical restricted problem: q1 = 1, A2 = 0, no disk.
SystemParams classical_preset(double mu);

std::string to_string(PiMode mode);
std::string to_string(PotentialForm form);

}  // namespace chermnykh
