#include "chermnykh/params.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "chermnykh/errors.hpp"

namespace chermnykh {

double pi_value(PiMode mode) {
  return mode == PiMode::Paper314 ? 3.14 : std::numbers::pi;
}

DiskProfile DiskProfile::from_mass(double a, double b, double h, double mass,
                                   PiMode pi_mode) {
  DiskProfile disk{a, b, h, 0.0};
  if (b != a) {
    disk.c = mass * a * b / (2.0 * pi_value(pi_mode) * h * (b - a));
  }
  return disk;
}

double DiskProfile::mass(PiMode pi_mode) const {
  return 2.0 * pi_value(pi_mode) * c * h * (b - a) / (a * b);
}

double DiskProfile::linear_coefficient(PiMode pi_mode) const {
  return c * h * pi_value(pi_mode) * (b - a) / (a * b);
}

double DiskProfile::log_coefficient(PiMode pi_mode) const {
  return c * h * pi_value(pi_mode) * std::log(b / a);
}

void DiskProfile::validate() const {
  if (!(a > 0.0)) throw ModelError("disk inner radius a must be positive");
  if (!(b >= a)) throw ModelError("disk outer radius b must satisfy b >= a");
  if (!(h > 0.0)) throw ModelError("disk thickness h must be positive");
  if (!(c >= 0.0) || !std::isfinite(c)) throw ModelError("disk density factor c must be finite and >= 0");
}

void SystemParams::validate() const {
  if (!(mu > 0.0 && mu < 0.5)) throw ModelError("mass ratio mu must lie in (0, 0.5)");
  if (!(q1 > 0.0 && q1 <= 1.0)) throw ModelError("mass reduction factor q1 must lie in (0, 1]");
  if (!(a2 >= 0.0)) throw ModelError("oblateness coefficient A2 must be >= 0");
  if (!(r_ref > 0.0)) throw ModelError("reference radius r_ref must be positive");
  disk.validate();
}

SystemParams paper_preset() {
  SystemParams p;
  p.mu = 0.000953728;
  p.q1 = 0.75;
  p.a2 = 0.0025;
  p.disk = DiskProfile{1.0, 1.5, 1e-4, 1910.83};
  p.r_ref = 0.99;
  p.pi_mode = PiMode::Paper314;
  return p;
}

SystemParams classical_preset(double mu) {
  SystemParams p;
  p.mu = mu;
  p.q1 = 1.0;
  p.a2 = 0.0;
  p.disk = DiskProfile{1.0, 1.0, 1e-4, 0.0};
  p.r_ref = 0.99;
  p.pi_mode = PiMode::Exact;
  return p;
}

std::string to_string(PiMode mode) {
  return mode == PiMode::Paper314 ? "paper" : "exact";
}

std::string to_string(PotentialForm form) {
  return form == PotentialForm::Printed ? "printed" : "consistent";
}

}  // namespace chermnykh
