#include "chermnykh/model.hpp"

#include <cmath>
#include <string>

#include "chermnykh/errors.hpp"

namespace chermnykh {

namespace {

void require_positive_radius(double r, const char* name) {
  if (!(r > 0.0)) {
    throw DomainError(std::string("singular position: ") + name + " = " + std::to_string(r));
  }
}

}  // namespace

double disk_potential(double r, const DiskProfile& disk, PiMode pi_mode) {
  require_positive_radius(r, "r");
  if (disk.vanishes()) return 0.0;
  const double lin = disk.linear_coefficient(pi_mode);
  const double lg = disk.log_coefficient(pi_mode);
  return -2.0 * lin / r + 0.875 * lg / (r * r);
}

double disk_force(double r, const DiskProfile& disk, PiMode pi_mode) {
  require_positive_radius(r, "r");
  if (disk.vanishes()) return 0.0;
  const double lin = disk.linear_coefficient(pi_mode);
  const double lg = disk.log_coefficient(pi_mode);
  return -2.0 * lin / (r * r) - 0.375 * lg / (r * r * r);
}

double mean_motion(const SystemParams& params) {
  const double radicand =
      params.q1 + 1.5 * params.a2 - 2.0 * disk_force(params.r_ref, params.disk, params.pi_mode);
  if (!(radicand > 0.0)) {
    throw ModelError("mean motion radicand q1 + 3/2 A2 - 2 f_b(r_ref) is not positive");
  }
  return std::sqrt(radicand);
}

Model::Model(const SystemParams& params) : params_(params) {
  params_.validate();
  n_ = mean_motion(params_);
  n2_ = n_ * n_;
  has_disk_ = !params_.disk.vanishes();
  if (has_disk_) {
    disk_linear_ = params_.disk.linear_coefficient(params_.pi_mode);
    disk_log_ = params_.disk.log_coefficient(params_.pi_mode);
  }
}

Model::Distances Model::distances(Point2 p) const {
  const double mu = params_.mu;
  Distances d{std::hypot(p.x + mu, p.y), std::hypot(p.x + mu - 1.0, p.y), std::hypot(p.x, p.y)};
  require_positive_radius(d.r1, "r1");
  require_positive_radius(d.r2, "r2");
  if (has_disk_) require_positive_radius(d.r, "r");
  return d;
}

double Model::disk_omega(double r) const {
  if (!has_disk_) return 0.0;
  if (params_.potential == PotentialForm::Printed) {
    return -disk_potential(r, params_.disk, params_.pi_mode);
  }
  // Radial integral of f_b.
  return 2.0 * disk_linear_ / r + 0.1875 * disk_log_ / (r * r);
}

double Model::omega(Point2 p) const {
  const auto [r1, r2, r] = distances(p);
  const double mu = params_.mu;
  return 0.5 * n2_ * (p.x * p.x + p.y * p.y) + (1.0 - mu) * params_.q1 / r1 + mu / r2 +
         mu * params_.a2 / (2.0 * r2 * r2 * r2) + disk_omega(r);
}

Gradient Model::omega_gradient(Point2 p) const {
  const auto [r1, r2, r] = distances(p);
  const double mu = params_.mu;
  const double dx1 = p.x + mu;
  const double dx2 = p.x + mu - 1.0;
  const double k1 = (1.0 - mu) * params_.q1 / (r1 * r1 * r1);
  const double r2_3 = r2 * r2 * r2;
  const double k2 = mu / r2_3 + 1.5 * mu * params_.a2 / (r2_3 * r2 * r2);
  double kd = 0.0;
  if (has_disk_) {
    const double r3 = r * r * r;
    kd = 2.0 * disk_linear_ / r3 + 0.375 * disk_log_ / (r3 * r);
  }
  return {n2_ * p.x - k1 * dx1 - k2 * dx2 - kd * p.x,
          n2_ * p.y - k1 * p.y - k2 * p.y - kd * p.y};
}

Hessian Model::omega_hessian(Point2 p) const {
  const auto [r1, r2, r] = distances(p);
  const double mu = params_.mu;
  const double a2 = params_.a2;
  const double dx1 = p.x + mu;
  const double dx2 = p.x + mu - 1.0;

  const double r1_3 = r1 * r1 * r1;
  const double r1_5 = r1_3 * r1 * r1;
  const double r2_3 = r2 * r2 * r2;
  const double r2_5 = r2_3 * r2 * r2;
  const double r2_7 = r2_5 * r2 * r2;

  double base = n2_ - (1.0 - mu) * params_.q1 / r1_3 - mu / r2_3 - 1.5 * mu * a2 / r2_5;
  const double c1 = 3.0 * (1.0 - mu) * params_.q1 / r1_5;
  const double c2 = 3.0 * mu / r2_5 + 7.5 * mu * a2 / r2_7;
  double cd = 0.0;
  if (has_disk_) {
    const double r3 = r * r * r;
    const double r5 = r3 * r * r;
    base -= 2.0 * disk_linear_ / r3 + 0.375 * disk_log_ / (r3 * r);
    cd = 6.0 * disk_linear_ / r5 + 1.5 * disk_log_ / (r5 * r);
  }
  return {base + c1 * dx1 * dx1 + c2 * dx2 * dx2 + cd * p.x * p.x,
          base + (c1 + c2 + cd) * p.y * p.y,
          (c1 * dx1 + c2 * dx2 + cd * p.x) * p.y};
}

double Model::jacobi_constant(const State& s) const {
  return -s.vx * s.vx - s.vy * s.vy + 2.0 * omega(s.position());
}

}  // namespace chermnykh
