#pragma once

#include "chermnykh/params.hpp"

namespace chermnykh {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Position and velocity of the test particle in the rotating frame.
struct State {
  double x = 0.0;
  double y = 0.0;
  double vx = 0.0;
  double vy = 0.0;

  Point2 position() const { return {x, y}; }
};

struct Gradient {
  double x = 0.0;
  double y = 0.0;
};

struct Hessian {
  double xx = 0.0;
  double yy = 0.0;
  double xy = 0.0;
};

/// Disk potential V(r) as printed (log coefficient 7/8). Throws DomainError for r <= 0.
double disk_potential(double r, const DiskProfile& disk, PiMode pi_mode);

/// Radial disk force f_b(r) (log coefficient 3/8). Throws DomainError for r <= 0.
double disk_force(double r, const DiskProfile& disk, PiMode pi_mode);

/// n = sqrt(q1 + 3/2 A2 - 2 f_b(r_ref)). Throws ModelError when the radicand is not positive.
double mean_motion(const SystemParams& params);

/// Immutable evaluator for one parameter bundle.
///
/// The mean motion is frozen at construction. All member functions are const
/// and safe to call concurrently.
class Model {
 public:
  explicit Model(const SystemParams& params);

  const SystemParams& params() const { return params_; }
  double mu() const { return params_.mu; }
  double n() const { return n_; }
  double n2() const { return n2_; }
  bool has_disk() const { return has_disk_; }

  /// c h pi (b - a) / (a b)
  double disk_linear() const { return disk_linear_; }
  /// c h pi ln(b / a)
  double disk_log() const { return disk_log_; }

  double omega(Point2 p) const;
  Gradient omega_gradient(Point2 p) const;
  Hessian omega_hessian(Point2 p) const;

  /// C = -vx^2 - vy^2 + 2 Omega.
  double jacobi_constant(const State& s) const;

  /// Disk contribution to Omega at radius r (form selected by params().potential).
  double disk_omega(double r) const;

 private:
  struct Distances {
    double r1, r2, r;
  };
  Distances distances(Point2 p) const;

  SystemParams params_;
  double n_ = 1.0;
  double n2_ = 1.0;
  double disk_linear_ = 0.0;
  double disk_log_ = 0.0;
  bool has_disk_ = false;
};

}  // namespace chermnykh
