#include "chermnykh/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "chermnykh/errors.hpp"

namespace chermnykh {

namespace odeint = boost::numeric::odeint;

Acceleration acceleration(const State& s, const Model& model) {
  const Gradient g = model.omega_gradient(s.position());
  const double two_n = 2.0 * model.n();
  return {two_n * s.vy + g.x, -two_n * s.vx + g.y};
}

std::string to_string(Termination t) {
  switch (t) {
    case Termination::Completed: return "completed";
    case Termination::StepUnderflow: return "step_underflow";
    case Termination::SingularApproach: return "singular_approach";
  }
  return "?";
}

namespace {

using Vec = std::array<double, 4>;

State to_state(const Vec& v) { return {v[0], v[1], v[2], v[3]}; }

}  // namespace

Trajectory integrate(const State& s0, double t_end, const Model& model,
                     const IntegrateOptions& opts) {
  if (!(t_end != 0.0 && std::isfinite(t_end))) throw ModelError("integrate: t_end must be nonzero");
  if (!(opts.tol > 0.0 && opts.cadence > 0.0)) {
    throw ModelError("integrate: tol and cadence must be positive");
  }
  const double dir = t_end > 0.0 ? 1.0 : -1.0;
  const double span = std::abs(t_end);

  auto rhs = [&model](const Vec& v, Vec& dv, double) {
    const Acceleration a = acceleration(to_state(v), model);
    dv = {v[2], v[3], a.ax, a.ay};
  };
  auto stepper = odeint::make_controlled(opts.tol, opts.tol,
                                         odeint::runge_kutta_fehlberg78<Vec>());

  Trajectory traj;
  Vec v{s0.x, s0.y, s0.vx, s0.vy};
  const double c0 = model.jacobi_constant(s0);
  traj.samples.push_back({0.0, s0, c0});

  double t = 0.0;
  double dt = dir * std::min(opts.cadence, 1e-3);
  const auto outputs = static_cast<long>(std::ceil(span / opts.cadence - 1e-9));
  for (long k = 1; k <= outputs; ++k) {
    const double target = (k == outputs) ? t_end : dir * static_cast<double>(k) * opts.cadence;
    try {
      while (dir * (target - t) > 0.0) {
        double step = dt;
        const bool clipped = dir * (t + step - target) > 0.0;
        if (clipped) step = target - t;
        if (stepper.try_step(rhs, v, t, step) == odeint::success) {
          if (clipped) {
            t = target;
          } else {
            dt = step;
          }
        } else {
          dt = step;
          if (std::abs(dt) < opts.min_step) {
            traj.termination = Termination::StepUnderflow;
            break;
          }
        }
      }
    } catch (const DomainError&) {
      traj.termination = Termination::SingularApproach;
    }
    if (traj.termination != Termination::Completed) break;
    if (!std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); })) {
      traj.termination = Termination::SingularApproach;
      break;
    }
    const State s = to_state(v);
    const double c = model.jacobi_constant(s);
    traj.samples.push_back({target, s, c});
    traj.c_drift = std::max(traj.c_drift, std::abs(c - c0));
  }
  return traj;
}

}  // namespace chermnykh
