#pragma once

#include <vector>

#include "chermnykh/model.hpp"

namespace chermnykh {

struct Acceleration {
  double ax = 0.0;
  double ay = 0.0;
};

/// ax = 2 n vy + Omega_x, ay = -2 n vx + Omega_y. Throws DomainError at a singular position.
Acceleration acceleration(const State& s, const Model& model);

enum class Termination {
  Completed,
  StepUnderflow,     ///< step size fell below the floor
  SingularApproach   ///< trajectory reached a singular centre
};

std::string to_string(Termination t);

struct TrajectorySample {
  double t = 0.0;
  State state;
  double jacobi = 0.0;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  ///< strictly increasing |t|
  double c_drift = 0.0;                   ///< max |C(t) - C(0)|
  Termination termination = Termination::Completed;
};

struct IntegrateOptions {
  double tol = 1e-12;      ///< absolute and relative local error per step
  double cadence = 1e-2;   ///< output spacing in time
  double min_step = 1e-14;
};

/// Adaptive Runge-Kutta-Fehlberg 7(8) from s0 over [0, t_end]. A negative
/// t_end integrates backward. Output is sampled at multiples of the cadence
/// plus t_end. Integration stops early, keeping the samples so far, on step
/// underflow or when the state reaches a singular position.
Trajectory integrate(const State& s0, double t_end, const Model& model,
                     const IntegrateOptions& opts = {});

}  // namespace chermnykh
