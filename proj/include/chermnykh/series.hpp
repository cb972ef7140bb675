#pragma once

#include <array>
#include <string>

#include "chermnykh/equilibria.hpp"

namespace chermnykh {

/// Collinear case analysed by the degree-10 polynomial and its mu^(1/4) series.
enum class CaseId {
  Case1,    ///< 1 - mu < x, rho = x - (1 - mu)
  Case2i,   ///< 0 <= x < 1 - mu, rho = (1 - mu) - x
  Case2ii,  ///< -mu < x < 0
  Case3     ///< x < -mu, rho = x + mu + 1
};

std::string to_string(CaseId id);
Interval interval_for(CaseId id);
PointLabel label_for(CaseId id);

/// Coefficients of the degree-10 polynomial in rho, highest power first
/// (index 0 multiplies rho^10 and equals 8 n^2).
using Degree10 = std::array<double, 11>;

/// The case polynomial with the B-lists as printed. Case 3's B3 carries the
/// factor mu on its (296 n^2 + q1 - 1) term, without which the mu = 0
/// polynomial does not factor as (rho - 2)^4 (rho - 1)^2.
Degree10 degree10_coefficients(CaseId id, const Model& model);

/// Horner evaluation of a Degree10 polynomial.
double evaluate(const Degree10& poly, double rho);

struct SeriesCoefficients {
  CaseId case_id = CaseId::Case1;
  std::array<double, 4> alpha{};  ///< alpha_1 .. alpha_4
  std::array<double, 6> d{};      ///< d_1 .. d_6
  double alpha_base = 0.0;        ///< 12 a b A2 / d1
};

/// Sign taken for the +/- carried by alpha_1 and alpha_3.
enum class Branch { Plus, Minus };

struct SeriesResult {
  double rho = 0.0;
  SeriesCoefficients coefficients;
};

/// Auxiliary constants d_1 .. d_6 of a case.
std::array<double, 6> series_constants(CaseId id, const Model& model);

/// rho = alpha_1 mu^(1/4) + ... + alpha_4 mu (plus 2 for Case 3).
///
/// Throws DegenerateSeriesError when A2 = 0 or d1 = 0, and BranchError when the
/// fourth-root radicand (alpha, or -alpha for Case 2i) is negative.
SeriesResult series_rho(CaseId id, const Model& model, Branch branch = Branch::Plus);

/// Map a series rho to the x coordinate of its case and wrap it as a point.
/// The interval is the one x actually falls in; interval_violation flags a
/// mismatch with the case's own interval.
EquilibriumPoint series_to_point(CaseId id, double rho, const Model& model);

/// Abscissa for a case's rho, without building a point.
double series_x(CaseId id, double rho, double mu);

}  // namespace chermnykh
