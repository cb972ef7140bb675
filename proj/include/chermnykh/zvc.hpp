#pragma once

#include <cstdint>
#include <vector>

#include "chermnykh/model.hpp"

namespace chermnykh {

struct Window {
  double x_min = -2.0;
  double x_max = 2.0;
  double y_min = -2.0;
  double y_max = 2.0;
};

/// 2 Omega sampled on a uniform node grid (z = 0). Storage is row-major with
/// rows along y: index = j * nx + i.
struct ZvGrid {
  Window window;
  int nx = 0;
  int ny = 0;
  std::vector<double> values;        ///< 2 Omega; NaN where masked
  std::vector<std::uint8_t> mask;    ///< 1 near a singular centre

  double x(int i) const { return window.x_min + (window.x_max - window.x_min) * i / (nx - 1); }
  double y(int j) const { return window.y_min + (window.y_max - window.y_min) * j / (ny - 1); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(j) * nx + i]; }
  bool masked(int i, int j) const { return mask[static_cast<std::size_t>(j) * nx + i] != 0; }
};

/// Sample 2 Omega. Nodes within mask_radius of either primary, or of the origin
/// when a disk is present, are masked. Rows are filled in parallel.
/// Throws ModelError for a degenerate window or fewer than 2 nodes per axis.
ZvGrid sample_grid(const Model& model, const Window& window, int nx, int ny,
                   double mask_radius = 1e-3);

struct ContourSet {
  double level = 0.0;
  /// Open polylines end on the window border or a masked cell; closed ones
  /// repeat their first vertex at the end.
  std::vector<std::vector<Point2>> polylines;

  std::size_t vertex_count() const;
};

/// Marching squares at 2 Omega = level. Edge crossings are interpolated
/// linearly, or solved on the edge to full precision when a model is given. Cells
/// touching a masked node are skipped. Saddle cells are resolved by the value
/// at the cell centre: 2 Omega from the model when given, else the corner mean.
ContourSet extract_contours(const ZvGrid& grid, double level, const Model* model = nullptr);

enum class Region {
  Allowed,    ///< 2 Omega >= C (masked nodes count as allowed: 2 Omega diverges there)
  Forbidden   ///< 2 Omega < C
};

/// Number of 4-connected components of a region on the grid nodes.
int count_components(const ZvGrid& grid, double level, Region region);

/// Omega without the centrifugal term: the two-centre potential plus the disk.
double potential_only(const Model& model, Point2 p);

struct LimitSample {
  double radius = 0.0;  ///< far field: circle radius R; near field: distance s
  double level = 0.0;   ///< Jacobi constant used for this sample
  double defect = 0.0;  ///< max over directions of |contour radius - reference| / radius
};

struct LimitReport {
  /// C = n^2 R^2; contour radius along each direction versus R.
  std::vector<LimitSample> far_field;
  /// C = 2 Omega at distance s right of the bigger primary; contour versus the
  /// potential-only level set at the same C, both measured from that primary.
  std::vector<LimitSample> near_field;
};

LimitReport limit_diagnostics(const Model& model, const std::vector<double>& far_radii,
                              const std::vector<double>& near_radii, int directions = 16);

}  // namespace chermnykh
