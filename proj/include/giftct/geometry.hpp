#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "giftct/types.hpp"

namespace giftct {

// Parallel-beam acquisition description. Angles are evenly spaced over
// [0, pi); the detector array is centered on the rotation center, which sits
// at the geometric center of the (H, W) slice. All lengths in grid units.
struct ProjectionGeometry {
  std::vector<double> angles;    // radians, strictly increasing, in [0, pi)
  std::size_t detectors = 0;
  double detector_spacing = 1.0;
  std::size_t height = 0;        // slice dims the geometry was built for
  std::size_t width = 0;

  std::size_t num_views() const { return angles.size(); }

  // Rotation center in grid coordinates (row, col).
  double center_row() const { return 0.5 * static_cast<double>(height - 1); }
  double center_col() const { return 0.5 * static_cast<double>(width - 1); }

  // Signed offset of detector bin s from the rotation center.
  double detector_offset(std::size_t s) const {
    return (static_cast<double>(s) - 0.5 * static_cast<double>(detectors - 1)) *
           detector_spacing;
  }

  // World frame: origin at the rotation center, axes aligned with the grid.
  std::array<double, 2> grid_to_world(double row, double col) const {
    return {row - center_row(), col - center_col()};
  }
  std::array<double, 2> world_to_grid(double y, double x) const {
    return {y + center_row(), x + center_col()};
  }
};

// Builds the parallel-beam geometry for `views` angles over a (H, W) slice.
// Detector count is the grid diagonal rounded up to the next even integer so
// the object is fully covered at every angle.
ProjectionGeometry make_geometry(std::size_t views, std::size_t height, std::size_t width);

}  // namespace giftct
