#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace giftct {

/// Shape of a discretized volume, (slices, height, width). slices == 1 is a
/// single 2D slice.
using Dims3 = std::array<std::size_t, 3>;

struct shape_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Discretized intensity field V, row-major with width fastest. Values are
// dimensionless attenuation in arbitrary linear units, voxel spacing 1.0.
struct VolumeGrid {
  std::size_t slices = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> data;

  VolumeGrid() = default;
  VolumeGrid(std::size_t c, std::size_t h, std::size_t w)
      : slices(c), height(h), width(w), data(c * h * w, 0.0) {
    if (c == 0 || h == 0 || w == 0)
      throw shape_error("VolumeGrid: dims must be >= 1");
  }
  explicit VolumeGrid(const Dims3& d) : VolumeGrid(d[0], d[1], d[2]) {}

  Dims3 dims() const { return {slices, height, width}; }
  std::size_t size() const { return slices * height * width; }

  double& at(std::size_t c, std::size_t i, std::size_t j) {
    return data[(c * height + i) * width + j];
  }
  double at(std::size_t c, std::size_t i, std::size_t j) const {
    return data[(c * height + i) * width + j];
  }
  const double* slice(std::size_t c) const { return data.data() + c * height * width; }
  double* slice(std::size_t c) { return data.data() + c * height * width; }
};

// Measurement M: per-slice stack of (views x detectors) line integrals.
struct Sinogram {
  std::size_t slices = 0;
  std::size_t views = 0;
  std::size_t detectors = 0;
  std::vector<double> data;

  Sinogram() = default;
  Sinogram(std::size_t c, std::size_t m, std::size_t n)
      : slices(c), views(m), detectors(n), data(c * m * n, 0.0) {
    if (c == 0 || m == 0 || n == 0)
      throw shape_error("Sinogram: dims must be >= 1");
  }

  std::size_t size() const { return slices * views * detectors; }
  double& at(std::size_t c, std::size_t v, std::size_t s) {
    return data[(c * views + v) * detectors + s];
  }
  double at(std::size_t c, std::size_t v, std::size_t s) const {
    return data[(c * views + v) * detectors + s];
  }
  const double* slice(std::size_t c) const { return data.data() + c * views * detectors; }
  double* slice(std::size_t c) { return data.data() + c * views * detectors; }

  bool same_shape(const Sinogram& o) const {
    return slices == o.slices && views == o.views && detectors == o.detectors;
  }
};

// Optimizable Gaussian cloud. Axis order of per-Gaussian vectors matches the
// volume layout: (h, w) for dim == 2, (c, h, w) for dim == 3. Rotations are a
// single angle in radians (2D) or a wxyz quaternion (3D).
struct GaussianCloud {
  int dim = 2;
  std::size_t count = 0;
  std::vector<double> means;        // count * dim, continuous grid coordinates
  std::vector<double> log_scales;   // count * dim
  std::vector<double> rotations;    // count * rot_size()
  std::vector<double> intensities;  // count

  int rot_size() const { return dim == 2 ? 1 : 4; }

  static GaussianCloud zeros(int dim, std::size_t n) {
    GaussianCloud c;
    c.dim = dim;
    c.count = n;
    c.means.assign(n * dim, 0.0);
    c.log_scales.assign(n * dim, 0.0);
    c.rotations.assign(n * c.rot_size(), 0.0);
    if (dim == 3)
      for (std::size_t i = 0; i < n; ++i) c.rotations[4 * i] = 1.0;  // identity quat
    c.intensities.assign(n, 0.0);
    return c;
  }
};

// Integer offset table for the shared truncated neighborhood box. Offsets
// enumerate the axis-aligned box prod [-radius_a, +radius_a] in lexicographic
// order, axis 0 slowest.
struct NeighborhoodSpec {
  int dim = 2;
  std::array<int, 3> radii{0, 0, 0};  // first `dim` entries in use
  std::vector<int> offsets;           // cells * dim

  std::size_t cells() const {
    std::size_t c = 1;
    for (int a = 0; a < dim; ++a) c *= static_cast<std::size_t>(2 * radii[a] + 1);
    return c;
  }
};

}  // namespace giftct
