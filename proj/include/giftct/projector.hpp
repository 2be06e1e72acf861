#pragma once

#include <cstddef>
#include <vector>

#include "giftct/geometry.hpp"
#include "giftct/types.hpp"

namespace giftct {

enum class FilterWindow { RamLak, Hann };

// Ramp filter state: frequency response sampled on an FFT grid of power-of-two
// length >= 2 * detectors. The response is the DFT of the discrete Ram-Lak
// kernel laid out circularly, optionally shaped by a Hann window; bin 0 falls
// out of that construction rather than being forced to zero.
struct RampFilter {
  std::size_t detectors = 0;
  std::size_t length = 0;
  FilterWindow window = FilterWindow::RamLak;
  std::vector<double> response;  // length real weights
};

RampFilter make_ramp_filter(std::size_t detectors, FilterWindow window = FilterWindow::RamLak);

// Discrete Ram-Lak kernel values h[0..count-1] for unit detector spacing:
// h[0] = 1/4, h[k] = -1/(pi^2 k^2) for odd k, 0 for even k != 0.
std::vector<double> ramlak_spatial_kernel(std::size_t count);

// Step length of the Joseph-style ray integration, in grid units.
inline constexpr double kRayStep = 0.5;

// Parallel-beam Radon forward projection: for every (slice, angle, detector)
// the line integral of the bilinearly interpolated grid along the ray at the
// detector's signed offset, direction (-sin t, cos t), sampled every kRayStep
// and scaled by the step. Linear in the grid values.
Sinogram radon_forward(const VolumeGrid& grid, const ProjectionGeometry& geom);

// Exact transpose of radon_forward: every (sample -> bilinear weight)
// contribution of the forward pass is reversed, accumulating sinogram values
// into voxels with identical weights and step scaling.
VolumeGrid radon_adjoint(const Sinogram& sino, const ProjectionGeometry& geom);

// Convolves each projection row with the discrete Ram-Lak kernel via FFT with
// zero padding.
Sinogram ramp_filter(const Sinogram& sino, FilterWindow window = FilterWindow::RamLak);

// Filtered back projection: radon_adjoint(ramp_filter(sino)) * pi / views,
// clamped to >= 0.
VolumeGrid fbp(const Sinogram& sino, const ProjectionGeometry& geom,
               FilterWindow window = FilterWindow::RamLak);

}  // namespace giftct
