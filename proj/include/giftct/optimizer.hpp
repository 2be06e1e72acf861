#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "giftct/geometry.hpp"
#include "giftct/objective.hpp"
#include "giftct/projector.hpp"
#include "giftct/rasterizer.hpp"
#include "giftct/types.hpp"

namespace giftct {

inline constexpr std::size_t kMaxGaussians = 150000;

struct ReconConfig {
  std::size_t gaussians = 0;  // 0: one per 4 voxels of the target, capped at kMaxGaussians
  double lr = 3e-4;
  std::size_t max_iters = 2000;
  LossWeights weights{};
  std::uint64_t seed = 0;
  double convergence_rel = 1e-5;       // relative loss improvement threshold
  std::size_t convergence_window = 100;  // iterations without improvement
  std::size_t eval_every = 50;
  FilterWindow init_filter = FilterWindow::RamLak;

  std::size_t resolve_count(const Dims3& dims) const {
    if (gaussians > 0) return gaussians;
    std::size_t n = dims[0] * dims[1] * dims[2] / 4;
    if (n < 1) n = 1;
    return n > kMaxGaussians ? kMaxGaussians : n;
  }
};

// Adam moments over the flattened cloud parameters, order
// [means, log_scales, rotations, intensities].
struct OptimState {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  std::size_t t = 0;
  std::vector<double> m;
  std::vector<double> v;
};

struct divergence_error : std::runtime_error {
  std::size_t iteration;
  VolumeGrid best_volume;  // best-so-far reconstruction at the failure point
  divergence_error(std::size_t it, VolumeGrid best)
      : std::runtime_error("non-finite loss or gradient at iteration " + std::to_string(it)),
        iteration(it),
        best_volume(std::move(best)) {}
};

struct MetricSnapshot {
  std::size_t iter = 0;
  double loss = 0.0;
  double l1 = 0.0;
  double ssim = 0.0;
  double tv = 0.0;
  double elapsed_s = 0.0;
};

struct ReconResult {
  VolumeGrid volume;  // best-so-far, clamped to >= 0
  std::vector<double> loss_trace;
  std::vector<MetricSnapshot> snapshots;
  std::size_t iterations = 0;
  bool converged = false;
};

using ProgressFn = std::function<void(std::size_t iter, double loss, double elapsed_s)>;

// Jittered-lattice initialization: means cover the grid, isotropic scales at
// half the lattice pitch, identity rotations, intensities sampled from the
// FBP reconstruction and rescaled to match its total mass.
GaussianCloud init_cloud(const Sinogram& meas, const ProjectionGeometry& geom,
                         const ReconConfig& cfg);

// Standard bias-corrected Adam update over all parameter groups; 3D
// quaternions are renormalized afterwards. Throws divergence_error on
// non-finite gradients.
void adam_step(OptimState& state, GaussianCloud& params, const CloudGrads& grads, double lr);

// The full iterative loop: rasterize -> project -> composite loss ->
// backpropagate -> Adam, until convergence or max_iters. `initial` overrides
// init_cloud (used by tests and warm starts).
ReconResult reconstruct(const Sinogram& meas, const ProjectionGeometry& geom,
                        const ReconConfig& cfg, const GaussianCloud* initial = nullptr,
                        const ProgressFn& progress = {});

}  // namespace giftct
