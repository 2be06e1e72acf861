#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "giftct/types.hpp"

namespace giftct {

// Per-Gaussian inverse covariance, derived from log-scales and rotation as
// Sigma = R S S^T R^T with S = diag(exp(log_scales)). Stored row-major,
// dim*dim per Gaussian, exactly symmetric and SPD by construction.
struct PrecisionSet {
  int dim = 2;
  std::size_t count = 0;
  std::vector<double> inv_cov;  // count * dim * dim

  const double* at(std::size_t i) const { return inv_cov.data() + i * dim * dim; }
};

// Closed-form Sigma^{-1} = R S^{-2} R^T; no assembled-matrix inversion.
// Quaternions are renormalized (must be nonzero).
PrecisionSet precision_from_params(const GaussianCloud& cloud);

// Per-axis median of exp(log_scales); even counts average the two middle
// values. Only the first cloud.dim entries of the result are meaningful.
std::array<double, 3> median_std(const GaussianCloud& cloud);

// Shared truncated neighborhood: radius_a = clamp(ceil(3 sigma_a), 1, dim_a),
// offsets enumerating the integer box in fixed lexicographic order.
NeighborhoodSpec neighborhood_offsets(const std::array<double, 3>& sigma, const Dims3& dims,
                                      int dim);

// Squared Mahalanobis distances for the grid-aligned offsets delta'' =
// delta' - dmu, evaluated with the four-term decomposition
//   d'Qd' - d'Q dmu - dmu Q d' + dmu Q dmu.
// dmu is count*dim fractional parts; result is count*cells, cell fastest.
std::vector<double> mahalanobis_sq(const NeighborhoodSpec& spec, const std::vector<double>& dmu,
                                   const PrecisionSet& precision);

// Materialized contribution block: Gamma = exp(-D^2/2) * I per (gaussian,
// cell), plus the base voxel indices floor(mu) and fractional parts dmu.
struct ContributionBlock {
  std::size_t count = 0;
  std::size_t cells = 0;
  int dim = 2;
  std::vector<double> gamma;        // count * cells
  std::vector<std::int64_t> base;   // count * dim, floor(mu)
  std::vector<double> dmu;          // count * dim, in [0, 1)
};

ContributionBlock compute_contributions(const GaussianCloud& cloud, const NeighborhoodSpec& spec);

// Confined rasterization (scatter-add of the contribution blocks). The
// neighborhood is derived from the median std once per call. Cells falling
// outside the grid are dropped; accumulation is chunked with a fixed merge
// order so results do not depend on the worker count.
VolumeGrid rasterize(const GaussianCloud& cloud, const Dims3& dims);

// As `rasterize` but with an explicit neighborhood (the optimizer reuses one
// spec per iteration).
VolumeGrid rasterize_with_spec(const GaussianCloud& cloud, const Dims3& dims,
                               const NeighborhoodSpec& spec);

// Unconfined reference: every Gaussian evaluated at every voxel through the
// direct quadratic form on (x - mu). Test oracle; independent of the confined
// path.
VolumeGrid rasterize_dense(const GaussianCloud& cloud, const Dims3& dims);

struct CloudGrads {
  std::vector<double> means;
  std::vector<double> log_scales;
  std::vector<double> rotations;
  std::vector<double> intensities;

  static CloudGrads zeros_like(const GaussianCloud& c) {
    CloudGrads g;
    g.means.assign(c.means.size(), 0.0);
    g.log_scales.assign(c.log_scales.size(), 0.0);
    g.rotations.assign(c.rotations.size(), 0.0);
    g.intensities.assign(c.intensities.size(), 0.0);
    return g;
  }
};

// Reverse-mode derivative of rasterize at `cloud` for the given cotangent.
// floor(mu) is piecewise constant so the mean gradient flows through the
// fractional part; the 3-sigma cutoff is a fixed mask. Quaternion gradients
// include the normalization Jacobian.
CloudGrads rasterize_vjp(const GaussianCloud& cloud, const VolumeGrid& cotangent);

CloudGrads rasterize_vjp_with_spec(const GaussianCloud& cloud, const VolumeGrid& cotangent,
                                   const NeighborhoodSpec& spec);

}  // namespace giftct
