#pragma once

#include <cstddef>
#include <vector>

#include "giftct/types.hpp"

namespace giftct {

// Weights of the composite objective l1 * L1 + l2 * (1 - SSIM) + l3 * TV.
struct LossWeights {
  double l1 = 0.4;
  double ssim = 0.1;
  double tv = 0.5;
};

// Standard windowed SSIM configuration: 11-tap Gaussian window, sigma 1.5,
// stability constants C1 = (k1 L)^2, C2 = (k2 L)^2.
struct SsimConfig {
  int window = 11;
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;
  double data_range = 1.0;

  double c1() const { return (k1 * data_range) * (k1 * data_range); }
  double c2() const { return (k2 * data_range) * (k2 * data_range); }
};

struct ValueGrad {
  double value = 0.0;
  std::vector<double> grad;  // w.r.t. the first argument
};

// Mean absolute difference; gradient sign(pred - meas)/count with sign(0)=0.
ValueGrad l1_loss(const Sinogram& pred, const Sinogram& meas);

// Mean SSIM of two images with reflection padding; images smaller than the
// window fall back to one global window. Gradient w.r.t. `a`.
ValueGrad ssim_image(const double* a, const double* b, std::size_t h, std::size_t w,
                     const SsimConfig& cfg);

// Per-slice SSIM of sinogram stacks, averaged over slices.
ValueGrad ssim(const Sinogram& a, const Sinogram& b, const SsimConfig& cfg);

double ssim_value(const VolumeGrid& a, const VolumeGrid& b, const SsimConfig& cfg);

// Anisotropic total variation: per-axis mean of |forward difference|, summed
// over axes. Subgradient with sign(0)=0. Couples slices when slices > 1.
ValueGrad tv(const VolumeGrid& v);

struct CompositeLoss {
  double value = 0.0;
  double l1_term = 0.0;    // unweighted L1
  double ssim_term = 0.0;  // unweighted mean SSIM
  double tv_term = 0.0;    // unweighted TV
  std::vector<double> d_volume;   // d value / d V
  std::vector<double> d_measure;  // d value / d pred
};

// Composite objective w1 * L1(pred, meas) + w2 * (1 - SSIM(pred, meas)) +
// w3 * TV(volume). The SSIM data range is max(meas) - min(meas), with a unit
// fallback when the measurement is constant.
CompositeLoss composite_loss(const VolumeGrid& volume, const Sinogram& pred,
                             const Sinogram& meas, const LossWeights& weights);

// 10 log10(range^2 / MSE); +inf when MSE == 0.
double psnr(const double* x, const double* ref, std::size_t count, double range);
double psnr(const VolumeGrid& x, const VolumeGrid& ref, double range);

}  // namespace giftct
