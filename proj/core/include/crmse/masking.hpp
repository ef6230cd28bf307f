// crmse/masking.hpp

// Copyright 2026  The crmse authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef CRMSE_MASKING_HPP
#define CRMSE_MASKING_HPP

#include <Eigen/Core>

#include "crmse/dsp.hpp"

namespace crmse::mask {

/// Complex time-frequency mask. `bounded` marks the tanh-compressed domain,
/// in which real and imaginary parts each lie in [-1, 1].
struct ComplexMask {
  Eigen::MatrixXcd values;  // num_frames x num_bins
  bool bounded = false;
};

/// Real magnitude-scaling mask (IBM/IRM/SMM). Application preserves the
/// noisy phase.
struct RealMask {
  Eigen::MatrixXd values;  // num_frames x num_bins
};

/// Default denominator floor, relative to the utterance's peak |X|. Bins
/// where the noisy spectrum is this far below the peak cannot be retrieved
/// and have their mask capped instead.
inline constexpr double kDefaultRelativeFloor = 1e-8;

/// Absolute floor for a given noisy spectrogram: relative * max |X|.
/// Falls back to `relative` itself when the spectrogram is all zero.
double relative_floor(const dsp::ComplexSpectrogram& noisy,
                      double relative = kDefaultRelativeFloor);

/// Complex ratio mask M = S/X per bin, computed componentwise as
///   M_r = (X_r S_r + X_i S_i) / d,   M_i = (X_r S_i - X_i S_r) / d,
/// with d = max(X_r^2 + X_i^2, floor^2). Result is unbounded.
ComplexMask crm(const dsp::ComplexSpectrogram& clean,
                const dsp::ComplexSpectrogram& noisy, double floor);

/// Componentwise tanh compression: B = tanh(M_r) + j*tanh(M_i).
ComplexMask bound_mask(const ComplexMask& mask);

/// Inverse of bound_mask: components are clamped to [-clip, clip] and then
/// atanh is applied componentwise. Clamping absorbs saturated values.
ComplexMask unbound_mask(const ComplexMask& mask, double clip = 0.999);

/// S_hat = M * X per bin (complex multiplication). The mask must be in the
/// unbounded domain; unbound_mask first if needed.
dsp::ComplexSpectrogram apply_mask(const ComplexMask& mask,
                                   const dsp::ComplexSpectrogram& noisy);

/// Real-mask application: scales magnitudes, reuses the noisy phase.
dsp::ComplexSpectrogram apply_mask(const RealMask& mask,
                                   const dsp::ComplexSpectrogram& noisy);

/// Ideal binary mask: 1 where |S|^2 > |V|^2, else 0 (ties suppress).
RealMask ibm(const dsp::ComplexSpectrogram& clean,
             const dsp::ComplexSpectrogram& noise);

/// Ideal ratio mask: sqrt(|S|^2 / (|S|^2 + |V|^2)), 0 where both are 0.
RealMask irm(const dsp::ComplexSpectrogram& clean,
             const dsp::ComplexSpectrogram& noise);

/// Spectral magnitude mask: |S| / max(|X|, floor). Unbounded above.
RealMask smm(const dsp::ComplexSpectrogram& clean,
             const dsp::ComplexSpectrogram& noisy, double floor);

}  // namespace crmse::mask

#endif  // CRMSE_MASKING_HPP
