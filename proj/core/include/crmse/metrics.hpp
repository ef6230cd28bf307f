// crmse/metrics.hpp

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

#ifndef CRMSE_METRICS_HPP
#define CRMSE_METRICS_HPP

#include "crmse/dsp.hpp"

namespace crmse::metrics {

struct SsnrConfig {
  int segment_length = 512;
  double overlap = 0.5;        // fraction of segment shared with the next
  double clamp_min_db = -10.0;
  double clamp_max_db = 35.0;

  void validate() const;
};

/// Segmental SNR: per segment 10*log10(sum ref^2 / sum (ref-est)^2),
/// clamped to [clamp_min, clamp_max] dB, averaged over segments with
/// nonzero reference energy (silent segments are skipped).
double ssnr(const dsp::Waveform& reference, const dsp::Waveform& estimate,
            const SsnrConfig& config = {});

/// Whole-signal SNR in dB, capped at 99 (the cap is reported whenever the
/// error energy is below 1e-20).
double global_snr(const dsp::Waveform& reference, const dsp::Waveform& estimate);

/// RMS over frames and bins of 20*log10(max(|S_ref|, eps) / max(|S_est|, eps)),
/// eps = 1e-10. Symmetric in its arguments.
double log_spectral_distance(const dsp::Waveform& reference,
                             const dsp::Waveform& estimate,
                             const dsp::StftConfig& config = {});

}  // namespace crmse::metrics

#endif  // CRMSE_METRICS_HPP
