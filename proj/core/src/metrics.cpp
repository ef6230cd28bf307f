// core/src/metrics.cpp

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

#include "crmse/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crmse/errors.hpp"

namespace crmse::metrics {

namespace {

void require_aligned(const dsp::Waveform& a, const dsp::Waveform& b,
                     const char* op) {
  if (a.samples.size() != b.samples.size()) {
    throw InputError(std::string(op) + ": signal lengths differ (" +
                     std::to_string(a.samples.size()) + " vs " +
                     std::to_string(b.samples.size()) + ")");
  }
  if (a.sample_rate != b.sample_rate) {
    throw InputError(std::string(op) + ": sample rates differ");
  }
}

}  // namespace

void SsnrConfig::validate() const {
  if (segment_length <= 0) {
    throw ConfigError("ssnr: segment_length must be positive");
  }
  if (overlap < 0.0 || overlap >= 1.0) {
    throw ConfigError("ssnr: overlap must lie in [0, 1)");
  }
  if (clamp_min_db >= clamp_max_db) {
    throw ConfigError("ssnr: clamp_min must be below clamp_max");
  }
}

double ssnr(const dsp::Waveform& reference, const dsp::Waveform& estimate,
            const SsnrConfig& config) {
  config.validate();
  require_aligned(reference, estimate, "ssnr");

  const std::size_t seg = static_cast<std::size_t>(config.segment_length);
  const std::size_t hop = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::lround(config.segment_length * (1.0 - config.overlap))));

  double sum_db = 0.0;
  std::size_t used = 0;
  for (std::size_t start = 0; start + seg <= reference.samples.size();
       start += hop) {
    double ref_energy = 0.0;
    double err_energy = 0.0;
    for (std::size_t i = start; i < start + seg; ++i) {
      const double r = reference.samples[i];
      const double d = r - estimate.samples[i];
      ref_energy += r * r;
      err_energy += d * d;
    }
    if (ref_energy <= 0.0) continue;  // silence carries no information

    double seg_db;
    if (err_energy <= 0.0) {
      seg_db = config.clamp_max_db;
    } else {
      seg_db = 10.0 * std::log10(ref_energy / err_energy);
    }
    sum_db += std::clamp(seg_db, config.clamp_min_db, config.clamp_max_db);
    ++used;
  }

  if (used == 0) {
    throw InputError("ssnr: no segment with nonzero reference energy");
  }
  return sum_db / static_cast<double>(used);
}

double global_snr(const dsp::Waveform& reference, const dsp::Waveform& estimate) {
  require_aligned(reference, estimate, "global_snr");

  double ref_energy = 0.0;
  double err_energy = 0.0;
  for (std::size_t i = 0; i < reference.samples.size(); ++i) {
    const double r = reference.samples[i];
    const double d = r - estimate.samples[i];
    ref_energy += r * r;
    err_energy += d * d;
  }
  if (ref_energy <= 0.0) {
    throw InputError("global_snr: silent reference");
  }

  constexpr double kCapDb = 99.0;
  if (err_energy < 1e-20) return kCapDb;
  return std::min(kCapDb, 10.0 * std::log10(ref_energy / err_energy));
}

double log_spectral_distance(const dsp::Waveform& reference,
                             const dsp::Waveform& estimate,
                             const dsp::StftConfig& config) {
  require_aligned(reference, estimate, "log_spectral_distance");

  const dsp::ComplexSpectrogram ref_spec = dsp::stft(reference, config);
  const dsp::ComplexSpectrogram est_spec = dsp::stft(estimate, config);

  constexpr double kEps = 1e-10;
  double sum_sq = 0.0;
  for (Eigen::Index n = 0; n < ref_spec.num_frames(); ++n) {
    for (Eigen::Index k = 0; k < ref_spec.num_bins(); ++k) {
      const double ref_mag = std::max(std::abs(ref_spec.values(n, k)), kEps);
      const double est_mag = std::max(std::abs(est_spec.values(n, k)), kEps);
      const double db = 20.0 * std::log10(ref_mag / est_mag);
      sum_sq += db * db;
    }
  }
  const double count =
      static_cast<double>(ref_spec.num_frames() * ref_spec.num_bins());
  return std::sqrt(sum_sq / count);
}

}  // namespace crmse::metrics
