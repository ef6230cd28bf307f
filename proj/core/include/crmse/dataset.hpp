// crmse/dataset.hpp

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

#ifndef CRMSE_DATASET_HPP
#define CRMSE_DATASET_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "crmse/dsp.hpp"
#include "crmse/masking.hpp"

namespace crmse::data {

/// A clean/noise/noisy triple with noisy = clean + noise. The noise field
/// holds the already-scaled noise and may be empty when the noise is not
/// known separately.
struct Utterance {
  dsp::Waveform clean;
  dsp::Waveform noise;
  dsp::Waveform noisy;
  std::string id;

  bool has_noise() const { return !noise.samples.empty(); }
};

/// One frame-level training example: a context window of normalized noisy
/// STFT frames and the bounded complex ratio mask of the center frame.
struct TrainingExample {
  Eigen::MatrixXcd context;  // (2*radius+1) x num_bins
  Eigen::VectorXcd target;   // num_bins, components in [-1, 1]
  std::string utterance_id;
  int frame_index = 0;
};

/// Scales the noise so that 10*log10(sum s^2 / sum (g v)^2) equals snr_db
/// and returns {clean, scaled noise, clean + scaled noise}. The noise must
/// be at least as long as the clean signal; any excess is trimmed.
Utterance mix_at_snr(const dsp::Waveform& clean, const dsp::Waveform& noise,
                     double snr_db, std::string id = {});

/// Deterministic synthetic corpus: harmonic "speech" (2-4 partials with a
/// slow amplitude envelope) mixed with white or amplitude-modulated noise
/// at SNRs cycling through {0, 5, 10, 15} dB.
std::vector<Utterance> synth_corpus(std::uint64_t seed, int count,
                                    int sample_rate, double duration_seconds);

/// Turns one utterance into frame-level examples. The noisy STFT is
/// normalized by its peak magnitude; targets are bounded CRMs computed with
/// `mask_floor` (relative to that peak) flooring the denominator; edge
/// contexts are zero-padded.
std::vector<TrainingExample> make_examples(
    const Utterance& utt, const dsp::StftConfig& config, int context_radius = 10,
    double mask_floor = mask::kDefaultRelativeFloor);

/// One manifest row: an utterance id, the clean reference file, the
/// processed file evaluated against it (a mixture or an enhanced output),
/// and optionally the mixing SNR.
struct ManifestEntry {
  std::string id;
  std::filesystem::path clean;
  std::filesystem::path processed;
  std::optional<double> snr_db;
};

/// Tab-separated manifest with a leading comment line. Paths are written
/// relative to the manifest's directory when possible.
void write_manifest(const std::vector<ManifestEntry>& entries,
                    const std::filesystem::path& path);

/// Reads a manifest; relative paths are resolved against the manifest's
/// directory. Rows have 3 or 4 tab-separated fields.
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

}  // namespace crmse::data

#endif  // CRMSE_DATASET_HPP
