// core/src/dsp.cpp

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

#include "crmse/dsp.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "crmse/errors.hpp"

namespace crmse::dsp {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// In-place iterative radix-2 Cooley-Tukey. sign = -1 forward, +1 inverse
// (unscaled). Twiddles come from a table filled with direct trig calls so
// no rounding error accumulates across stages.
void fft_radix2(std::vector<std::complex<double>>& a, int sign) {
  const std::size_t n = a.size();
  if (n <= 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  std::vector<std::complex<double>> twiddle(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double angle = sign * kTwoPi * static_cast<double>(k) / n;
    twiddle[k] = {std::cos(angle), std::sin(angle)};
  }

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[start + k];
        const std::complex<double> v = a[start + k + len / 2] * twiddle[k * stride];
        a[start + k] = u + v;
        a[start + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

void StftConfig::validate() const {
  if (!is_power_of_two(frame_size) || frame_size < 2) {
    throw ConfigError("frame_size must be a power of two >= 2, got " +
                      std::to_string(frame_size));
  }
  if (hop_size <= 0 || hop_size > frame_size) {
    throw ConfigError("hop_size must satisfy 0 < hop <= frame_size, got " +
                      std::to_string(hop_size));
  }
}

void ComplexSpectrogram::validate() const {
  config.validate();
  if (values.cols() != config.num_bins()) {
    throw ConfigError("spectrogram has " + std::to_string(values.cols()) +
                      " bins but the framing implies " +
                      std::to_string(config.num_bins()));
  }
}

std::vector<double> hann_window(int frame_size) {
  if (!is_power_of_two(frame_size) || frame_size < 2) {
    throw ConfigError("hann_window: frame_size must be a power of two >= 2, got " +
                      std::to_string(frame_size));
  }
  std::vector<double> w(static_cast<std::size_t>(frame_size));
  for (int m = 0; m < frame_size; ++m) {
    w[static_cast<std::size_t>(m)] =
        0.5 * (1.0 - std::cos(kTwoPi * m / frame_size));
  }
  return w;
}

std::vector<std::complex<double>> fft_forward(std::span<const double> frame) {
  const int n = static_cast<int>(frame.size());
  if (!is_power_of_two(n) || n < 2) {
    throw ConfigError("fft_forward: frame length must be a power of two >= 2, got " +
                      std::to_string(n));
  }
  std::vector<std::complex<double>> a(frame.begin(), frame.end());
  fft_radix2(a, -1);
  a.resize(static_cast<std::size_t>(n / 2 + 1));
  return a;
}

std::vector<double> fft_inverse(std::span<const std::complex<double>> bins) {
  if (bins.size() < 2) {
    throw ConfigError("fft_inverse: need at least 2 bins");
  }
  const std::size_t half = bins.size() - 1;
  const std::size_t n = 2 * half;
  if (!is_power_of_two(static_cast<int>(n))) {
    throw ConfigError("fft_inverse: bin count must be L/2+1 for a power-of-two L, got " +
                      std::to_string(bins.size()));
  }

  std::vector<std::complex<double>> a(n);
  a[0] = {bins[0].real(), 0.0};
  a[half] = {bins[half].real(), 0.0};
  for (std::size_t k = 1; k < half; ++k) {
    a[k] = bins[k];
    a[n - k] = std::conj(bins[k]);
  }
  fft_radix2(a, +1);

  std::vector<double> out(n);
  const double scale = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i].real() * scale;
  return out;
}

ComplexSpectrogram stft(const Waveform& wave, const StftConfig& config) {
  config.validate();
  const std::size_t len = wave.samples.size();
  const std::size_t frame = static_cast<std::size_t>(config.frame_size);
  const std::size_t hop = static_cast<std::size_t>(config.hop_size);
  if (len < frame) {
    throw InputError("stft: input has " + std::to_string(len) +
                     " samples, need at least one frame of " +
                     std::to_string(frame));
  }

  const std::size_t num_frames = (len - frame) / hop + 1;
  const std::vector<double> window = hann_window(config.frame_size);

  ComplexSpectrogram spec;
  spec.config = config;
  spec.values.resize(static_cast<Eigen::Index>(num_frames), config.num_bins());

  std::vector<double> buf(frame);
  for (std::size_t n = 0; n < num_frames; ++n) {
    const double* src = wave.samples.data() + n * hop;
    for (std::size_t m = 0; m < frame; ++m) buf[m] = src[m] * window[m];
    const auto bins = fft_forward(buf);
    for (std::size_t k = 0; k < bins.size(); ++k) {
      spec.values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k)) = bins[k];
    }
  }
  return spec;
}

Waveform istft(const ComplexSpectrogram& spec, int sample_rate) {
  spec.validate();
  if (spec.num_frames() == 0) {
    throw InputError("istft: spectrogram has no frames");
  }

  const std::size_t frame = static_cast<std::size_t>(spec.config.frame_size);
  const std::size_t hop = static_cast<std::size_t>(spec.config.hop_size);
  const std::size_t num_frames = static_cast<std::size_t>(spec.num_frames());
  const std::size_t out_len = (num_frames - 1) * hop + frame;

  const std::vector<double> window = hann_window(spec.config.frame_size);

  Waveform out;
  out.sample_rate = sample_rate;
  out.samples.assign(out_len, 0.0);
  std::vector<double> window_energy(out_len, 0.0);

  std::vector<std::complex<double>> bins(static_cast<std::size_t>(spec.num_bins()));
  for (std::size_t n = 0; n < num_frames; ++n) {
    for (std::size_t k = 0; k < bins.size(); ++k) {
      bins[k] = spec.values(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(k));
    }
    const std::vector<double> time = fft_inverse(bins);
    const std::size_t offset = n * hop;
    for (std::size_t m = 0; m < frame; ++m) {
      out.samples[offset + m] += time[m] * window[m];
      window_energy[offset + m] += window[m] * window[m];
    }
  }

  // Samples whose accumulated window energy is negligible (the very edges,
  // where the Hann window is ~0) are left at zero rather than amplified.
  constexpr double kMinWindowEnergy = 1e-11;
  for (std::size_t i = 0; i < out_len; ++i) {
    if (window_energy[i] > kMinWindowEnergy) {
      out.samples[i] /= window_energy[i];
    } else {
      out.samples[i] = 0.0;
    }
  }
  return out;
}

}  // namespace crmse::dsp
