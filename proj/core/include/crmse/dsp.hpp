// crmse/dsp.hpp

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

#ifndef CRMSE_DSP_HPP
#define CRMSE_DSP_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Core>

namespace crmse::dsp {

/// Real sampled audio, amplitude nominally in [-1, 1].
struct Waveform {
  std::vector<double> samples;
  int sample_rate = 16000;

  std::size_t size() const { return samples.size(); }
  double duration_seconds() const {
    return static_cast<double>(samples.size()) / sample_rate;
  }
};

enum class Window { kHann };

/// Analysis/synthesis framing. Frame n covers samples
/// [n*hop_size, n*hop_size + frame_size).
struct StftConfig {
  int frame_size = 512;
  int hop_size = 256;
  Window window = Window::kHann;

  int num_bins() const { return frame_size / 2 + 1; }

  /// Throws ConfigError unless frame_size is a power of two >= 2 and
  /// 0 < hop_size <= frame_size.
  void validate() const;
};

/// N frames x K bins of complex STFT coefficients. K = frame_size/2 + 1.
struct ComplexSpectrogram {
  Eigen::MatrixXcd values;  // num_frames x num_bins
  StftConfig config;

  Eigen::Index num_frames() const { return values.rows(); }
  Eigen::Index num_bins() const { return values.cols(); }

  /// Throws ConfigError if the bin count disagrees with the framing.
  void validate() const;
};

constexpr bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// Periodic Hann window, w[m] = 0.5*(1 - cos(2*pi*m/size)).
std::vector<double> hann_window(int frame_size);

/// Non-negative-frequency half of the DFT of a real frame whose length is a
/// power of two. Returns length/2 + 1 bins.
std::vector<std::complex<double>> fft_forward(std::span<const double> frame);

/// Inverse of fft_forward under Hermitian extension. Takes L/2+1 bins and
/// returns L real samples. The imaginary parts of bin 0 and bin L/2 are
/// zeroed before transforming so the output is exactly real.
std::vector<double> fft_inverse(std::span<const std::complex<double>> bins);

/// Windowed framing + forward FFT. Requires at least one full frame.
ComplexSpectrogram stft(const Waveform& wave, const StftConfig& config);

/// Weighted overlap-add resynthesis: the window is applied again at
/// synthesis and the result is normalized by the per-sample sum of squared
/// windows. Reconstruction is exact on the fully-overlapped interior.
Waveform istft(const ComplexSpectrogram& spec, int sample_rate = 16000);

}  // namespace crmse::dsp

#endif  // CRMSE_DSP_HPP
