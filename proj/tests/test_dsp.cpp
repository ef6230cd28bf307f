// tests/test_dsp.cpp

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

#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"

#include "crmse/dsp.hpp"
#include "crmse/errors.hpp"
#include "crmse/rng.hpp"
#include "naive_dft.hpp"
#include "signals.hpp"

using namespace crmse;

TEST_SUITE_BEGIN("dsp");

TEST_CASE("hann window closed form at size 4") {
  const auto w = dsp::hann_window(4);
  REQUIRE(w.size() == 4);
  CHECK(w[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(w[3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("hann window sums to half the frame size") {
  const auto w = dsp::hann_window(512);
  double sum = 0.0;
  for (double v : w) sum += v;
  CHECK(std::abs(sum - 256.0) < 1e-9);
}

TEST_CASE("hann window starts at zero for every size") {
  for (int size : {2, 8, 64, 512, 2048}) {
    CHECK(dsp::hann_window(size)[0] == 0.0);
  }
}

TEST_CASE("hann window rejects bad sizes") {
  CHECK_THROWS_AS(dsp::hann_window(0), ConfigError);
  CHECK_THROWS_AS(dsp::hann_window(1), ConfigError);
  CHECK_THROWS_AS(dsp::hann_window(3), ConfigError);
  CHECK_THROWS_AS(dsp::hann_window(500), ConfigError);
}

TEST_CASE("fft of a constant frame concentrates in bin 0") {
  const std::vector<double> ones(8, 1.0);
  const auto bins = dsp::fft_forward(ones);
  REQUIRE(bins.size() == 5);
  CHECK(std::abs(bins[0] - std::complex<double>(8.0, 0.0)) < 1e-12);
  for (std::size_t k = 1; k < bins.size(); ++k) {
    CHECK(std::abs(bins[k]) < 1e-12);
  }
}

TEST_CASE("fft of a single tone lands in its bin") {
  std::vector<double> frame(8);
  for (std::size_t m = 0; m < 8; ++m) {
    frame[m] = std::cos(2.0 * std::numbers::pi * static_cast<double>(m) / 8.0);
  }
  const auto bins = dsp::fft_forward(frame);
  CHECK(std::abs(bins[1] - std::complex<double>(4.0, 0.0)) < 1e-12);
  for (std::size_t k = 0; k < bins.size(); ++k) {
    if (k != 1) CHECK(std::abs(bins[k]) < 1e-12);
  }
}

TEST_CASE("fft matches the naive DFT oracle") {
  rng::Engine engine(42);
  for (std::size_t length : {8u, 64u, 512u}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> frame(length);
      for (auto& v : frame) v = rng::uniform(engine, -1.0, 1.0);

      const auto fast = dsp::fft_forward(frame);
      const auto naive = testing::naive_dft_half_spectrum(frame);
      REQUIRE(fast.size() == naive.size());

      double scale = 0.0;
      for (const auto& b : naive) scale = std::max(scale, std::abs(b));
      for (std::size_t k = 0; k < fast.size(); ++k) {
        CHECK(std::abs(fast[k] - naive[k]) / scale < 1e-10);
      }
    }
  }
}

TEST_CASE("fft rejects non-power-of-two frames") {
  const std::vector<double> frame(12, 0.0);
  CHECK_THROWS_AS(dsp::fft_forward(frame), ConfigError);
}

TEST_CASE("inverse fft round trip") {
  rng::Engine engine(7);
  std::vector<double> frame(64);
  for (auto& v : frame) v = rng::uniform(engine, -1.0, 1.0);

  const auto bins = dsp::fft_forward(frame);
  const auto back = dsp::fft_inverse(bins);
  REQUIRE(back.size() == frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) {
    CHECK(std::abs(back[i] - frame[i]) < 1e-10);
  }
}

TEST_CASE("inverse fft of zeros is zero") {
  const std::vector<std::complex<double>> bins(5, {0.0, 0.0});
  for (double v : dsp::fft_inverse(bins)) CHECK(v == 0.0);
}

TEST_CASE("inverse fft of a pure bin 0 is constant") {
  std::vector<std::complex<double>> bins(5, {0.0, 0.0});
  bins[0] = {8.0, 0.0};
  for (double v : dsp::fft_inverse(bins)) {
    CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("stft of all-ones has bin 0 equal to the window sum") {
  dsp::Waveform wave;
  wave.samples.assign(4096, 1.0);
  const auto spec = dsp::stft(wave, {});
  REQUIRE(spec.num_bins() == 257);
  for (Eigen::Index n = 0; n < spec.num_frames(); ++n) {
    CHECK(std::abs(spec.values(n, 0) - std::complex<double>(256.0, 0.0)) < 1e-9);
  }
}

TEST_CASE("stft of a bin-centered sinusoid stays in its neighborhood") {
  // 250 Hz at 16 kHz with 512-sample frames is exactly bin 8.
  const auto wave = testing::sine_waveform(250.0, 0.8, 16000);
  const auto spec = dsp::stft(wave, {});

  for (Eigen::Index n = 0; n < spec.num_frames(); ++n) {
    double peak = 0.0;
    Eigen::Index peak_bin = 0;
    for (Eigen::Index k = 0; k < spec.num_bins(); ++k) {
      const double mag = std::abs(spec.values(n, k));
      if (mag > peak) {
        peak = mag;
        peak_bin = k;
      }
    }
    CHECK(peak_bin == 8);
    for (Eigen::Index k = 0; k < spec.num_bins(); ++k) {
      if (k < 7 || k > 9) {
        CHECK(std::abs(spec.values(n, k)) < 1e-10 * peak);
      }
    }
  }
}

TEST_CASE("stft of silence is all zero") {
  dsp::Waveform wave;
  wave.samples.assign(2048, 0.0);
  const auto spec = dsp::stft(wave, {});
  CHECK(spec.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("stft frame count follows the framing arithmetic") {
  dsp::Waveform wave;
  wave.samples.assign(16384, 0.0);
  const auto spec = dsp::stft(wave, {});
  CHECK(spec.num_frames() == (16384 - 512) / 256 + 1);
}

TEST_CASE("stft rejects too-short input") {
  dsp::Waveform wave;
  wave.samples.assign(100, 0.0);
  CHECK_THROWS_AS(dsp::stft(wave, {}), InputError);
}

TEST_CASE("istft round trip reconstructs the interior") {
  rng::Engine engine(3);
  const auto wave = testing::random_waveform(engine, 4 * 512);
  const auto back = dsp::istft(dsp::stft(wave, {}), wave.sample_rate);
  CHECK(testing::max_interior_error(wave, back, 512) < 1e-10);
}

TEST_CASE("istft of a zero spectrogram is silence") {
  dsp::ComplexSpectrogram spec;
  spec.values = Eigen::MatrixXcd::Zero(10, 257);
  const auto wave = dsp::istft(spec);
  for (double s : wave.samples) CHECK(s == 0.0);
}

TEST_CASE("istft round trip of a sinusoid exceeds 100 dB interior SNR") {
  const auto wave = testing::sine_waveform(250.0, 0.8, 16000);
  const auto back = dsp::istft(dsp::stft(wave, {}), wave.sample_rate);
  CHECK(testing::interior_snr_db(wave, back, 512) > 100.0);
}

TEST_CASE("istft rejects an empty spectrogram") {
  dsp::ComplexSpectrogram spec;
  spec.values = Eigen::MatrixXcd::Zero(0, 257);
  CHECK_THROWS_AS(dsp::istft(spec), InputError);
}

TEST_CASE("stft is linear") {
  rng::Engine engine(11);
  const auto x = testing::random_waveform(engine, 3 * 512);
  const auto y = testing::random_waveform(engine, 3 * 512);
  const double a = 1.7;
  const double b = -0.4;

  dsp::Waveform mix = x;
  for (std::size_t i = 0; i < mix.samples.size(); ++i) {
    mix.samples[i] = a * x.samples[i] + b * y.samples[i];
  }

  const auto sx = dsp::stft(x, {});
  const auto sy = dsp::stft(y, {});
  const auto sm = dsp::stft(mix, {});

  const Eigen::MatrixXcd expected = a * sx.values + b * sy.values;
  const double scale = expected.cwiseAbs().maxCoeff();
  CHECK((sm.values - expected).cwiseAbs().maxCoeff() / scale < 1e-12);
}

TEST_CASE("windowed frame energy matches its spectrum (Parseval)") {
  rng::Engine engine(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int length = 512;
    const auto window = dsp::hann_window(length);
    std::vector<double> frame(static_cast<std::size_t>(length));
    for (std::size_t m = 0; m < frame.size(); ++m) {
      frame[m] = rng::uniform(engine, -1.0, 1.0) * window[m];
    }

    double time_energy = 0.0;
    for (double v : frame) time_energy += v * v;

    const auto bins = dsp::fft_forward(frame);
    double freq_energy = std::norm(bins.front()) + std::norm(bins.back());
    for (std::size_t k = 1; k + 1 < bins.size(); ++k) {
      freq_energy += 2.0 * std::norm(bins[k]);
    }
    freq_energy /= static_cast<double>(length);

    CHECK(std::abs(time_energy - freq_energy) / time_energy < 1e-10);
  }
}

TEST_SUITE_END();
