// tests/support/signals.hpp

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

#ifndef CRMSE_TESTS_SIGNALS_HPP
#define CRMSE_TESTS_SIGNALS_HPP

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "crmse/dsp.hpp"
#include "crmse/rng.hpp"

namespace crmse::testing {

inline dsp::Waveform random_waveform(rng::Engine& engine, std::size_t length,
                                     int sample_rate = 16000) {
  dsp::Waveform w;
  w.sample_rate = sample_rate;
  w.samples.resize(length);
  for (auto& s : w.samples) s = rng::uniform(engine, -0.5, 0.5);
  return w;
}

inline dsp::Waveform sine_waveform(double freq_hz, double amplitude,
                                   std::size_t length, int sample_rate = 16000) {
  dsp::Waveform w;
  w.sample_rate = sample_rate;
  w.samples.resize(length);
  for (std::size_t n = 0; n < length; ++n) {
    w.samples[n] = amplitude * std::sin(2.0 * std::numbers::pi * freq_hz *
                                        static_cast<double>(n) / sample_rate);
  }
  return w;
}

/// Largest |a-b| over samples [guard, size-guard).
inline double max_interior_error(const dsp::Waveform& a, const dsp::Waveform& b,
                                 std::size_t guard) {
  const std::size_t stop = std::min(a.samples.size(), b.samples.size()) - guard;
  double worst = 0.0;
  for (std::size_t i = guard; i < stop; ++i) {
    worst = std::max(worst, std::abs(a.samples[i] - b.samples[i]));
  }
  return worst;
}

/// 10*log10(sum ref^2 / sum (ref-est)^2) over [guard, size-guard).
inline double interior_snr_db(const dsp::Waveform& ref, const dsp::Waveform& est,
                              std::size_t guard) {
  const std::size_t stop = std::min(ref.samples.size(), est.samples.size()) - guard;
  double ref_energy = 0.0;
  double err_energy = 0.0;
  for (std::size_t i = guard; i < stop; ++i) {
    const double d = ref.samples[i] - est.samples[i];
    ref_energy += ref.samples[i] * ref.samples[i];
    err_energy += d * d;
  }
  if (err_energy == 0.0) return 300.0;
  return 10.0 * std::log10(ref_energy / err_energy);
}

}  // namespace crmse::testing

#endif  // CRMSE_TESTS_SIGNALS_HPP
