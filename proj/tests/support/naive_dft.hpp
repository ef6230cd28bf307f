// tests/support/naive_dft.hpp

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

#ifndef CRMSE_TESTS_NAIVE_DFT_HPP
#define CRMSE_TESTS_NAIVE_DFT_HPP

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace crmse::testing {

// Direct O(L^2) evaluation of the defining DFT sum, kept deliberately
// independent of the library's transform so it can serve as its oracle.
inline std::vector<std::complex<double>> naive_dft_half_spectrum(
    std::span<const double> frame) {
  const std::size_t n = frame.size();
  std::vector<std::complex<double>> bins(n / 2 + 1);
  for (std::size_t k = 0; k < bins.size(); ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t m = 0; m < n; ++m) {
      const double angle = -2.0 * std::numbers::pi *
                           static_cast<double>(k) * static_cast<double>(m) /
                           static_cast<double>(n);
      acc += frame[m] * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    bins[k] = acc;
  }
  return bins;
}

}  // namespace crmse::testing

#endif  // CRMSE_TESTS_NAIVE_DFT_HPP
