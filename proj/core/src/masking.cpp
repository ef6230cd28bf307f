// core/src/masking.cpp

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

#include "crmse/masking.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crmse/errors.hpp"

namespace crmse::mask {

namespace {

void require_same_shape(const dsp::ComplexSpectrogram& a,
                        const dsp::ComplexSpectrogram& b, const char* op) {
  if (a.values.rows() != b.values.rows() || a.values.cols() != b.values.cols()) {
    throw InputError(std::string(op) + ": spectrogram shapes differ (" +
                     std::to_string(a.values.rows()) + "x" +
                     std::to_string(a.values.cols()) + " vs " +
                     std::to_string(b.values.rows()) + "x" +
                     std::to_string(b.values.cols()) + ")");
  }
}

void require_positive_floor(double floor, const char* op) {
  if (!(floor > 0.0)) {
    throw ConfigError(std::string(op) + ": floor must be positive, got " +
                      std::to_string(floor));
  }
}

}  // namespace

double relative_floor(const dsp::ComplexSpectrogram& noisy, double relative) {
  require_positive_floor(relative, "relative_floor");
  const double peak = noisy.values.cwiseAbs().maxCoeff();
  return peak > 0.0 ? relative * peak : relative;
}

ComplexMask crm(const dsp::ComplexSpectrogram& clean,
                const dsp::ComplexSpectrogram& noisy, double floor) {
  require_same_shape(clean, noisy, "crm");
  require_positive_floor(floor, "crm");

  const double floor_sq = floor * floor;
  ComplexMask mask;
  mask.bounded = false;
  mask.values.resize(noisy.values.rows(), noisy.values.cols());
  for (Eigen::Index n = 0; n < noisy.values.rows(); ++n) {
    for (Eigen::Index k = 0; k < noisy.values.cols(); ++k) {
      const std::complex<double> s = clean.values(n, k);
      const std::complex<double> x = noisy.values(n, k);
      const double denom = std::max(std::norm(x), floor_sq);
      mask.values(n, k) = {
          (x.real() * s.real() + x.imag() * s.imag()) / denom,
          (x.real() * s.imag() - x.imag() * s.real()) / denom};
    }
  }
  return mask;
}

ComplexMask bound_mask(const ComplexMask& mask) {
  if (mask.bounded) {
    throw ConfigError("bound_mask: mask is already in the bounded domain");
  }
  ComplexMask out;
  out.bounded = true;
  out.values = mask.values.unaryExpr([](std::complex<double> m) {
    return std::complex<double>(std::tanh(m.real()), std::tanh(m.imag()));
  });
  return out;
}

ComplexMask unbound_mask(const ComplexMask& mask, double clip) {
  if (!mask.bounded) {
    throw ConfigError("unbound_mask: mask is not in the bounded domain");
  }
  if (!(clip > 0.0 && clip < 1.0)) {
    throw ConfigError("unbound_mask: clip must lie in (0, 1), got " +
                      std::to_string(clip));
  }
  ComplexMask out;
  out.bounded = false;
  out.values = mask.values.unaryExpr([clip](std::complex<double> b) {
    const double re = std::clamp(b.real(), -clip, clip);
    const double im = std::clamp(b.imag(), -clip, clip);
    return std::complex<double>(std::atanh(re), std::atanh(im));
  });
  return out;
}

dsp::ComplexSpectrogram apply_mask(const ComplexMask& mask,
                                   const dsp::ComplexSpectrogram& noisy) {
  if (mask.bounded) {
    throw ConfigError("apply_mask: mask is bounded; unbound_mask it first");
  }
  if (mask.values.rows() != noisy.values.rows() ||
      mask.values.cols() != noisy.values.cols()) {
    throw InputError("apply_mask: mask and spectrogram shapes differ");
  }
  dsp::ComplexSpectrogram out;
  out.config = noisy.config;
  out.values = mask.values.cwiseProduct(noisy.values);
  return out;
}

dsp::ComplexSpectrogram apply_mask(const RealMask& mask,
                                   const dsp::ComplexSpectrogram& noisy) {
  if (mask.values.rows() != noisy.values.rows() ||
      mask.values.cols() != noisy.values.cols()) {
    throw InputError("apply_mask: mask and spectrogram shapes differ");
  }
  dsp::ComplexSpectrogram out;
  out.config = noisy.config;
  out.values = mask.values.cast<std::complex<double>>().cwiseProduct(noisy.values);
  return out;
}

RealMask ibm(const dsp::ComplexSpectrogram& clean,
             const dsp::ComplexSpectrogram& noise) {
  require_same_shape(clean, noise, "ibm");
  RealMask mask;
  mask.values = (clean.values.cwiseAbs2().array() > noise.values.cwiseAbs2().array())
                    .cast<double>();
  return mask;
}

RealMask irm(const dsp::ComplexSpectrogram& clean,
             const dsp::ComplexSpectrogram& noise) {
  require_same_shape(clean, noise, "irm");
  RealMask mask;
  mask.values.resize(clean.values.rows(), clean.values.cols());
  for (Eigen::Index n = 0; n < clean.values.rows(); ++n) {
    for (Eigen::Index k = 0; k < clean.values.cols(); ++k) {
      const double s2 = std::norm(clean.values(n, k));
      const double v2 = std::norm(noise.values(n, k));
      mask.values(n, k) = (s2 + v2) > 0.0 ? std::sqrt(s2 / (s2 + v2)) : 0.0;
    }
  }
  return mask;
}

RealMask smm(const dsp::ComplexSpectrogram& clean,
             const dsp::ComplexSpectrogram& noisy, double floor) {
  require_same_shape(clean, noisy, "smm");
  require_positive_floor(floor, "smm");
  RealMask mask;
  mask.values = clean.values.cwiseAbs().cwiseQuotient(
      noisy.values.cwiseAbs().cwiseMax(floor));
  return mask;
}

}  // namespace crmse::mask
