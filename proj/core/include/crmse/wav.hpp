// crmse/wav.hpp

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

#ifndef CRMSE_WAV_HPP
#define CRMSE_WAV_HPP

#include <filesystem>

#include "crmse/dsp.hpp"

namespace crmse::data {

/// Reads a 16-bit mono PCM RIFF/WAVE file. Samples are decoded to
/// [-1, 1) by division by 32768; unknown chunks are skipped. Stereo,
/// non-PCM or non-16-bit files are rejected with an IoError naming the file.
dsp::Waveform read_wav(const std::filesystem::path& path);

/// Writes a canonical 44-byte-header 16-bit mono PCM file. Samples are
/// clamped to [-1, 1 - 1/32768], scaled by 32768 and rounded half away
/// from zero.
void write_wav(const dsp::Waveform& wave, const std::filesystem::path& path);

/// The exact value a sample takes after a write/read round trip.
double quantize_sample(double sample);

}  // namespace crmse::data

#endif  // CRMSE_WAV_HPP
