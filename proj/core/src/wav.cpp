// core/src/wav.cpp

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

#include "crmse/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "crmse/errors.hpp"

namespace crmse::data {

namespace {

constexpr double kScale = 32768.0;
constexpr double kMaxSample = 32767.0 / 32768.0;

std::uint32_t read_u32(const unsigned char* p) {
  return static_cast<std::uint32_t>(p[0]) | (static_cast<std::uint32_t>(p[1]) << 8) |
         (static_cast<std::uint32_t>(p[2]) << 16) |
         (static_cast<std::uint32_t>(p[3]) << 24);
}

std::uint16_t read_u16(const unsigned char* p) {
  return static_cast<std::uint16_t>(p[0] | (p[1] << 8));
}

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 16) & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 24) & 0xff));
}

void put_u16(std::vector<unsigned char>& out, std::uint16_t v) {
  out.push_back(static_cast<unsigned char>(v & 0xff));
  out.push_back(static_cast<unsigned char>((v >> 8) & 0xff));
}

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& why) {
  throw IoError("wav: " + why + " (" + path.string() + ")");
}

std::int16_t encode_sample(double s) {
  const double clamped = std::clamp(s, -1.0, kMaxSample);
  return static_cast<std::int16_t>(std::lround(clamped * kScale));
}

}  // namespace

double quantize_sample(double sample) {
  return static_cast<double>(encode_sample(sample)) / kScale;
}

dsp::Waveform read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open file");

  std::vector<unsigned char> bytes{std::istreambuf_iterator<char>(in),
                                   std::istreambuf_iterator<char>()};
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0) {
    fail(path, "not a RIFF/WAVE file");
  }

  bool have_fmt = false;
  std::uint16_t channels = 0, bits = 0, format = 0;
  std::uint32_t sample_rate = 0;
  const unsigned char* data = nullptr;
  std::uint32_t data_size = 0;

  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const unsigned char* chunk = bytes.data() + pos;
    const std::uint32_t size = read_u32(chunk + 4);
    const unsigned char* body = chunk + 8;
    if (pos + 8 + size > bytes.size()) fail(path, "truncated chunk");

    if (std::memcmp(chunk, "fmt ", 4) == 0) {
      if (size < 16) fail(path, "fmt chunk too small");
      format = read_u16(body);
      channels = read_u16(body + 2);
      sample_rate = read_u32(body + 4);
      bits = read_u16(body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = body;
      data_size = size;
    }
    pos += 8 + size + (size % 2);  // chunks are word-aligned
  }

  if (!have_fmt) fail(path, "missing fmt chunk");
  if (format != 1) fail(path, "unsupported encoding (only PCM)");
  if (channels != 1) fail(path, "only mono input is supported");
  if (bits != 16) fail(path, "only 16-bit PCM is supported");
  if (sample_rate == 0) fail(path, "invalid sample rate");
  if (data == nullptr) fail(path, "missing data chunk");
  if (data_size < 2) fail(path, "empty waveform");

  dsp::Waveform wave;
  wave.sample_rate = static_cast<int>(sample_rate);
  const std::size_t count = data_size / 2;
  wave.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::int16_t v =
        static_cast<std::int16_t>(read_u16(data + 2 * i));
    wave.samples[i] = static_cast<double>(v) / kScale;
  }
  return wave;
}

void write_wav(const dsp::Waveform& wave, const std::filesystem::path& path) {
  for (double s : wave.samples) {
    if (!std::isfinite(s)) {
      throw InputError("write_wav: non-finite sample for " + path.string());
    }
  }

  const std::uint32_t data_size =
      static_cast<std::uint32_t>(wave.samples.size() * 2);
  std::vector<unsigned char> out;
  out.reserve(44 + data_size);

  out.insert(out.end(), {'R', 'I', 'F', 'F'});
  put_u32(out, 36 + data_size);
  out.insert(out.end(), {'W', 'A', 'V', 'E'});
  out.insert(out.end(), {'f', 'm', 't', ' '});
  put_u32(out, 16);
  put_u16(out, 1);  // PCM
  put_u16(out, 1);  // mono
  put_u32(out, static_cast<std::uint32_t>(wave.sample_rate));
  put_u32(out, static_cast<std::uint32_t>(wave.sample_rate) * 2);  // byte rate
  put_u16(out, 2);   // block align
  put_u16(out, 16);  // bits per sample
  out.insert(out.end(), {'d', 'a', 't', 'a'});
  put_u32(out, data_size);

  for (double s : wave.samples) {
    put_u16(out, static_cast<std::uint16_t>(encode_sample(s)));
  }

  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw IoError("wav: cannot open for writing (" + path.string() + ")");
  }
  file.write(reinterpret_cast<const char*>(out.data()),
             static_cast<std::streamsize>(out.size()));
  if (!file) {
    throw IoError("wav: write failed (" + path.string() + ")");
  }
}

}  // namespace crmse::data
