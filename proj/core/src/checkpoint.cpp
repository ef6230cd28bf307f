// core/src/checkpoint.cpp

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

#include "crmse/checkpoint.hpp"

#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "crmse/errors.hpp"

static_assert(std::endian::native == std::endian::little,
              "checkpoint payload is little-endian");

namespace crmse::nn {

namespace {

constexpr const char* kMagic = "RCLSTM1";
constexpr const char* kEndHeader = "end_header";

}  // namespace

void save_checkpoint(const Checkpoint& checkpoint,
                     const std::filesystem::path& path) {
  checkpoint.stft.validate();
  checkpoint.net.validate();
  if (checkpoint.net.num_bins() != checkpoint.stft.num_bins()) {
    throw ConfigError("save_checkpoint: network bins " +
                      std::to_string(checkpoint.net.num_bins()) +
                      " do not match framing bins " +
                      std::to_string(checkpoint.stft.num_bins()));
  }

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("checkpoint: cannot open for writing (" + path.string() + ")");
  }

  out << kMagic << '\n'
      << "frame_size " << checkpoint.stft.frame_size << '\n'
      << "hop_size " << checkpoint.stft.hop_size << '\n'
      << "num_bins " << checkpoint.net.num_bins() << '\n'
      << "context_radius " << checkpoint.context_radius << '\n'
      << "layer1_units " << checkpoint.net.layer1_units() << '\n'
      << "layer2_units " << checkpoint.net.layer2_units() << '\n'
      << kEndHeader << '\n';

  for (auto view : parameter_views(checkpoint.net)) {
    out.write(reinterpret_cast<const char*>(view.data),
              static_cast<std::streamsize>(view.size) *
                  static_cast<std::streamsize>(sizeof(double)));
  }
  if (!out) {
    throw IoError("checkpoint: write failed (" + path.string() + ")");
  }
}

Checkpoint load_checkpoint(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("checkpoint: cannot open (" + path.string() + ")");
  }

  std::string line;
  if (!std::getline(in, line) || line != kMagic) {
    throw IoError("checkpoint: " + path.string() + " is not an " +
                  std::string(kMagic) + " file");
  }

  std::map<std::string, long> header;
  while (std::getline(in, line)) {
    if (line == kEndHeader) break;
    std::istringstream kv(line);
    std::string key;
    long value = 0;
    if (!(kv >> key >> value)) {
      throw IoError("checkpoint: malformed header line '" + line + "' in " +
                    path.string());
    }
    header[key] = value;
  }
  if (line != kEndHeader) {
    throw IoError("checkpoint: missing end_header in " + path.string());
  }

  auto field = [&](const char* key) {
    const auto it = header.find(key);
    if (it == header.end()) {
      throw IoError("checkpoint: header of " + path.string() + " lacks '" +
                    key + "'");
    }
    return it->second;
  };

  Checkpoint checkpoint;
  checkpoint.stft.frame_size = static_cast<int>(field("frame_size"));
  checkpoint.stft.hop_size = static_cast<int>(field("hop_size"));
  checkpoint.context_radius = static_cast<int>(field("context_radius"));
  const int num_bins = static_cast<int>(field("num_bins"));
  const int layer1_units = static_cast<int>(field("layer1_units"));
  const int layer2_units = static_cast<int>(field("layer2_units"));

  checkpoint.stft.validate();
  if (checkpoint.context_radius < 0) {
    throw ConfigError("checkpoint: negative context radius in " + path.string());
  }
  if (num_bins != checkpoint.stft.num_bins()) {
    throw ConfigError("checkpoint: header bins " + std::to_string(num_bins) +
                      " do not match frame_size/2+1 in " + path.string());
  }

  NetworkDims dims;
  dims.num_bins = num_bins;
  dims.layer1_units = layer1_units;
  dims.layer2_units = layer2_units;
  checkpoint.net = make_network(dims, /*seed=*/0);

  for (auto view : parameter_views(checkpoint.net)) {
    in.read(reinterpret_cast<char*>(view.data),
            static_cast<std::streamsize>(view.size) *
                static_cast<std::streamsize>(sizeof(double)));
    if (in.gcount() != static_cast<std::streamsize>(view.size) *
                           static_cast<std::streamsize>(sizeof(double))) {
      throw IoError("checkpoint: payload of " + path.string() +
                    " is shorter than the header dimensions imply");
    }
  }
  char extra;
  if (in.read(&extra, 1) && in.gcount() == 1) {
    throw IoError("checkpoint: payload of " + path.string() +
                  " is longer than the header dimensions imply");
  }

  checkpoint.net.validate();
  return checkpoint;
}

}  // namespace crmse::nn
