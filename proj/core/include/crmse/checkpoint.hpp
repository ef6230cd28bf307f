// crmse/checkpoint.hpp

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

#ifndef CRMSE_CHECKPOINT_HPP
#define CRMSE_CHECKPOINT_HPP

#include <filesystem>

#include "crmse/dsp.hpp"
#include "crmse/network.hpp"

namespace crmse::nn {

/// A trained network plus the framing it was trained for.
///
/// File format ("RCLSTM1"):
///   line 1            "RCLSTM1"
///   key/value lines   frame_size, hop_size, num_bins, context_radius,
///                     layer1_units, layer2_units (one per line)
///   "end_header"
///   raw data          every parameter array as little-endian 64-bit
///                     floats, in the parameter_views() order; matrices
///                     are stored column-major.
struct Checkpoint {
  dsp::StftConfig stft;
  int context_radius = 10;
  RclstmNetworkParams net;
};

void save_checkpoint(const Checkpoint& checkpoint,
                     const std::filesystem::path& path);

/// Loads and validates a checkpoint: the magic line, header completeness,
/// dimension consistency and the exact payload size are all checked.
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace crmse::nn

#endif  // CRMSE_CHECKPOINT_HPP
