// crmse/train.hpp

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

#ifndef CRMSE_TRAIN_HPP
#define CRMSE_TRAIN_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "crmse/adam.hpp"
#include "crmse/dataset.hpp"
#include "crmse/network.hpp"

namespace crmse::nn {

struct TrainConfig {
  int epochs = 30;
  int batch_size = 32;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
  double clip_norm = 5.0;  // global-norm gradient clip; <= 0 disables
  int context_radius = 10;
  std::uint64_t seed = 0;
};

/// Minibatch training: frame-level examples are reshuffled every epoch with
/// the seeded generator, each batch goes through network_backward, the
/// gradients are norm-clipped and applied with Adam. Returns the mean
/// per-example loss of every epoch. Numerical failures carry epoch/batch
/// context.
std::vector<double> train(RclstmNetworkParams& net,
                          std::span<const data::TrainingExample> examples,
                          const TrainConfig& config);

}  // namespace crmse::nn

#endif  // CRMSE_TRAIN_HPP
