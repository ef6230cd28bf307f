// core/src/train.cpp

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

#include "crmse/train.hpp"

#include <numeric>
#include <string>

#include "crmse/errors.hpp"
#include "crmse/rng.hpp"

namespace crmse::nn {

std::vector<double> train(RclstmNetworkParams& net,
                          std::span<const data::TrainingExample> examples,
                          const TrainConfig& config) {
  if (examples.empty()) {
    throw InputError("train: empty dataset");
  }
  if (config.batch_size < 1 || config.epochs < 0) {
    throw ConfigError("train: batch_size must be >= 1 and epochs >= 0");
  }

  AdamConfig adam_config;
  adam_config.alpha = config.learning_rate;
  adam_config.beta1 = config.beta1;
  adam_config.beta2 = config.beta2;
  adam_config.epsilon = config.epsilon;
  AdamState optimizer = make_adam_state(net, adam_config);

  rng::Engine engine(config.seed);
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  const std::size_t bins = static_cast<std::size_t>(net.num_bins());
  std::vector<double> history;
  history.reserve(static_cast<std::size_t>(config.epochs));

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng::shuffle(order, engine);
    double loss_sum = 0.0;
    std::size_t batch_index = 0;

    for (std::size_t start = 0; start < order.size();
         start += static_cast<std::size_t>(config.batch_size), ++batch_index) {
      const std::size_t stop =
          std::min(order.size(), start + static_cast<std::size_t>(config.batch_size));
      const std::size_t batch = stop - start;

      std::vector<const Eigen::MatrixXcd*> contexts(batch);
      Eigen::MatrixXcd targets(static_cast<Eigen::Index>(batch),
                               static_cast<Eigen::Index>(bins));
      for (std::size_t b = 0; b < batch; ++b) {
        const data::TrainingExample& ex = examples[order[start + b]];
        contexts[b] = &ex.context;
        targets.row(static_cast<Eigen::Index>(b)) = ex.target.transpose();
      }

      try {
        RclstmNetworkParams grads = zeros_like(net);
        const double batch_loss = network_backward(net, contexts, targets, &grads);
        loss_sum += batch_loss * static_cast<double>(batch);
        clip_grad_norm(grads, config.clip_norm);
        adam_step(optimizer, net, grads);
      } catch (const NumericalError& e) {
        throw NumericalError("train: epoch " + std::to_string(epoch) + ", batch " +
                             std::to_string(batch_index) + ": " + e.what());
      }
    }
    history.push_back(loss_sum / static_cast<double>(examples.size()));
  }
  return history;
}

}  // namespace crmse::nn
