// crmse/adam.hpp

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

#ifndef CRMSE_ADAM_HPP
#define CRMSE_ADAM_HPP

#include <cstdint>

#include "crmse/network.hpp"

namespace crmse::nn {

struct AdamConfig {
  double alpha = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// First/second moment accumulators shaped like the parameters they track.
struct AdamState {
  std::int64_t step = 0;
  RclstmNetworkParams m;
  RclstmNetworkParams v;
  AdamConfig config;
};

AdamState make_adam_state(const RclstmNetworkParams& params,
                          const AdamConfig& config = {});

/// One bias-corrected Adam update:
///   m <- b1*m + (1-b1)*g,  v <- b2*v + (1-b2)*g^2,
///   theta <- theta - alpha * m_hat / (sqrt(v_hat) + eps).
/// Throws NumericalError on non-finite gradients.
void adam_step(AdamState& state, RclstmNetworkParams& params,
               const RclstmNetworkParams& grads);

/// Euclidean norm over every gradient entry.
double global_grad_norm(const RclstmNetworkParams& grads);

/// Scales the gradients in place so their global norm is at most max_norm.
/// No-op when max_norm <= 0 or the norm is already within bounds.
void clip_grad_norm(RclstmNetworkParams& grads, double max_norm);

}  // namespace crmse::nn

#endif  // CRMSE_ADAM_HPP
