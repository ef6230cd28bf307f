// core/src/adam.cpp

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

#include "crmse/adam.hpp"

#include <cmath>
#include <string>

#include "crmse/errors.hpp"

namespace crmse::nn {

AdamState make_adam_state(const RclstmNetworkParams& params,
                          const AdamConfig& config) {
  AdamState state;
  state.step = 0;
  state.m = zeros_like(params);
  state.v = zeros_like(params);
  state.config = config;
  return state;
}

void adam_step(AdamState& state, RclstmNetworkParams& params,
               const RclstmNetworkParams& grads) {
  const auto p_views = parameter_views(params);
  const auto g_views = parameter_views(grads);
  const auto m_views = parameter_views(state.m);
  const auto v_views = parameter_views(state.v);

  for (std::size_t a = 0; a < g_views.size(); ++a) {
    if (g_views[a].size != p_views[a].size) {
      throw ConfigError("adam_step: gradient shapes do not match parameters");
    }
    for (std::ptrdiff_t i = 0; i < g_views[a].size; ++i) {
      if (!std::isfinite(g_views[a].data[i])) {
        throw NumericalError("adam_step: non-finite gradient in array " +
                             std::to_string(a) + " at index " + std::to_string(i));
      }
    }
  }

  state.step += 1;
  const AdamConfig& c = state.config;
  const double m_corr = 1.0 - std::pow(c.beta1, static_cast<double>(state.step));
  const double v_corr = 1.0 - std::pow(c.beta2, static_cast<double>(state.step));

  for (std::size_t a = 0; a < g_views.size(); ++a) {
    double* theta = p_views[a].data;
    const double* g = g_views[a].data;
    double* m = m_views[a].data;
    double* v = v_views[a].data;
    for (std::ptrdiff_t i = 0; i < g_views[a].size; ++i) {
      m[i] = c.beta1 * m[i] + (1.0 - c.beta1) * g[i];
      v[i] = c.beta2 * v[i] + (1.0 - c.beta2) * g[i] * g[i];
      const double m_hat = m[i] / m_corr;
      const double v_hat = v[i] / v_corr;
      theta[i] -= c.alpha * m_hat / (std::sqrt(v_hat) + c.epsilon);
    }
  }
}

double global_grad_norm(const RclstmNetworkParams& grads) {
  double sum_sq = 0.0;
  for (auto view : parameter_views(grads)) {
    for (std::ptrdiff_t i = 0; i < view.size; ++i) {
      sum_sq += view.data[i] * view.data[i];
    }
  }
  return std::sqrt(sum_sq);
}

void clip_grad_norm(RclstmNetworkParams& grads, double max_norm) {
  if (max_norm <= 0.0) return;
  const double norm = global_grad_norm(grads);
  if (norm <= max_norm || norm == 0.0) return;
  const double scale = max_norm / norm;
  for (auto view : parameter_views(grads)) {
    for (std::ptrdiff_t i = 0; i < view.size; ++i) {
      view.data[i] *= scale;
    }
  }
}

}  // namespace crmse::nn
