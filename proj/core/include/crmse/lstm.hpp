// crmse/lstm.hpp

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

#ifndef CRMSE_LSTM_HPP
#define CRMSE_LSTM_HPP

#include <utility>
#include <vector>

#include <Eigen/Core>

namespace crmse::nn {

/// Parameters of one real LSTM cell. Gate blocks are stacked row-wise in
/// the order [input; forget; cell-candidate; output], Q rows each.
struct LstmCellParams {
  Eigen::MatrixXd w_in;   // 4Q x P
  Eigen::MatrixXd w_rec;  // 4Q x Q
  Eigen::VectorXd bias;   // 4Q

  int input_dim() const { return static_cast<int>(w_in.cols()); }
  int hidden_dim() const { return static_cast<int>(w_rec.cols()); }

  /// Throws ConfigError if the three arrays disagree on dimensions.
  void validate() const;

  static LstmCellParams zeros(int input_dim, int hidden_dim);
};

/// One step of the standard gate equations
///   i = sigmoid, f = sigmoid, g = tanh, o = sigmoid,
///   c = f.*c_prev + i.*g,   h = o.*tanh(c).
/// Returns (h, c).
std::pair<Eigen::VectorXd, Eigen::VectorXd> lstm_cell_step(
    const LstmCellParams& params, const Eigen::VectorXd& input,
    const Eigen::VectorXd& h_prev, const Eigen::VectorXd& c_prev);

/// Runs the cell over a sequence (rows = time steps) from zero initial
/// state and returns all hidden states, one row per step.
Eigen::MatrixXd lstm_run(const LstmCellParams& params,
                         const Eigen::MatrixXd& sequence);

/// Forward activations cached over a batched run, needed for reverse mode.
/// Batch elements are matrix columns throughout.
struct LstmTrace {
  std::vector<Eigen::MatrixXd> gates;   // T entries, 4Q x B post-activation
  std::vector<Eigen::MatrixXd> h;       // T entries, Q x B
  std::vector<Eigen::MatrixXd> c;       // T entries, Q x B
  std::vector<Eigen::MatrixXd> tanh_c;  // T entries, Q x B
};

/// Batched sequence run from zero state. inputs[t] is P x B. Fills *trace
/// when non-null; the final hidden states land in trace->h.
void lstm_run_batch(const LstmCellParams& params,
                    const std::vector<Eigen::MatrixXd>& inputs,
                    LstmTrace* trace);

/// Exact reverse mode through the unrolled run. d_hidden[t] is the
/// gradient flowing into h[t] from downstream (Q x B; an empty matrix means
/// zero). Parameter gradients are accumulated into *grads. When
/// want_input_grads is true the returned vector holds dJ/d inputs[t].
std::vector<Eigen::MatrixXd> lstm_backward(
    const LstmCellParams& params, const std::vector<Eigen::MatrixXd>& inputs,
    const LstmTrace& trace, const std::vector<Eigen::MatrixXd>& d_hidden,
    LstmCellParams* grads, bool want_input_grads = true);

}  // namespace crmse::nn

#endif  // CRMSE_LSTM_HPP
