// crmse/network.hpp

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

#ifndef CRMSE_NETWORK_HPP
#define CRMSE_NETWORK_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "crmse/lstm.hpp"

namespace crmse::nn {

/// A complex-valued LSTM layer realised as two real cells f1 and f2 whose
/// outputs are combined like a complex product:
///   H_r[t] = f1(Z_r)[t] - f2(Z_i)[t]
///   H_i[t] = f2(Z_r)[t] + f1(Z_i)[t]
struct RclstmLayerParams {
  LstmCellParams f1;
  LstmCellParams f2;
  bool return_full_sequence = true;

  int input_dim() const { return f1.input_dim(); }
  int hidden_dim() const { return f1.hidden_dim(); }
  void validate() const;
};

/// Complex dense layer built from two real affine maps g1 (real path) and
/// g2 (imaginary path), coupled by complex arithmetic and bounded by a
/// componentwise tanh:
///   out = tanh(g1(h_r) - g2(h_i)) + j*tanh(g2(h_r) + g1(h_i))
struct ComplexDenseParams {
  Eigen::MatrixXd w_re;  // g1 weights, out x in
  Eigen::VectorXd b_re;  // g1 bias
  Eigen::MatrixXd w_im;  // g2 weights
  Eigen::VectorXd b_im;  // g2 bias

  int input_dim() const { return static_cast<int>(w_re.cols()); }
  int output_dim() const { return static_cast<int>(w_re.rows()); }
  void validate() const;
};

/// The full mask-estimation network: two stacked complex LSTM layers (the
/// first returns the whole sequence, the second only the last step)
/// followed by the complex dense layer.
struct RclstmNetworkParams {
  RclstmLayerParams layer1;
  RclstmLayerParams layer2;
  ComplexDenseParams dense;

  int num_bins() const { return layer1.input_dim(); }
  int layer1_units() const { return layer1.hidden_dim(); }
  int layer2_units() const { return layer2.hidden_dim(); }
  void validate() const;
};

struct NetworkDims {
  int num_bins = 257;
  int layer1_units = 64;
  int layer2_units = 0;  // 0 means num_bins
};

/// Seeded initialization: every weight matrix uniform in
/// [-1/sqrt(fan_in), +1/sqrt(fan_in)], forget-gate biases 1, all other
/// biases 0. Matrices are drawn in checkpoint order.
RclstmNetworkParams make_network(const NetworkDims& dims, std::uint64_t seed);

/// Same shapes as `like`, all values zero. Used for gradients and moments.
RclstmNetworkParams zeros_like(const RclstmNetworkParams& like);

/// Flat views over every parameter array in the fixed serialization order:
/// layer1.f1 (w_in, w_rec, bias), layer1.f2, layer2.f1, layer2.f2,
/// dense g1 (w_re, b_re), dense g2 (w_im, b_im). Matrices are column-major.
struct ParamView {
  double* data;
  std::ptrdiff_t size;
};
struct ConstParamView {
  const double* data;
  std::ptrdiff_t size;
};
std::vector<ParamView> parameter_views(RclstmNetworkParams& params);
std::vector<ConstParamView> parameter_views(const RclstmNetworkParams& params);
std::size_t parameter_count(const RclstmNetworkParams& params);

/// Single complex sequence through one layer. Input rows are time steps.
/// Returns T x Q, or 1 x Q when the layer keeps only the last step.
Eigen::MatrixXcd rclstm_forward(const RclstmLayerParams& layer,
                                const Eigen::MatrixXcd& z);

/// Single vector through the complex dense layer.
Eigen::VectorXcd complex_dense_forward(const ComplexDenseParams& params,
                                       const Eigen::VectorXcd& h);

/// One context window (rows = 2*radius+1 frames, cols = bins) to the
/// predicted bounded mask for the window's center frame. Components lie in
/// (-1, 1) by construction.
Eigen::VectorXcd network_forward(const RclstmNetworkParams& net,
                                 const Eigen::MatrixXcd& context);

/// Batched forward. contexts[b] is T x K; the result is B x K.
Eigen::MatrixXcd network_forward_batch(
    const RclstmNetworkParams& net,
    std::span<const Eigen::MatrixXcd* const> contexts);
Eigen::MatrixXcd network_forward_batch(const RclstmNetworkParams& net,
                                       std::span<const Eigen::MatrixXcd> contexts);

/// Mean over the batch of the squared complex residual norm:
///   J = (1/B) * sum_b sum_k |predicted[b,k] - target[b,k]|^2
/// Rows are batch elements.
double loss(const Eigen::MatrixXcd& predicted, const Eigen::MatrixXcd& target);

/// Forward + exact reverse mode for a batch. Returns the loss value and
/// accumulates dJ/d(params) into *grads (which must be zeros_like(net)).
/// Batch gradients are the mean of per-example gradients.
double network_backward(const RclstmNetworkParams& net,
                        std::span<const Eigen::MatrixXcd* const> contexts,
                        const Eigen::MatrixXcd& targets,
                        RclstmNetworkParams* grads);
double network_backward(const RclstmNetworkParams& net,
                        std::span<const Eigen::MatrixXcd> contexts,
                        const Eigen::MatrixXcd& targets,
                        RclstmNetworkParams* grads);

}  // namespace crmse::nn

#endif  // CRMSE_NETWORK_HPP
