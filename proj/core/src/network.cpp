// core/src/network.cpp

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

#include "crmse/network.hpp"

#include <cmath>
#include <string>

#include "crmse/errors.hpp"
#include "crmse/rng.hpp"

namespace crmse::nn {

namespace {

// Four real LSTM trajectories make up one complex layer: f1 and f2 each run
// over both the real and the imaginary input stream.
struct LayerTrace {
  LstmTrace f1_re, f2_im, f2_re, f1_im;
  std::vector<Eigen::MatrixXd> h_re, h_im;  // combined outputs per step
};

void layer_forward_batch(const RclstmLayerParams& layer,
                         const std::vector<Eigen::MatrixXd>& in_re,
                         const std::vector<Eigen::MatrixXd>& in_im,
                         LayerTrace* trace) {
  lstm_run_batch(layer.f1, in_re, &trace->f1_re);
  lstm_run_batch(layer.f2, in_im, &trace->f2_im);
  lstm_run_batch(layer.f2, in_re, &trace->f2_re);
  lstm_run_batch(layer.f1, in_im, &trace->f1_im);

  const std::size_t t_steps = in_re.size();
  trace->h_re.resize(t_steps);
  trace->h_im.resize(t_steps);
  for (std::size_t t = 0; t < t_steps; ++t) {
    trace->h_re[t] = trace->f1_re.h[t] - trace->f2_im.h[t];
    trace->h_im[t] = trace->f2_re.h[t] + trace->f1_im.h[t];
  }
}

// d_h_re/d_h_im: per-step downstream gradients (empty = zero). Accumulates
// into *f1_grads / *f2_grads; optionally returns input-stream gradients.
void layer_backward_batch(const RclstmLayerParams& layer,
                          const std::vector<Eigen::MatrixXd>& in_re,
                          const std::vector<Eigen::MatrixXd>& in_im,
                          const LayerTrace& trace,
                          const std::vector<Eigen::MatrixXd>& d_h_re,
                          const std::vector<Eigen::MatrixXd>& d_h_im,
                          LstmCellParams* f1_grads, LstmCellParams* f2_grads,
                          bool want_input_grads,
                          std::vector<Eigen::MatrixXd>* d_in_re,
                          std::vector<Eigen::MatrixXd>* d_in_im) {
  const std::size_t t_steps = in_re.size();
  std::vector<Eigen::MatrixXd> neg_d_h_re(t_steps);
  for (std::size_t t = 0; t < t_steps; ++t) {
    if (d_h_re[t].size() != 0) neg_d_h_re[t] = -d_h_re[t];
  }

  auto d_re_1 = lstm_backward(layer.f1, in_re, trace.f1_re, d_h_re,
                              f1_grads, want_input_grads);
  auto d_im_2 = lstm_backward(layer.f2, in_im, trace.f2_im, neg_d_h_re,
                              f2_grads, want_input_grads);
  auto d_re_3 = lstm_backward(layer.f2, in_re, trace.f2_re, d_h_im,
                              f2_grads, want_input_grads);
  auto d_im_4 = lstm_backward(layer.f1, in_im, trace.f1_im, d_h_im,
                              f1_grads, want_input_grads);

  if (want_input_grads) {
    d_in_re->resize(t_steps);
    d_in_im->resize(t_steps);
    for (std::size_t t = 0; t < t_steps; ++t) {
      (*d_in_re)[t] = d_re_1[t] + d_re_3[t];
      (*d_in_im)[t] = d_im_2[t] + d_im_4[t];
    }
  }
}

struct NetworkTrace {
  std::vector<Eigen::MatrixXd> in_re, in_im;  // T of K x B
  LayerTrace layer1, layer2;
  Eigen::MatrixXd out_re, out_im;  // K x B, tanh outputs of the dense layer
};

void network_forward_impl(const RclstmNetworkParams& net,
                          std::span<const Eigen::MatrixXcd* const> contexts,
                          NetworkTrace* trace) {
  net.validate();
  if (contexts.empty()) {
    throw InputError("network_forward: empty batch");
  }
  const auto t_steps = contexts.front()->rows();
  const auto bins = contexts.front()->cols();
  if (t_steps < 1 || bins != net.num_bins()) {
    throw ConfigError("network_forward: context is " + std::to_string(t_steps) +
                      "x" + std::to_string(bins) + ", expected T x " +
                      std::to_string(net.num_bins()));
  }
  for (const auto* c : contexts) {
    if (c->rows() != t_steps || c->cols() != bins) {
      throw ConfigError("network_forward: context shapes differ within the batch");
    }
  }

  const auto batch = static_cast<Eigen::Index>(contexts.size());
  trace->in_re.assign(static_cast<std::size_t>(t_steps),
                      Eigen::MatrixXd(bins, batch));
  trace->in_im.assign(static_cast<std::size_t>(t_steps),
                      Eigen::MatrixXd(bins, batch));
  for (Eigen::Index b = 0; b < batch; ++b) {
    const Eigen::MatrixXcd& ctx = *contexts[static_cast<std::size_t>(b)];
    for (Eigen::Index t = 0; t < t_steps; ++t) {
      trace->in_re[static_cast<std::size_t>(t)].col(b) = ctx.row(t).real().transpose();
      trace->in_im[static_cast<std::size_t>(t)].col(b) = ctx.row(t).imag().transpose();
    }
  }

  layer_forward_batch(net.layer1, trace->in_re, trace->in_im, &trace->layer1);
  layer_forward_batch(net.layer2, trace->layer1.h_re, trace->layer1.h_im,
                      &trace->layer2);

  // Dense layer on the second layer's last time step.
  const Eigen::MatrixXd& h_re = trace->layer2.h_re.back();
  const Eigen::MatrixXd& h_im = trace->layer2.h_im.back();
  const Eigen::VectorXd b1 = net.dense.b_re - net.dense.b_im;
  const Eigen::VectorXd b2 = net.dense.b_im + net.dense.b_re;
  Eigen::MatrixXd a1 = net.dense.w_re * h_re - net.dense.w_im * h_im;
  a1.colwise() += b1;
  Eigen::MatrixXd a2 = net.dense.w_im * h_re + net.dense.w_re * h_im;
  a2.colwise() += b2;
  trace->out_re = a1.array().tanh().matrix();
  trace->out_im = a2.array().tanh().matrix();
}

Eigen::MatrixXcd collect_predictions(const NetworkTrace& trace) {
  const auto batch = trace.out_re.cols();
  const auto bins = trace.out_re.rows();
  Eigen::MatrixXcd out(batch, bins);
  out.real() = trace.out_re.transpose();
  out.imag() = trace.out_im.transpose();
  return out;
}

std::vector<const Eigen::MatrixXcd*> to_pointers(
    std::span<const Eigen::MatrixXcd> contexts) {
  std::vector<const Eigen::MatrixXcd*> ptrs;
  ptrs.reserve(contexts.size());
  for (const auto& c : contexts) ptrs.push_back(&c);
  return ptrs;
}

void fill_uniform(Eigen::MatrixXd& m, rng::Engine& engine, double bound) {
  double* p = m.data();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    p[i] = rng::uniform(engine, -bound, bound);
  }
}

void init_cell(LstmCellParams& cell, rng::Engine& engine) {
  const int q = cell.hidden_dim();
  fill_uniform(cell.w_in, engine, 1.0 / std::sqrt(double(cell.input_dim())));
  fill_uniform(cell.w_rec, engine, 1.0 / std::sqrt(double(q)));
  cell.bias.setZero();
  cell.bias.segment(q, q).setOnes();  // forget gate opens at init
}

}  // namespace

void RclstmLayerParams::validate() const {
  f1.validate();
  f2.validate();
  if (f1.input_dim() != f2.input_dim() || f1.hidden_dim() != f2.hidden_dim()) {
    throw ConfigError("RclstmLayerParams: f1 and f2 must share dimensions");
  }
}

void ComplexDenseParams::validate() const {
  if (w_re.rows() == 0 || w_re.cols() == 0 || w_im.rows() != w_re.rows() ||
      w_im.cols() != w_re.cols() || b_re.size() != w_re.rows() ||
      b_im.size() != w_re.rows()) {
    throw ConfigError("ComplexDenseParams: g1 and g2 must share dimensions");
  }
}

void RclstmNetworkParams::validate() const {
  layer1.validate();
  layer2.validate();
  dense.validate();
  if (!layer1.return_full_sequence || layer2.return_full_sequence) {
    throw ConfigError(
        "RclstmNetworkParams: layer1 must return the full sequence and "
        "layer2 only the last step");
  }
  if (layer2.input_dim() != layer1.hidden_dim()) {
    throw ConfigError("RclstmNetworkParams: layer1 output dim " +
                      std::to_string(layer1.hidden_dim()) +
                      " does not feed layer2 input dim " +
                      std::to_string(layer2.input_dim()));
  }
  if (dense.input_dim() != layer2.hidden_dim() ||
      dense.output_dim() != num_bins()) {
    throw ConfigError("RclstmNetworkParams: dense layer must map layer2 units to bins");
  }
}

RclstmNetworkParams make_network(const NetworkDims& dims, std::uint64_t seed) {
  if (dims.num_bins < 1 || dims.layer1_units < 1 || dims.layer2_units < 0) {
    throw ConfigError("make_network: dimensions must be positive");
  }
  const int bins = dims.num_bins;
  const int q1 = dims.layer1_units;
  const int q2 = dims.layer2_units > 0 ? dims.layer2_units : bins;

  RclstmNetworkParams net;
  net.layer1.f1 = LstmCellParams::zeros(bins, q1);
  net.layer1.f2 = LstmCellParams::zeros(bins, q1);
  net.layer1.return_full_sequence = true;
  net.layer2.f1 = LstmCellParams::zeros(q1, q2);
  net.layer2.f2 = LstmCellParams::zeros(q1, q2);
  net.layer2.return_full_sequence = false;
  net.dense.w_re = Eigen::MatrixXd::Zero(bins, q2);
  net.dense.b_re = Eigen::VectorXd::Zero(bins);
  net.dense.w_im = Eigen::MatrixXd::Zero(bins, q2);
  net.dense.b_im = Eigen::VectorXd::Zero(bins);

  rng::Engine engine(seed);
  init_cell(net.layer1.f1, engine);
  init_cell(net.layer1.f2, engine);
  init_cell(net.layer2.f1, engine);
  init_cell(net.layer2.f2, engine);
  const double dense_bound = 1.0 / std::sqrt(double(q2));
  fill_uniform(net.dense.w_re, engine, dense_bound);
  fill_uniform(net.dense.w_im, engine, dense_bound);

  net.validate();
  return net;
}

RclstmNetworkParams zeros_like(const RclstmNetworkParams& like) {
  RclstmNetworkParams z = like;
  for (auto view : parameter_views(z)) {
    std::fill(view.data, view.data + view.size, 0.0);
  }
  return z;
}

std::vector<ParamView> parameter_views(RclstmNetworkParams& params) {
  std::vector<ParamView> views;
  views.reserve(16);
  auto add = [&views](auto& array) {
    views.push_back({array.data(), array.size()});
  };
  auto add_cell = [&](LstmCellParams& cell) {
    add(cell.w_in);
    add(cell.w_rec);
    add(cell.bias);
  };
  add_cell(params.layer1.f1);
  add_cell(params.layer1.f2);
  add_cell(params.layer2.f1);
  add_cell(params.layer2.f2);
  add(params.dense.w_re);
  add(params.dense.b_re);
  add(params.dense.w_im);
  add(params.dense.b_im);
  return views;
}

std::vector<ConstParamView> parameter_views(const RclstmNetworkParams& params) {
  std::vector<ConstParamView> views;
  for (auto view : parameter_views(const_cast<RclstmNetworkParams&>(params))) {
    views.push_back({view.data, view.size});
  }
  return views;
}

std::size_t parameter_count(const RclstmNetworkParams& params) {
  std::size_t count = 0;
  for (auto view : parameter_views(params)) {
    count += static_cast<std::size_t>(view.size);
  }
  return count;
}

Eigen::MatrixXcd rclstm_forward(const RclstmLayerParams& layer,
                                const Eigen::MatrixXcd& z) {
  layer.validate();
  if (z.rows() == 0) {
    throw InputError("rclstm_forward: empty sequence");
  }
  if (z.cols() != layer.input_dim()) {
    throw ConfigError("rclstm_forward: sequence dim " + std::to_string(z.cols()) +
                      " does not match layer input dim " +
                      std::to_string(layer.input_dim()));
  }

  const auto t_steps = z.rows();
  std::vector<Eigen::MatrixXd> in_re(static_cast<std::size_t>(t_steps));
  std::vector<Eigen::MatrixXd> in_im(static_cast<std::size_t>(t_steps));
  for (Eigen::Index t = 0; t < t_steps; ++t) {
    in_re[static_cast<std::size_t>(t)] = z.row(t).real().transpose();
    in_im[static_cast<std::size_t>(t)] = z.row(t).imag().transpose();
  }

  LayerTrace trace;
  layer_forward_batch(layer, in_re, in_im, &trace);

  const Eigen::Index out_steps = layer.return_full_sequence ? t_steps : 1;
  Eigen::MatrixXcd out(out_steps, layer.hidden_dim());
  for (Eigen::Index t = 0; t < out_steps; ++t) {
    const std::size_t src =
        layer.return_full_sequence ? static_cast<std::size_t>(t)
                                   : static_cast<std::size_t>(t_steps - 1);
    out.row(t).real() = trace.h_re[src].col(0).transpose();
    out.row(t).imag() = trace.h_im[src].col(0).transpose();
  }
  return out;
}

Eigen::VectorXcd complex_dense_forward(const ComplexDenseParams& params,
                                       const Eigen::VectorXcd& h) {
  params.validate();
  if (h.size() != params.input_dim()) {
    throw ConfigError("complex_dense_forward: input dim " + std::to_string(h.size()) +
                      " does not match layer input dim " +
                      std::to_string(params.input_dim()));
  }
  const Eigen::VectorXd h_re = h.real();
  const Eigen::VectorXd h_im = h.imag();
  const Eigen::VectorXd a1 =
      (params.w_re * h_re + params.b_re) - (params.w_im * h_im + params.b_im);
  const Eigen::VectorXd a2 =
      (params.w_im * h_re + params.b_im) + (params.w_re * h_im + params.b_re);
  Eigen::VectorXcd out(params.output_dim());
  out.real() = a1.array().tanh().matrix();
  out.imag() = a2.array().tanh().matrix();
  return out;
}

Eigen::VectorXcd network_forward(const RclstmNetworkParams& net,
                                 const Eigen::MatrixXcd& context) {
  const Eigen::MatrixXcd* ptr = &context;
  NetworkTrace trace;
  network_forward_impl(net, std::span<const Eigen::MatrixXcd* const>(&ptr, 1),
                       &trace);
  Eigen::VectorXcd out(trace.out_re.rows());
  out.real() = trace.out_re.col(0);
  out.imag() = trace.out_im.col(0);
  return out;
}

Eigen::MatrixXcd network_forward_batch(
    const RclstmNetworkParams& net,
    std::span<const Eigen::MatrixXcd* const> contexts) {
  NetworkTrace trace;
  network_forward_impl(net, contexts, &trace);
  return collect_predictions(trace);
}

Eigen::MatrixXcd network_forward_batch(const RclstmNetworkParams& net,
                                       std::span<const Eigen::MatrixXcd> contexts) {
  const auto ptrs = to_pointers(contexts);
  return network_forward_batch(net, ptrs);
}

double loss(const Eigen::MatrixXcd& predicted, const Eigen::MatrixXcd& target) {
  if (predicted.rows() == 0) {
    throw InputError("loss: empty batch");
  }
  if (predicted.rows() != target.rows() || predicted.cols() != target.cols()) {
    throw InputError("loss: predicted and target shapes differ");
  }
  return (predicted - target).squaredNorm() / static_cast<double>(predicted.rows());
}

double network_backward(const RclstmNetworkParams& net,
                        std::span<const Eigen::MatrixXcd* const> contexts,
                        const Eigen::MatrixXcd& targets,
                        RclstmNetworkParams* grads) {
  NetworkTrace trace;
  network_forward_impl(net, contexts, &trace);

  const auto batch = static_cast<Eigen::Index>(contexts.size());
  const auto bins = trace.out_re.rows();
  if (targets.rows() != batch || targets.cols() != bins) {
    throw InputError("network_backward: targets must be batch x bins");
  }

  const Eigen::MatrixXcd predicted = collect_predictions(trace);
  const double loss_value = loss(predicted, targets);
  if (!std::isfinite(loss_value)) {
    throw NumericalError(
        "network_backward: non-finite forward values (batch of " +
        std::to_string(batch) + ", loss = " + std::to_string(loss_value) + ")");
  }

  // dJ/d(out) for the batch-mean squared residual.
  const double scale = 2.0 / static_cast<double>(batch);
  const Eigen::MatrixXd d_out_re =
      scale * (trace.out_re - targets.real().transpose());
  const Eigen::MatrixXd d_out_im =
      scale * (trace.out_im - targets.imag().transpose());

  // Dense layer backward (tanh derivative in terms of its output).
  const Eigen::MatrixXd da1 =
      (d_out_re.array() * (1.0 - trace.out_re.array().square())).matrix();
  const Eigen::MatrixXd da2 =
      (d_out_im.array() * (1.0 - trace.out_im.array().square())).matrix();

  const Eigen::MatrixXd& h2_re = trace.layer2.h_re.back();
  const Eigen::MatrixXd& h2_im = trace.layer2.h_im.back();

  grads->dense.w_re.noalias() += da1 * h2_re.transpose() + da2 * h2_im.transpose();
  grads->dense.b_re += (da1 + da2).rowwise().sum();
  grads->dense.w_im.noalias() += da2 * h2_re.transpose() - da1 * h2_im.transpose();
  grads->dense.b_im += (da2 - da1).rowwise().sum();

  Eigen::MatrixXd dh2_re = net.dense.w_re.transpose() * da1;
  dh2_re.noalias() += net.dense.w_im.transpose() * da2;
  Eigen::MatrixXd dh2_im = net.dense.w_re.transpose() * da2;
  dh2_im.noalias() -= net.dense.w_im.transpose() * da1;

  // Layer 2 receives gradient only at its last time step.
  const std::size_t t_steps = trace.in_re.size();
  std::vector<Eigen::MatrixXd> d_h2_re(t_steps), d_h2_im(t_steps);
  d_h2_re.back() = std::move(dh2_re);
  d_h2_im.back() = std::move(dh2_im);

  std::vector<Eigen::MatrixXd> d_h1_re, d_h1_im;
  layer_backward_batch(net.layer2, trace.layer1.h_re, trace.layer1.h_im,
                       trace.layer2, d_h2_re, d_h2_im, &grads->layer2.f1,
                       &grads->layer2.f2, /*want_input_grads=*/true, &d_h1_re,
                       &d_h1_im);

  layer_backward_batch(net.layer1, trace.in_re, trace.in_im, trace.layer1,
                       d_h1_re, d_h1_im, &grads->layer1.f1, &grads->layer1.f2,
                       /*want_input_grads=*/false, nullptr, nullptr);

  // The 1/batch factor of the mean loss is already inside d_out, so the
  // accumulated gradients equal the mean of per-example gradients.
  return loss_value;
}

double network_backward(const RclstmNetworkParams& net,
                        std::span<const Eigen::MatrixXcd> contexts,
                        const Eigen::MatrixXcd& targets,
                        RclstmNetworkParams* grads) {
  const auto ptrs = to_pointers(contexts);
  return network_backward(net, ptrs, targets, grads);
}

}  // namespace crmse::nn
