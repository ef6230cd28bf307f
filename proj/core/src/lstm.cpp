// core/src/lstm.cpp

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

#include "crmse/lstm.hpp"

#include <string>

#include "crmse/errors.hpp"

namespace crmse::nn {

namespace {

Eigen::ArrayXXd sigmoid(const Eigen::ArrayXXd& x) {
  return 1.0 / (1.0 + (-x).exp());
}

// gates: 4Q x B pre-activations in place -> post-activations.
void activate_gates(Eigen::MatrixXd& z, int q) {
  z.topRows(2 * q) = sigmoid(z.topRows(2 * q).array());        // i, f
  z.middleRows(2 * q, q) = z.middleRows(2 * q, q).array().tanh();  // g
  z.bottomRows(q) = sigmoid(z.bottomRows(q).array());          // o
}

}  // namespace

void LstmCellParams::validate() const {
  const auto q4 = w_in.rows();
  if (q4 == 0 || q4 % 4 != 0 || w_rec.rows() != q4 || bias.size() != q4 ||
      w_rec.cols() != q4 / 4 || w_in.cols() == 0) {
    throw ConfigError("LstmCellParams: inconsistent dimensions (w_in " +
                      std::to_string(w_in.rows()) + "x" + std::to_string(w_in.cols()) +
                      ", w_rec " + std::to_string(w_rec.rows()) + "x" +
                      std::to_string(w_rec.cols()) + ", bias " +
                      std::to_string(bias.size()) + ")");
  }
}

LstmCellParams LstmCellParams::zeros(int input_dim, int hidden_dim) {
  LstmCellParams p;
  p.w_in = Eigen::MatrixXd::Zero(4 * hidden_dim, input_dim);
  p.w_rec = Eigen::MatrixXd::Zero(4 * hidden_dim, hidden_dim);
  p.bias = Eigen::VectorXd::Zero(4 * hidden_dim);
  return p;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> lstm_cell_step(
    const LstmCellParams& params, const Eigen::VectorXd& input,
    const Eigen::VectorXd& h_prev, const Eigen::VectorXd& c_prev) {
  params.validate();
  const int q = params.hidden_dim();
  if (input.size() != params.input_dim() || h_prev.size() != q ||
      c_prev.size() != q) {
    throw ConfigError("lstm_cell_step: input/state dimensions do not match the cell");
  }

  Eigen::MatrixXd z = params.w_in * input + params.w_rec * h_prev + params.bias;
  activate_gates(z, q);

  const auto i = z.topRows(q).array();
  const auto f = z.middleRows(q, q).array();
  const auto g = z.middleRows(2 * q, q).array();
  const auto o = z.bottomRows(q).array();

  Eigen::VectorXd c = (f * c_prev.array() + i * g).matrix();
  Eigen::VectorXd h = (o * c.array().tanh()).matrix();
  return {std::move(h), std::move(c)};
}

Eigen::MatrixXd lstm_run(const LstmCellParams& params,
                         const Eigen::MatrixXd& sequence) {
  params.validate();
  if (sequence.rows() == 0) {
    throw InputError("lstm_run: empty sequence");
  }
  if (sequence.cols() != params.input_dim()) {
    throw ConfigError("lstm_run: sequence dim " + std::to_string(sequence.cols()) +
                      " does not match cell input dim " +
                      std::to_string(params.input_dim()));
  }

  const auto t_steps = sequence.rows();
  std::vector<Eigen::MatrixXd> inputs(static_cast<std::size_t>(t_steps));
  for (Eigen::Index t = 0; t < t_steps; ++t) {
    inputs[static_cast<std::size_t>(t)] = sequence.row(t).transpose();
  }

  LstmTrace trace;
  lstm_run_batch(params, inputs, &trace);

  Eigen::MatrixXd out(t_steps, params.hidden_dim());
  for (Eigen::Index t = 0; t < t_steps; ++t) {
    out.row(t) = trace.h[static_cast<std::size_t>(t)].col(0).transpose();
  }
  return out;
}

void lstm_run_batch(const LstmCellParams& params,
                    const std::vector<Eigen::MatrixXd>& inputs,
                    LstmTrace* trace) {
  if (inputs.empty()) {
    throw InputError("lstm_run_batch: empty sequence");
  }
  const int q = params.hidden_dim();
  const auto batch = inputs.front().cols();
  const std::size_t t_steps = inputs.size();

  trace->gates.resize(t_steps);
  trace->h.resize(t_steps);
  trace->c.resize(t_steps);
  trace->tanh_c.resize(t_steps);

  Eigen::MatrixXd h_prev = Eigen::MatrixXd::Zero(q, batch);
  Eigen::MatrixXd c_prev = Eigen::MatrixXd::Zero(q, batch);

  for (std::size_t t = 0; t < t_steps; ++t) {
    Eigen::MatrixXd z = params.w_in * inputs[t];
    z.noalias() += params.w_rec * h_prev;
    z.colwise() += params.bias;
    activate_gates(z, q);

    const auto i = z.topRows(q).array();
    const auto f = z.middleRows(q, q).array();
    const auto g = z.middleRows(2 * q, q).array();
    const auto o = z.bottomRows(q).array();

    trace->c[t] = (f * c_prev.array() + i * g).matrix();
    trace->tanh_c[t] = trace->c[t].array().tanh().matrix();
    trace->h[t] = (o * trace->tanh_c[t].array()).matrix();
    trace->gates[t] = std::move(z);

    h_prev = trace->h[t];
    c_prev = trace->c[t];
  }
}

std::vector<Eigen::MatrixXd> lstm_backward(
    const LstmCellParams& params, const std::vector<Eigen::MatrixXd>& inputs,
    const LstmTrace& trace, const std::vector<Eigen::MatrixXd>& d_hidden,
    LstmCellParams* grads, bool want_input_grads) {
  const int q = params.hidden_dim();
  const std::size_t t_steps = inputs.size();
  const auto batch = inputs.front().cols();

  std::vector<Eigen::MatrixXd> d_inputs;
  if (want_input_grads) d_inputs.resize(t_steps);

  Eigen::MatrixXd dh_next = Eigen::MatrixXd::Zero(q, batch);
  Eigen::MatrixXd dc_next = Eigen::MatrixXd::Zero(q, batch);
  Eigen::MatrixXd dz(4 * q, batch);

  for (std::size_t t = t_steps; t-- > 0;) {
    Eigen::MatrixXd dh = dh_next;
    if (d_hidden[t].size() != 0) dh += d_hidden[t];

    const auto i = trace.gates[t].topRows(q).array();
    const auto f = trace.gates[t].middleRows(q, q).array();
    const auto g = trace.gates[t].middleRows(2 * q, q).array();
    const auto o = trace.gates[t].bottomRows(q).array();
    const auto tanh_c = trace.tanh_c[t].array();

    const Eigen::ArrayXXd dc =
        dh.array() * o * (1.0 - tanh_c.square()) + dc_next.array();

    dz.topRows(q) = (dc * g) * i * (1.0 - i);                   // input gate
    if (t > 0) {
      dz.middleRows(q, q) = (dc * trace.c[t - 1].array()) * f * (1.0 - f);
    } else {
      dz.middleRows(q, q).setZero();  // c_prev = 0 at the first step
    }
    dz.middleRows(2 * q, q) = (dc * i) * (1.0 - g.square());    // candidate
    dz.bottomRows(q) = (dh.array() * tanh_c) * o * (1.0 - o);   // output gate

    grads->w_in.noalias() += dz * inputs[t].transpose();
    if (t > 0) {
      grads->w_rec.noalias() += dz * trace.h[t - 1].transpose();
    }
    grads->bias += dz.rowwise().sum();

    if (want_input_grads) d_inputs[t] = params.w_in.transpose() * dz;
    dh_next.noalias() = params.w_rec.transpose() * dz;
    dc_next = (dc * f).matrix();
  }
  return d_inputs;
}

}  // namespace crmse::nn
