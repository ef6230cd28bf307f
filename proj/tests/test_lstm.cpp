// tests/test_lstm.cpp

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

#include <cmath>

#include "doctest.h"

#include "crmse/errors.hpp"
#include "crmse/lstm.hpp"

using namespace crmse;

namespace {

double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// Scalar cell with hand-set parameters; the reference trace below evaluates
// the gate equations one number at a time, independent of the library path.
nn::LstmCellParams scalar_cell() {
  nn::LstmCellParams p = nn::LstmCellParams::zeros(1, 1);
  p.w_in << 0.5, -0.3, 0.8, 0.2;   // i, f, g, o rows
  p.w_rec << 0.1, 0.4, -0.2, 0.3;
  p.bias << 0.05, 1.0, -0.1, 0.0;
  return p;
}

struct ScalarState {
  double h = 0.0;
  double c = 0.0;
};

ScalarState scalar_reference_step(const nn::LstmCellParams& p, double x,
                                  ScalarState prev) {
  const double i = sigmoid(p.w_in(0, 0) * x + p.w_rec(0, 0) * prev.h + p.bias(0));
  const double f = sigmoid(p.w_in(1, 0) * x + p.w_rec(1, 0) * prev.h + p.bias(1));
  const double g = std::tanh(p.w_in(2, 0) * x + p.w_rec(2, 0) * prev.h + p.bias(2));
  const double o = sigmoid(p.w_in(3, 0) * x + p.w_rec(3, 0) * prev.h + p.bias(3));
  ScalarState next;
  next.c = f * prev.c + i * g;
  next.h = o * std::tanh(next.c);
  return next;
}

}  // namespace

TEST_SUITE_BEGIN("lstm");

TEST_CASE("all-zero parameters keep the state at zero") {
  const auto p = nn::LstmCellParams::zeros(3, 2);
  const auto [h, c] = nn::lstm_cell_step(p, Eigen::VectorXd::Random(3),
                                         Eigen::VectorXd::Zero(2),
                                         Eigen::VectorXd::Zero(2));
  CHECK(h.cwiseAbs().maxCoeff() == 0.0);
  CHECK(c.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("a large forget bias carries the previous cell state through") {
  auto p = nn::LstmCellParams::zeros(1, 1);
  p.bias(1) = 10.0;  // forget gate
  Eigen::VectorXd x(1), h0(1), c0(1);
  x << 0.0;
  h0 << 0.0;
  c0 << 1.0;
  const auto [h, c] = nn::lstm_cell_step(p, x, h0, c0);
  const double sigma10 = 1.0 / (1.0 + std::exp(-10.0));
  CHECK(c(0) == doctest::Approx(sigma10).epsilon(1e-12));
  CHECK(c(0) == doctest::Approx(0.99995).epsilon(1e-4));
  CHECK(h(0) == doctest::Approx(0.5 * std::tanh(sigma10)).epsilon(1e-12));
}

TEST_CASE("single step matches a scalar hand trace") {
  const auto p = scalar_cell();
  Eigen::VectorXd x(1), h0(1), c0(1);
  x << 0.7;
  h0 << -0.2;
  c0 << 0.3;

  const auto expected = scalar_reference_step(p, 0.7, {-0.2, 0.3});
  const auto [h, c] = nn::lstm_cell_step(p, x, h0, c0);
  CHECK(h(0) == doctest::Approx(expected.h).epsilon(1e-14));
  CHECK(c(0) == doctest::Approx(expected.c).epsilon(1e-14));
}

TEST_CASE("cell step rejects mismatched dimensions") {
  const auto p = nn::LstmCellParams::zeros(3, 2);
  CHECK_THROWS_AS(nn::lstm_cell_step(p, Eigen::VectorXd::Zero(4),
                                     Eigen::VectorXd::Zero(2),
                                     Eigen::VectorXd::Zero(2)),
                  ConfigError);
}

TEST_CASE("run over a sequence with zero parameters is zero") {
  const auto p = nn::LstmCellParams::zeros(3, 2);
  const auto out = nn::lstm_run(p, Eigen::MatrixXd::Random(5, 3));
  CHECK(out.rows() == 5);
  CHECK(out.cols() == 2);
  CHECK(out.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("run of length one equals a single step from zero state") {
  const auto p = scalar_cell();
  Eigen::MatrixXd seq(1, 1);
  seq << 0.4;
  const auto out = nn::lstm_run(p, seq);

  Eigen::VectorXd x(1);
  x << 0.4;
  const auto [h, c] = nn::lstm_cell_step(p, x, Eigen::VectorXd::Zero(1),
                                         Eigen::VectorXd::Zero(1));
  CHECK(out(0, 0) == doctest::Approx(h(0)).epsilon(1e-15));
}

TEST_CASE("three-step scalar run matches the hand trace") {
  const auto p = scalar_cell();
  Eigen::MatrixXd seq(3, 1);
  seq << 0.7, -0.5, 1.2;

  ScalarState state;
  Eigen::VectorXd expected(3);
  for (int t = 0; t < 3; ++t) {
    state = scalar_reference_step(p, seq(t, 0), state);
    expected(t) = state.h;
  }

  const auto out = nn::lstm_run(p, seq);
  for (int t = 0; t < 3; ++t) {
    CHECK(out(t, 0) == doctest::Approx(expected(t)).epsilon(1e-14));
  }
}

TEST_CASE("empty sequences are rejected") {
  const auto p = nn::LstmCellParams::zeros(3, 2);
  CHECK_THROWS_AS(nn::lstm_run(p, Eigen::MatrixXd::Zero(0, 3)), InputError);
}

TEST_SUITE_END();
