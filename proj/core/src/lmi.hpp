// Copyright 2026 The nipr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Small semidefinite feasibility problems: alternating projections, then a log barrier.
// Not installed.

#pragma once

#include <functional>
#include <vector>

#include "nipr/rational.hpp"

namespace nipr::detail {

// Orthonormal basis of the symmetric n x n matrices (Frobenius inner product).
std::vector<Mat> symmetric_basis(int n);

// Projection of a symmetric matrix onto {Z : Z >= shift * I}.
Mat project_psd(const Mat& z, double shift = 0.0);

// Find x with X(x) >= x_shift I and S(x) >= 0, where
// X(x) = X0 + sum x_k Xk and S(x) = S0 + sum x_k Sk.
struct ConeProblem {
  Mat X0;
  std::vector<Mat> Xk;
  Mat S0;
  std::vector<Mat> Sk;
  double x_shift = 0.0;
};

struct ConeOutcome {
  enum class State { Found, Separated, Stalled } state = State::Stalled;
  Eigen::VectorXd x;
  int iterations = 0;
  double gap = 0.0;  // distance of the last affine iterate to the cones, relative to the problem scale
  // Upper bound on max_x min(lambda_min(X(x)) / sx, lambda_min(S(x)) / ss) from the barrier stage.
  double margin_bound = 0.0;
};

// Dykstra iteration between the affine graph {(X(x), S(x))} and the product
// of cones. `accept` is tried on every affine iterate; the run stops at the
// first accepted point. Never returns Separated.
ConeOutcome dykstra(const ConeProblem& p, int max_iter, const std::function<bool(const Eigen::VectorXd&)>& accept);

// Log-barrier maximization of the smallest scaled eigenvalue over a large
// ball. Separated when the duality bound proves the margin negative.
ConeOutcome barrier(const ConeProblem& p, const std::function<bool(const Eigen::VectorXd&)>& accept);

// Dykstra first, the barrier method when it does not find a point.
ConeOutcome solve_cones(const ConeProblem& p, int max_iter, const std::function<bool(const Eigen::VectorXd&)>& accept);

Mat eval_x(const ConeProblem& p, const Eigen::VectorXd& x);
Mat eval_s(const ConeProblem& p, const Eigen::VectorXd& x);

}  // namespace nipr::detail
