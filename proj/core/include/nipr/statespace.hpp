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

#pragma once

#include <vector>

#include "nipr/rational.hpp"

namespace nipr {

// Rank decisions in the staircase use this fraction of the operand norm.
inline constexpr double kRankTol = 1e-8;

/// (A, B, C, D) with a time-domain tag. n = 0 is a static gain.
struct StateSpace {
  Mat A;
  Mat B;
  Mat C;
  Mat D;
  Domain domain = Domain::CT;

  int n() const { return static_cast<int>(A.rows()); }
  int m() const { return static_cast<int>(D.rows()); }

  static StateSpace static_gain(const Mat& d, Domain domain);
  // Throws DimensionMismatch on inconsistent block sizes.
  void validate() const;
};

// C (pI - A)^-1 B + D; throws PoleProximity when pI - A is singular.
CMat eval(const StateSpace& ss, cplx p);

// Leverrier-Faddeev; entries reduced.
RationalMatrix tf_of(const StateSpace& ss);

// Gilbert for simple poles, column companion form plus staircase otherwise.
StateSpace minimal_realization(const RationalMatrix& r);

// Controllable then observable staircase projection.
StateSpace reduce_to_minimal(const StateSpace& ss);

int controllable_dimension(const Mat& A, const Mat& B, double tol = kRankTol);
int observable_dimension(const Mat& A, const Mat& C, double tol = kRankTol);
bool is_minimal(const StateSpace& ss, double tol = kRankTol);

std::vector<cplx> spectrum(const StateSpace& ss);

// DT -> CT or CT -> DT depending on the input tag; the pair is mutually inverse.
StateSpace cayley_ss(const StateSpace& ss);

// Diagonal similarity that evens out row/column norms of [A B; C 0].
StateSpace balance(const StateSpace& ss);

// Block-diagonal parallel composition of the states, inputs and outputs.
StateSpace append(const StateSpace& a, const StateSpace& b);

}  // namespace nipr
