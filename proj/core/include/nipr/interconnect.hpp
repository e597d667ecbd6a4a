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

#include <string>
#include <vector>

#include "nipr/config.hpp"
#include "nipr/report.hpp"
#include "nipr/statespace.hpp"

namespace nipr {

// S1 maps [u1; beta] to [y1; alpha], S2 maps [alpha; u2] to [beta; y2],
// with dim(alpha) = a and dim(beta) = b.
struct PartitionedSystem {
  StateSpace sys;
  int a = 0;
  int b = 0;
};

struct InterconnectResult {
  StateSpace system;
  bool well_posed = false;
  std::vector<cplx> closed_loop_spectrum;
  bool internally_stable = false;
};

// Throws IllPosed when I - D1_22 D2_11 is singular and DimensionMismatch on
// incompatible partitions.
InterconnectResult redheffer_star(const StateSpace& s1, const StateSpace& s2, int a, int b);
InterconnectResult redheffer_star(const PartitionedSystem& s1, const StateSpace& s2);

// Wrappers whose star product is F_l, F_u, the sum and the positive feedback loop.
StateSpace sum_wrapper(const StateSpace& p);          // [P I; I 0]
StateSpace feedback_left_wrapper(const StateSpace& p);   // [0 I; I P]
StateSpace feedback_right_wrapper(const StateSpace& q);  // [Q I; I 0]

// Positive feedback loop of P and Q as the star product of
// [0 I; I P] and [Q I; I 0]; the closed-loop map is [-P I; I -Q]^-1.
InterconnectResult internal_stability(const StateSpace& P, const StateSpace& Q);

struct NiStabilityReport {
  Mat P1Q1;
  std::vector<cplx> eigenvalues;
  double lambda_bar = 0.0;
  bool stable_by_lambda = false;  // lambda_bar < 1
  bool stable_by_state_space = false;
  bool agree = false;
  std::vector<cplx> closed_loop_spectrum;
};

// Throws PreconditionViolated naming the failed hypothesis and its witness.
NiStabilityReport ni_stability_test(const RationalMatrix& P, const RationalMatrix& Q, const Config& cfg = {});

struct StarClassReport {
  std::string cls;
  bool s1_in_class = false;
  bool s2_in_class = false;
  bool internally_stable = false;
  RationalMatrix star;
  ClassificationReport star_report;
  // True when both factors are in the class, the loop is stable and the star product is in the class.
  bool preserved = false;
  std::string message;
};

// cls is one of dni, dwsni, dssni, cni, cwsni, cssni.
StarClassReport star_class_preservation(const RationalMatrix& s1, const RationalMatrix& s2, int a, int b,
                                        const std::string& cls, const Config& cfg = {});

std::string to_json(const InterconnectResult& r, int indent = 2);
std::string to_json(const NiStabilityReport& r, int indent = 2);
std::string to_json(const StarClassReport& r, int indent = 2);

}  // namespace nipr
