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
#include "nipr/rational.hpp"
#include "nipr/statespace.hpp"

namespace nipr {

// s [G(s) - G(inf)]; throws ImproperInput.
RationalMatrix ct_ni_to_pr(const RationalMatrix& G);

// F(s)/s + D; throws AsymmetricD. When `warning` is given, F is classified
// and a message is stored if it is not a symmetric C-PR matrix.
RationalMatrix ct_pr_to_ni(const RationalMatrix& F, const Mat& D, std::string* warning = nullptr);

struct EpsilonResult {
  RationalMatrix system;
  double epsilon = 0.0;
  double epsilon_max = 0.0;
  int attempts = 0;
  std::vector<std::string> diagnostics;
};

// F(s)/(s + eps) + D with eps accepted by classify_cssni. F must be C-SSPR.
EpsilonResult csspr_to_cssni(const RationalMatrix& F, const Mat& D, const Config& cfg = {});
// (s + eps)(G(s) - G(inf)) with eps accepted by classify_csspr. G must be C-SSNI.
EpsilonResult cssni_to_csspr(const RationalMatrix& G, const Config& cfg = {});

// (z - 1)/(z + 1) [G(z) - G(-1)] with the factor z + 1 divided out exactly.
// Throws ImproperInput, PoleAtMinusOne, CancellationFailure.
RationalMatrix dt_ni_to_pr(const RationalMatrix& G);

// (z + 1)/(z - 1) F(z) + offset; throws AsymmetricOffset.
RationalMatrix dt_pr_to_ni(const RationalMatrix& F, const Mat& offset);

struct SsTransform {
  StateSpace ss;
  bool minimal = false;
};

// [A | B; C(A - I)(A + I)^-1 | C(A + I)^-1 B]; throws EigenvalueAtMinusOne.
SsTransform dt_ni_to_pr_ss(const StateSpace& ss);

}  // namespace nipr
