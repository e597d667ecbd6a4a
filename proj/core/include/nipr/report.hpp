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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nipr/config.hpp"
#include "nipr/rational.hpp"

namespace nipr {

struct Witness {
  std::optional<double> frequency;  // omega or theta
  std::optional<double> value;      // eigenvalue margin, norm, ...
  std::optional<cplx> location;     // pole
  std::optional<CMat> matrix;
};

struct Condition {
  std::string id;
  std::string description;
  bool pass = true;
  std::string detail;
  Witness witness;
};

struct StrictnessLimits {
  std::optional<Mat> Q;               // lim (1/w) i[G - G*] as w -> 0+
  std::optional<double> sigma0_margin;
  std::optional<double> delta;
  std::optional<Mat> K_inf;           // lim F(iw)/(iw)
  std::optional<Mat> value_at_inf;    // F(inf) + F(inf)^T
  std::optional<Mat> w2_limit;        // lim w^2 [F(iw) + F(-iw)^T]
};

struct CircleLimits {
  std::optional<Mat> Q0;
  std::optional<Mat> Qpi;
};

struct ClassificationReport {
  std::string cls;
  Domain domain = Domain::CT;
  bool verdict = true;
  std::vector<Condition> conditions;
  std::vector<PoleDatum> boundary_poles;
  StrictnessLimits limits;
  CircleLimits circle;
  std::optional<double> grid_min_eig;
  std::vector<std::string> notes;
  Config config;

  void add(Condition c);
  const Condition* find(std::string_view id) const;
  const Condition* first_failure() const;
};

struct ScalarStructureReport {
  bool strictly_proper = false;
  int relative_degree = 0;
  std::vector<Root> zeros;
  int origin_zero_multiplicity = 0;
  bool zeros_in_closed_lhp = true;
  bool zeros_in_open_lhp = true;
  // Necessary conditions for a strictly proper C-NI function.
  bool ni_candidate = true;
  // Necessary condition for C-SSNI: origin zero at most simple.
  bool ssni_candidate = true;
};

struct GainOrder {
  Mat difference;
  bool psd = false;
  bool pd = false;
};

// JSON serializations. Matrices are nested arrays; complex values are
// {"re": .., "im": ..} objects.
std::string to_json(const ClassificationReport& r, int indent = 2);
std::string to_json(const Config& c, int indent = 2);
std::string to_text(const ClassificationReport& r);

}  // namespace nipr
