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
#include "nipr/hermitian.hpp"
#include "nipr/rational.hpp"
#include "nipr/report.hpp"

namespace nipr {

// Continuous time.
ClassificationReport classify_cpr(const RationalMatrix& F, const Config& cfg = {});
ClassificationReport classify_csspr(const RationalMatrix& F, const Config& cfg = {});
ClassificationReport classify_cwspr(const RationalMatrix& F, const Config& cfg = {});
ClassificationReport classify_cni(const RationalMatrix& G, const Config& cfg = {});
ClassificationReport classify_cssni(const RationalMatrix& G, const Config& cfg = {});
ClassificationReport classify_cwsni(const RationalMatrix& G, const Config& cfg = {});

ScalarStructureReport scalar_ni_structure_checks(const RationalScalar& g);

// Discrete time.
ClassificationReport classify_dpr(const RationalMatrix& F, const Config& cfg = {});
ClassificationReport classify_dsspr(const RationalMatrix& F, const Config& cfg = {});
ClassificationReport classify_dni(const RationalMatrix& G, const Config& cfg = {});
ClassificationReport classify_dssni(const RationalMatrix& G, const Config& cfg = {});
ClassificationReport classify_dwsni(const RationalMatrix& G, const Config& cfg = {});

// G(1) - G(-1); throws PoleAtPlusMinusOne.
GainOrder gain_order_check(const RationalMatrix& G, const Config& cfg = {});

// Class names: cpr csspr cwspr cni cssni cwsni dpr dsspr dni dssni dwsni.
const std::vector<std::string>& class_names();
ClassificationReport classify(const RationalMatrix& g, std::string_view cls, const Config& cfg = {});

// Frequency grids: log-spaced omega for CT (optionally with omega = 0),
// theta on (0, pi) or [0, pi] for DT.
std::vector<double> ct_grid(const Config& cfg, bool include_zero);
std::vector<double> dt_grid(const Config& cfg, bool closed);

struct SweepRow {
  double freq = 0.0;
  bool defined = true;  // false on a pole
  double min_eig = 0.0;
  double max_eig = 0.0;
  // min_eig / omega (CT) or min_eig / sin(theta) (DT); NI mode only.
  std::optional<double> scaled;
  CMat value;  // G at the boundary point
};

std::vector<SweepRow> sweep(const RationalMatrix& g, Kind kind, const std::vector<double>& grid);

}  // namespace nipr
