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

// Shared pieces of the CT and DT classifiers. Not installed.

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "nipr/analysis.hpp"

namespace nipr::detail {

enum class Strictness { NonNegative, Positive };

struct ScanResult {
  bool pass = true;
  int evaluated = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_freq = std::numeric_limits<double>::quiet_NaN();
  double worst_min = std::numeric_limits<double>::infinity();
};

// Evaluates the boundary form on the grid, refines local dips by
// golden-section search and applies the sign rule of `st`.
ScanResult scan(const BoundaryForm& bf, const std::vector<double>& grid, Strictness st, double tol,
                const std::vector<double>& skip, bool log_space);

struct BoundaryPole {
  cplx location;  // snapped onto the axis / circle
  int multiplicity = 1;
  double freq = 0.0;  // omega or theta
};

struct PoleLayout {
  std::vector<cplx> unstable;              // Re p > 0 or |p| > 1
  std::optional<BoundaryPole> at_zero;     // s = 0 or z = 1
  std::optional<BoundaryPole> at_minus;    // z = -1 (DT only)
  std::vector<BoundaryPole> upper;         // omega > 0 or theta in (0, pi)
  bool strictly_stable = true;             // Hurwitz / Schur
  std::vector<double> boundary_freqs;      // all boundary frequencies, for grid skipping
};

PoleLayout layout(const std::vector<MatrixPole>& ps, Domain d, double band);

double rel_hermitian_defect(const CMat& m);
bool is_psd(const CMat& m, double tol);
bool is_nsd(const CMat& m, double tol);
bool is_pd(const CMat& m, double tol);
double min_eig(const CMat& m);

std::string fmt(double v);
std::string fmt(cplx v);

Condition symmetry_condition(const RationalMatrix& g);

// Grid scan plus endpoint branch analysis. `endpoint_ct` is the CT matrix
// whose Hermitian form is expanded at w -> 0 and w -> infinity (the Cayley
// image for DT); null skips the endpoint analysis.
Condition boundary_sign(const RationalMatrix& g, Kind kind, Strictness st, const Config& cfg,
                        const std::vector<double>& grid, const std::vector<double>& skip,
                        const RationalMatrix* endpoint_ct, std::string id, std::string desc,
                        ClassificationReport& rep);

Condition full_rank_condition(const RationalMatrix& para, std::string desc);

}  // namespace nipr::detail
