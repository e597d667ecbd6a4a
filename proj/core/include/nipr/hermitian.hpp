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

#include <limits>
#include <optional>
#include <vector>

#include "nipr/rational.hpp"

namespace nipr {

// NI: i[G - G*]. PR: G + G*.
enum class Kind { NegativeImaginary, PositiveReal };

const char* to_string(Kind k);

/// Hermitian part of a rational matrix on the stability boundary, evaluated
/// through the para-Hermitian conjugate G(-s)^T (CT) or G(1/z)^T (DT) so that
/// odd/even cancellations happen in coefficient space.
class BoundaryForm {
 public:
  BoundaryForm(const RationalMatrix& g, Kind kind);

  // w is omega (s = i w) for CT and theta (z = e^{i w}) for DT.
  // nullopt when w lies on a pole of the para-Hermitian form.
  std::optional<CMat> at(double w) const;
  // Spectral norm of G itself at the boundary point; 0 on a pole.
  double value_norm(double w) const;
  // G(s) -+ G(-s)^T or G(z) -+ G(1/z)^T.
  const RationalMatrix& para() const { return para_; }
  Kind kind() const { return kind_; }
  Domain domain() const { return para_.domain(); }

 private:
  RationalMatrix g_;
  RationalMatrix para_;
  Kind kind_;
};

struct EigenSummary {
  double min = 0.0;
  double max = 0.0;
  double norm = 0.0;  // spectral norm
};

EigenSummary hermitian_eigs(const CMat& h);

// c[k] multiplies x^(order + k).
struct MatrixLaurent {
  int order = 0;
  std::vector<CMat> c;
};

MatrixLaurent matrix_laurent_at_zero(const RationalMatrix& g, int nterms);
// In t = 1/s.
MatrixLaurent matrix_laurent_at_infinity(const RationalMatrix& g, int nterms);

// Coefficients of the Hermitian boundary matrix of a CT matrix, as a series
// in w near w = 0 or in t = 1/w near w = infinity.
MatrixLaurent hermitian_series_at_zero(const RationalMatrix& g, Kind kind, int nterms);
MatrixLaurent hermitian_series_at_infinity(const RationalMatrix& g, Kind kind, int nterms);

struct Branch {
  int order = 0;
  double lead = 0.0;
};

/// Eigenvalue branches lambda(x) ~ lead * x^order of a Hermitian series.
struct BranchAnalysis {
  std::vector<Branch> branches;
  int degenerate = 0;  // branches not resolved within the available terms

  bool all_positive() const;
  bool none_negative() const;
  int max_order() const;
  // Smallest leading coefficient among branches of the given order.
  double min_lead(int order) const;
};

// Rellich-style reduction: split off the nonzero eigenspace of the lowest
// coefficient, take the Schur complement on the kernel, shift, repeat.
// rho rescales the variable (x = rho * tau) so that coefficients stay balanced.
// Eigenvalues below tol * max(series scale, ref) count as zero; ref is the
// size of the matrix the series was derived from, so that pure round-off
// does not read as a branch.
BranchAnalysis branch_analysis(const MatrixLaurent& series, double rho = 1.0, double tol = 1e-9, double ref = 0.0);

enum class Endpoint { Zero, Infinity };

// Branches of the CT Hermitian boundary matrix at w -> 0+ or w -> infinity.
BranchAnalysis endpoint_branches(const RationalMatrix& g_ct, Kind kind, Endpoint e, int nterms = 14);

}  // namespace nipr
