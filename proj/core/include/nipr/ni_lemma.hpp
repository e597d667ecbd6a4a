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

#include "nipr/config.hpp"
#include "nipr/statespace.hpp"

namespace nipr {

enum class FeasibilityStatus { Feasible, Infeasible, Inconclusive };
const char* to_string(FeasibilityStatus s);

struct FeasibilityCertificate {
  FeasibilityStatus status = FeasibilityStatus::Inconclusive;
  Mat X;  // X for the primal forms, Y for the dual form
  double residual_affine = 0.0;
  double lambda_min_X = 0.0;
  double lambda_min_lyap = 0.0;  // of X - A^T X A (Y - A Y A^T for the dual); of the block matrix for D-PR
  int iterations = 0;
  // D-PR only: factors of X - A^T X A = L^T L, C^T - A^T X B = L^T W, D^T + D - B^T X B = W^T W.
  std::optional<Mat> L;
  std::optional<Mat> W;
  std::string note;
};

// Verification tolerances applied to every Feasible result.
inline constexpr double kAffineTol = 1e-7;
inline constexpr double kConeTol = 1e-8;

// Discrete positive real lemma: X > 0 with
// [X - A^T X A, C^T - A^T X B; C - B^T X A, D^T + D - B^T X B] >= 0.
// Throws NonMinimalRealization.
FeasibilityCertificate dpr_lemma_check(const StateSpace& ss, const Config& cfg = {});

// X > 0, X - A^T X A >= 0, C (A + I)^-1 = -B^T (A^T - I)^-1 X.
// Throws NonMinimalRealization, EigenvalueAtPlusMinusOne, AsymmetricD.
FeasibilityCertificate dni_lemma_check(const StateSpace& ss, const Config& cfg = {});

// Y > 0, Y - A Y A^T >= 0, (A - I)^-1 B = -Y (A^T + I)^-1 C^T.
FeasibilityCertificate dual_dni_lemma_check(const StateSpace& ss, const Config& cfg = {});

// Independent re-check of a certificate against the realization.
struct CertificateCheck {
  bool valid = false;
  double residual_affine = 0.0;
  double lambda_min_X = 0.0;
  double lambda_min_lyap = 0.0;
};
CertificateCheck verify_dni_certificate(const StateSpace& ss, const Mat& X);
CertificateCheck verify_dual_dni_certificate(const StateSpace& ss, const Mat& Y);
CertificateCheck verify_dpr_certificate(const StateSpace& ss, const Mat& X);

// Certificate JSON; `check` adds a "verification" object.
std::string to_json(const FeasibilityCertificate& c, const CertificateCheck* check = nullptr, int indent = 2);

}  // namespace nipr
