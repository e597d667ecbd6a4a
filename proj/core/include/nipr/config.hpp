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

namespace nipr {

/// Tolerances and grid sizes shared by every classifier. Reports embed the
/// effective values.
struct Config {
  // Non-strict PSD: lambda_min >= -psd_tol * (1 + |M|); boundary grids use
  // max(|M|, |G|) for |M|.
  // Strict boundary sign: lambda_min > psd_tol * |M| at every grid point.
  double psd_tol = 1e-8;
  // Boundary poles lie within pole_band * (1 + |p|) of the axis or circle.
  double pole_band = 1e-7;
  int ct_grid = 2000;
  double omega_min = 1e-6;
  double omega_max = 1e6;
  int dt_grid = 4096;
  bool require_symmetric = true;
  int lemma_max_iter = 5000;
  int eps_steps = 30;
};

}  // namespace nipr
