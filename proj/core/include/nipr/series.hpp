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

// c[k] multiplies x^(order + k), with x = s - p or x = 1/s.
struct Laurent {
  int order = 0;
  std::vector<cplx> c;
};

// Laurent expansion of g at p when p is a root of den of known multiplicity.
Laurent laurent_at(const RationalScalar& g, cplx p, int pole_order, int nterms);

// Expansion in t = 1/s around s = infinity.
Laurent laurent_at_infinity(const RationalScalar& g, int nterms);

// Multiplicity of p among the clustered roots of g's denominator.
int pole_order_at(const RationalScalar& g, cplx p);

// Matrix Taylor coefficients of an analytic-at-p rational matrix.
std::vector<CMat> taylor_matrix(const RationalMatrix& r, cplx p, int nterms);

// Matrix coefficients of r(s) = sum_k E_k s^(-k) for proper r.
std::vector<CMat> infinity_matrix(const RationalMatrix& r, int nterms);

// Power series division a/b truncated to n terms; b[0] != 0.
std::vector<cplx> series_divide(const std::vector<cplx>& a, const std::vector<cplx>& b, int n);

}  // namespace nipr
