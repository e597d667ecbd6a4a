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


// Brute-force numerical oracles, independent of the library's symbolic paths.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nipr/document.hpp"
#include "nipr/hermitian.hpp"
#include "nipr/rational.hpp"

namespace nipr::testing {

using MatFn = std::function<CMat(cplx)>;

// Laurent coefficient c_k of f around `center`, as the average of
// f(x) (x - center)^(-k) over `dirs` equally spaced directions at radius r.
// With 8 directions every term c_j, 0 < |j - k| < 8, cancels exactly.
CMat laurent_coefficient(const MatFn& f, cplx center, int k, double r = 1e-4, int dirs = 8);
// Coefficient of s^k in the expansion of f at infinity, sampled at |s| = 1/r.
CMat infinity_coefficient(const MatFn& f, int k, double r = 1e-4, int dirs = 8);

// Entrywise Horner evaluation in long double, independent of the library's eval.
CMat eval_precise(const RationalMatrix& g, cplx p);

// i[G - G^*] or G + G^* from a direct evaluation at s = i w or z = e^{i w}.
CMat boundary_hermitian(const RationalMatrix& g, Kind kind, double w);
double min_eig(const CMat& h);

// lim (1/w) i[G(iw) - G(iw)^*], w -> 0+, via the analytic continuation
// i[G(iw) - G(-iw)^T] sampled around w = 0.
CMat ct_q_numeric(const RationalMatrix& g, double r = 1e-4);
// lim (1/sin t) i[G(e^{it}) - G(e^{it})^*] at t -> 0+ or t -> pi-.
CMat dt_q_numeric(const RationalMatrix& g, bool at_pi, double r = 1e-4);

// |a - b| / max(1, |b|), Frobenius.
double rel_err(const CMat& a, const CMat& b);

std::string data_dir();
// Every *.json document under the test data directory, sorted by file name.
std::vector<std::pair<std::string, SystemDocument>> corpus_documents();
SystemDocument corpus_document(const std::string& file);

}  // namespace nipr::testing
