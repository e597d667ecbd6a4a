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

// JSON encoders for numbers and matrices. Not installed.

#pragma once

#include <cmath>

#include "json.hpp"
#include "nipr/rational.hpp"

namespace nipr::detail {

// Non-finite values become the strings "inf", "-inf", "nan".
inline nlohmann::json jnum(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

inline nlohmann::json jcplx(cplx v) { return nlohmann::json{{"re", jnum(v.real())}, {"im", jnum(v.imag())}}; }

inline nlohmann::json jmat(const Mat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(jnum(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

inline nlohmann::json jcmat(const CMat& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(jcplx(m(i, k)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace nipr::detail
