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

#include <map>
#include <string>
#include <vector>

#include "nipr/config.hpp"
#include "nipr/rational.hpp"
#include "nipr/statespace.hpp"

namespace nipr {

/// One transfer-function entry, coefficients in ascending powers, kept
/// exactly as written (no normalization).
struct TfEntry {
  std::vector<double> num;
  std::vector<double> den;
  bool operator==(const TfEntry&) const = default;
};

/// Text form of a system: either an m x m grid of entries or (A, B, C, D).
struct SystemDocument {
  enum class Form { Tfm, Ss };

  std::string name;
  Domain domain = Domain::CT;
  Form form = Form::Tfm;
  std::vector<std::vector<TfEntry>> entries;
  Mat A, B, C, D;
  std::map<std::string, std::string> meta;

  RationalMatrix to_rational() const;
  // tfm documents go through a minimal realization.
  StateSpace to_state_space() const;

  bool operator==(const SystemDocument& o) const;
};

// ParseError carries "line L, column C" for syntax errors and the JSON
// pointer of the offending value for structural ones.
SystemDocument parse_document(const std::string& text);
SystemDocument load_document(const std::string& path);

// Canonical layout, every number with 17 significant digits.
std::string serialize(const SystemDocument& doc);
void save_document(const SystemDocument& doc, const std::string& path);

SystemDocument make_document(const RationalMatrix& g, const std::string& name = "");
SystemDocument make_document(const StateSpace& ss, const std::string& name = "");

// Starts from `base` and overrides the keys present; unknown keys are errors.
Config parse_config(const std::string& text, const Config& base = {});
Config load_config(const std::string& path, const Config& base = {});

// printf %.17g; reads back to the same double.
std::string format_number(double v);

}  // namespace nipr
