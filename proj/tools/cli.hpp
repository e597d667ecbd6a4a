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

#include <iosfwd>
#include <string>
#include <vector>

#include "nipr/hermitian.hpp"
#include "nipr/rational.hpp"

namespace nipr::cli {

// Exit codes.
inline constexpr int kTrue = 0;
inline constexpr int kFalse = 1;
inline constexpr int kError = 2;

// Runs one command line (argv[0] is the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Grid spec: "N" (default grid with N points), "lin:a:b:N" or "log:a:b:N".
std::vector<double> parse_grid(const std::string& spec, Domain domain);

// CSV with header row; `entries` appends re/im columns for every entry of G.
std::string sweep_csv(const RationalMatrix& g, Kind kind, const std::vector<double>& grid, bool entries);

// "1,0;0,1" style matrix, or a single number for a multiple of the identity.
Mat parse_matrix(const std::string& text, int m);

}  // namespace nipr::cli
