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


#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>

#include <Eigen/Eigenvalues>

namespace nipr::testing {

CMat laurent_coefficient(const MatFn& f, cplx center, int k, double r, int dirs) {
  CMat acc;
  for (int j = 0; j < dirs; ++j) {
    const cplx d = std::polar(r, 2.0 * M_PI * (j + 0.5) / dirs);
    const CMat v = f(center + d) * std::pow(d, -k);
    acc = j == 0 ? v : CMat(acc + v);
  }
  return acc / static_cast<double>(dirs);
}

CMat infinity_coefficient(const MatFn& f, int k, double r, int dirs) {
  // s = 1/t; coefficient of s^k is the coefficient of t^(-k) of f(1/t).
  return laurent_coefficient([&](cplx t) { return f(1.0 / t); }, 0.0, -k, r, dirs);
}

namespace {

using lcplx = std::complex<long double>;

lcplx horner(const Polynomial& q, lcplx x) {
  lcplx acc = 0.0L;
  for (int k = q.degree(); k >= 0; --k) acc = acc * x + static_cast<long double>(q[k]);
  return acc;
}

}  // namespace

CMat eval_precise(const RationalMatrix& g, cplx p) {
  const lcplx x(p.real(), p.imag());
  CMat out(g.size(), g.size());
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      const RationalScalar& e = g(i, j);
      const lcplx v = e.is_zero() ? lcplx(0.0L) : horner(e.num(), x) / horner(e.den(), x);
      out(i, j) = cplx(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    }
  return out;
}

CMat boundary_hermitian(const RationalMatrix& g, Kind kind, double w) {
  const cplx p = g.domain() == Domain::CT ? cplx(0.0, w) : std::polar(1.0, w);
  const CMat v = eval_precise(g, p);
  const CMat h = kind == Kind::NegativeImaginary ? CMat(cplx(0, 1) * (v - v.adjoint())) : CMat(v + v.adjoint());
  return (h + h.adjoint()) / 2.0;
}

double min_eig(const CMat& h) {
  if (h.size() == 0) return 0.0;
  return Eigen::SelfAdjointEigenSolver<CMat>(h, Eigen::EigenvaluesOnly).eigenvalues()(0);
}

CMat ct_q_numeric(const RationalMatrix& g, double r) {
  const cplx I(0, 1);
  auto h = [&](cplx w) -> CMat {
    return I * (eval_precise(g, I * w) - eval_precise(g, -I * w).transpose()) / w;
  };
  return laurent_coefficient(h, 0.0, 0, r);
}

CMat dt_q_numeric(const RationalMatrix& g, bool at_pi, double r) {
  const cplx I(0, 1);
  auto h = [&](cplx t) -> CMat {
    return I * (eval_precise(g, std::exp(I * t)) - eval_precise(g, std::exp(-I * t)).transpose()) / std::sin(t);
  };
  return laurent_coefficient(h, at_pi ? M_PI : 0.0, 0, r);
}

double rel_err(const CMat& a, const CMat& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

std::string data_dir() { return NIPR_TEST_DATA_DIR; }

std::vector<std::pair<std::string, SystemDocument>> corpus_documents() {
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(data_dir()))
    if (e.path().extension() == ".json" && e.path().filename().string().rfind("config", 0) != 0)
      files.push_back(e.path().filename().string());
  std::sort(files.begin(), files.end());
  std::vector<std::pair<std::string, SystemDocument>> out;
  for (const std::string& f : files) out.emplace_back(f, corpus_document(f));
  return out;
}

SystemDocument corpus_document(const std::string& file) { return load_document(data_dir() + "/" + file); }

}  // namespace nipr::testing
