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

#include "nipr/hermitian.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nipr/series.hpp"

namespace nipr {

const char* to_string(Kind k) { return k == Kind::NegativeImaginary ? "ni" : "pr"; }

namespace {

const cplx kI(0.0, 1.0);

cplx i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

CMat hermitianize(const CMat& h) { return 0.5 * (h + h.adjoint()); }

}  // namespace

BoundaryForm::BoundaryForm(const RationalMatrix& g, Kind kind) : g_(g), kind_(kind) {
  const RationalMatrix conj = g.domain() == Domain::CT ? g.reflect().transpose() : g.invert_argument().transpose();
  para_ = kind == Kind::NegativeImaginary ? g - conj : g + conj;
}

std::optional<CMat> BoundaryForm::at(double w) const {
  const cplx p = domain() == Domain::CT ? cplx(0.0, w) : std::polar(1.0, w);
  auto v = para_.try_eval(p);
  if (!v) return std::nullopt;
  return hermitianize(kind_ == Kind::NegativeImaginary ? CMat(kI * *v) : *v);
}

double BoundaryForm::value_norm(double w) const {
  const cplx p = domain() == Domain::CT ? cplx(0.0, w) : std::polar(1.0, w);
  auto v = g_.try_eval(p);
  if (!v || v->size() == 0) return 0.0;
  return Eigen::JacobiSVD<CMat>(*v).singularValues()(0);
}

EigenSummary hermitian_eigs(const CMat& h) {
  EigenSummary out;
  if (h.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitianize(h), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  out.min = ev(0);
  out.max = ev(ev.size() - 1);
  out.norm = std::max(std::abs(out.min), std::abs(out.max));
  return out;
}

MatrixLaurent matrix_laurent_at_zero(const RationalMatrix& g, int nterms) {
  const int m = g.size();
  std::vector<int> k(static_cast<size_t>(m) * m, 0);
  int K = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (!g(i, j).is_zero()) K = std::max(K, k[i * m + j] = pole_order_at(g(i, j), 0.0));
  MatrixLaurent out;
  out.order = -K;
  out.c.assign(nterms, CMat::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (g(i, j).is_zero()) continue;
      const int kij = k[i * m + j];
      const Laurent l = laurent_at(g(i, j), 0.0, kij, nterms);
      for (int idx = 0; idx < nterms; ++idx) {
        const int pos = K - kij + idx;
        if (pos < nterms) out.c[pos](i, j) = l.c[idx];
      }
    }
  }
  return out;
}

MatrixLaurent matrix_laurent_at_infinity(const RationalMatrix& g, int nterms) {
  const int m = g.size();
  int o = INT_MAX;
  for (const RationalScalar& e : g.entries())
    if (!e.is_zero()) o = std::min(o, e.den().degree() - e.num().degree());
  MatrixLaurent out;
  out.order = o == INT_MAX ? 0 : o;
  out.c.assign(nterms, CMat::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (g(i, j).is_zero()) continue;
      const Laurent l = laurent_at_infinity(g(i, j), nterms);
      for (int idx = 0; idx < nterms; ++idx) {
        const int pos = l.order - out.order + idx;
        if (pos < nterms) out.c[pos](i, j) = l.c[idx];
      }
    }
  }
  return out;
}

MatrixLaurent hermitian_series_at_zero(const RationalMatrix& g, Kind kind, int nterms) {
  MatrixLaurent l = matrix_laurent_at_zero(g, nterms);
  for (size_t k = 0; k < l.c.size(); ++k) {
    const cplx ip = i_pow(l.order + static_cast<int>(k));
    const CMat c = l.c[k];
    l.c[k] = kind == Kind::NegativeImaginary ? CMat(kI * (c * ip - c.adjoint() * std::conj(ip)))
                                             : CMat(c * ip + c.adjoint() * std::conj(ip));
  }
  return l;
}

MatrixLaurent hermitian_series_at_infinity(const RationalMatrix& g, Kind kind, int nterms) {
  MatrixLaurent l = matrix_laurent_at_infinity(g, nterms);
  for (size_t k = 0; k < l.c.size(); ++k) {
    const cplx ip = i_pow(l.order + static_cast<int>(k));
    const CMat e = l.c[k];
    l.c[k] = kind == Kind::NegativeImaginary ? CMat(kI * (e * std::conj(ip) - e.adjoint() * ip))
                                             : CMat(e * std::conj(ip) + e.adjoint() * ip);
  }
  return l;
}

bool BranchAnalysis::all_positive() const {
  return degenerate == 0 &&
         std::all_of(branches.begin(), branches.end(), [](const Branch& b) { return b.lead > 0.0; });
}

bool BranchAnalysis::none_negative() const {
  return std::none_of(branches.begin(), branches.end(), [](const Branch& b) { return b.lead < 0.0; });
}

int BranchAnalysis::max_order() const {
  int o = INT_MIN;
  for (const Branch& b : branches) o = std::max(o, b.order);
  return o;
}

double BranchAnalysis::min_lead(int order) const {
  double v = std::numeric_limits<double>::infinity();
  for (const Branch& b : branches)
    if (b.order == order) v = std::min(v, b.lead);
  return v;
}

namespace {

using Series = std::vector<CMat>;

Series inverse_series(const Series& s) {
  const size_t n = s.size();
  Series x(n);
  const CMat x0 = s[0].inverse();
  x[0] = x0;
  for (size_t k = 1; k < n; ++k) {
    CMat acc = CMat::Zero(s[0].rows(), s[0].cols());
    for (size_t j = 1; j <= k; ++j) acc += s[j] * x[k - j];
    x[k] = -x0 * acc;
  }
  return x;
}

}  // namespace

BranchAnalysis branch_analysis(const MatrixLaurent& series, double rho, double tol, double ref) {
  BranchAnalysis out;
  if (series.c.empty()) return out;
  const int m = static_cast<int>(series.c[0].rows());
  Series S(series.c.size());
  double scale = 0.0;
  double rp = 1.0;
  for (size_t k = 0; k < S.size(); ++k) {
    S[k] = hermitianize(series.c[k]) * rp;
    scale = std::max(scale, S[k].norm());
    rp *= rho;
  }
  if (scale <= tol * ref || scale == 0.0) {
    out.degenerate = m;
    return out;
  }
  const double thr = tol * std::max(scale, ref);
  int level = 0;
  while (true) {
    const int d = static_cast<int>(S[0].rows());
    if (d == 0) break;
    Eigen::SelfAdjointEigenSolver<CMat> es(hermitianize(S[0]));
    const auto& ev = es.eigenvalues();
    std::vector<int> nz, ker;
    for (int k = 0; k < d; ++k) (std::abs(ev(k)) > thr ? nz : ker).push_back(k);
    for (int k : nz) out.branches.push_back({series.order + level, ev(k) / std::pow(rho, level)});
    if (ker.empty()) break;
    if (S.size() == 1) {
      out.degenerate += static_cast<int>(ker.size());
      break;
    }
    CMat V(d, ker.size()), W(d, nz.size());
    for (size_t k = 0; k < ker.size(); ++k) V.col(k) = es.eigenvectors().col(ker[k]);
    for (size_t k = 0; k < nz.size(); ++k) W.col(k) = es.eigenvectors().col(nz[k]);
    const size_t n = S.size();
    Series T(n);
    if (nz.empty()) {
      for (size_t k = 0; k < n; ++k) T[k] = V.adjoint() * S[k] * V;
    } else {
      Series Sww(n), Swv(n), Svv(n);
      for (size_t k = 0; k < n; ++k) {
        Sww[k] = W.adjoint() * S[k] * W;
        Swv[k] = W.adjoint() * S[k] * V;
        Svv[k] = V.adjoint() * S[k] * V;
      }
      const Series X = inverse_series(Sww);
      // Y = X * Swv, then T = Svv - Swv^* Y.
      Series Y(n, CMat::Zero(W.cols(), V.cols()));
      for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j <= k; ++j) Y[k] += X[j] * Swv[k - j];
      for (size_t k = 0; k < n; ++k) {
        T[k] = Svv[k];
        for (size_t j = 0; j <= k; ++j) T[k] -= Swv[j].adjoint() * Y[k - j];
      }
    }
    // T[0] vanishes on the kernel; shift one order.
    S.assign(T.begin() + 1, T.end());
    ++level;
  }
  return out;
}

namespace {

double series_scale(const MatrixLaurent& s, double rho) {
  double out = 0.0, rp = 1.0;
  for (const CMat& c : s.c) {
    out = std::max(out, c.norm() * rp);
    rp *= rho;
  }
  return out;
}

}  // namespace

BranchAnalysis endpoint_branches(const RationalMatrix& g_ct, Kind kind, Endpoint e, int nterms) {
  double rho = 1.0;
  const std::vector<MatrixPole> ps = poles(g_ct);
  if (e == Endpoint::Zero) {
    double d = std::numeric_limits<double>::infinity();
    for (const MatrixPole& p : ps)
      if (std::abs(p.location) > 1e-7) d = std::min(d, std::abs(p.location));
    if (std::isfinite(d)) rho = std::clamp(d / 2.0, 1e-8, 1e8);
    return branch_analysis(hermitian_series_at_zero(g_ct, kind, nterms), rho, 1e-9,
                           series_scale(matrix_laurent_at_zero(g_ct, nterms), rho));
  }
  double r = 0.0;
  for (const MatrixPole& p : ps) r = std::max(r, std::abs(p.location));
  if (r > 0.0) rho = std::clamp(1.0 / (2.0 * r), 1e-8, 1e8);
  return branch_analysis(hermitian_series_at_infinity(g_ct, kind, nterms), rho, 1e-9,
                         series_scale(matrix_laurent_at_infinity(g_ct, nterms), rho));
}

}  // namespace nipr
