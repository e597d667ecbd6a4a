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

#include "nipr/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/SVD>

#include "nipr/analysis.hpp"
#include "nipr/error.hpp"

namespace nipr {

namespace {

bool symmetric_matrix(const Mat& m) { return (m - m.transpose()).norm() <= 1e-12 * (1.0 + m.norm()); }

void check_dims(const RationalMatrix& g, const Mat& k, ErrorKind kind, const char* name) {
  if (k.rows() != g.size() || k.cols() != g.size())
    throw Error(ErrorKind::DimensionMismatch, std::string(name) + " has the wrong size");
  if (!symmetric_matrix(k)) throw Error(kind, std::string(name) + " is not symmetric");
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// Entrywise p(s) * (g - c) with c the constant entry of `offset`.
RationalMatrix times_poly_minus(const RationalMatrix& g, const Mat& offset, const Polynomial& p) {
  RationalMatrix out(g.size(), g.domain());
  for (int i = 0; i < g.size(); ++i)
    for (int k = 0; k < g.size(); ++k) {
      const RationalScalar& e = g(i, k);
      const Polynomial n = e.num() - offset(i, k) * e.den();
      out(i, k) = RationalScalar(p * n, e.den());
    }
  return out;
}

// Half the smallest distance of a pole to the imaginary axis; 1 when there are no poles.
double epsilon_cap(const RationalMatrix& g) {
  double m = std::numeric_limits<double>::infinity();
  for (const MatrixPole& p : poles(g)) m = std::min(m, std::abs(p.location.real()));
  return std::isfinite(m) ? m / 2.0 : 1.0;
}

template <class Build, class Accept>
EpsilonResult search(double eps_max, int steps, Build build, Accept accept) {
  EpsilonResult r;
  r.epsilon_max = eps_max;
  double eps = eps_max;
  for (int k = 0; k < steps; ++k, eps /= 2.0) {
    ++r.attempts;
    RationalMatrix g = build(eps);
    std::string why;
    if (accept(g, why)) {
      r.system = std::move(g);
      r.epsilon = eps;
      r.diagnostics.push_back("accepted eps = " + fmt(eps) + " (eps_max = " + fmt(eps_max) + ")");
      return r;
    }
    r.diagnostics.push_back("rejected eps = " + fmt(eps) + ": " + why);
  }
  std::string msg = "no accepted epsilon in " + std::to_string(steps) + " halvings from " + fmt(eps_max);
  if (!r.diagnostics.empty()) msg += "; last: " + r.diagnostics.back();
  throw Error(ErrorKind::EpsilonSearchFailed, msg);
}

std::string failure_of(const ClassificationReport& rep) {
  const Condition* c = rep.first_failure();
  return c ? c->id + " (" + c->detail + ")" : "";
}

}  // namespace

RationalMatrix ct_ni_to_pr(const RationalMatrix& G) {
  if (!G.is_proper()) throw Error(ErrorKind::ImproperInput, "ct_ni_to_pr requires a proper matrix");
  return times_poly_minus(G, G.at_infinity(), Polynomial{0.0, 1.0});
}

RationalMatrix ct_pr_to_ni(const RationalMatrix& F, const Mat& D, std::string* warning) {
  check_dims(F, D, ErrorKind::AsymmetricD, "D");
  if (warning) {
    warning->clear();
    if (!is_symmetric(F)) *warning = "F is not symmetric";
    else if (const ClassificationReport rep = classify_cpr(F); !rep.verdict)
      *warning = "F is not C-PR: " + failure_of(rep);
  }
  const RationalScalar inv_s(Polynomial{1.0}, Polynomial{0.0, 1.0});
  return inv_s * F + RationalMatrix::constant(D, F.domain());
}

EpsilonResult csspr_to_cssni(const RationalMatrix& F, const Mat& D, const Config& cfg) {
  check_dims(F, D, ErrorKind::AsymmetricD, "D");
  if (const ClassificationReport rep = classify_csspr(F, cfg); !rep.verdict)
    throw Error(ErrorKind::PreconditionViolated, "F is not C-SSPR: " + failure_of(rep));
  const RationalMatrix dm = RationalMatrix::constant(D, F.domain());
  return search(
      epsilon_cap(F), cfg.eps_steps,
      [&](double eps) { return RationalScalar(Polynomial{1.0}, Polynomial{eps, 1.0}) * F + dm; },
      [&](const RationalMatrix& g, std::string& why) {
        const ClassificationReport rep = classify_cssni(g, cfg);
        why = failure_of(rep);
        return rep.verdict;
      });
}

EpsilonResult cssni_to_csspr(const RationalMatrix& G, const Config& cfg) {
  if (const ClassificationReport rep = classify_cssni(G, cfg); !rep.verdict)
    throw Error(ErrorKind::PreconditionViolated, "G is not C-SSNI: " + failure_of(rep));
  const Mat ginf = G.at_infinity();
  return search(
      epsilon_cap(G), cfg.eps_steps, [&](double eps) { return times_poly_minus(G, ginf, Polynomial{eps, 1.0}); },
      [&](const RationalMatrix& f, std::string& why) {
        const ClassificationReport rep = classify_csspr(f, cfg);
        why = failure_of(rep);
        return rep.verdict;
      });
}

RationalMatrix dt_ni_to_pr(const RationalMatrix& G) {
  if (G.domain() != Domain::DT) throw Error(ErrorKind::DomainMismatch, "dt_ni_to_pr expects a discrete-time matrix");
  if (!G.is_proper()) throw Error(ErrorKind::ImproperInput, "dt_ni_to_pr requires a proper matrix");
  const auto gm = G.try_eval(-1.0);
  if (!gm) throw Error(ErrorKind::PoleAtMinusOne, "G has a pole at z = -1");
  const Mat c = gm->real();
  const Polynomial zp1{1.0, 1.0}, zm1{-1.0, 1.0};
  RationalMatrix out(G.size(), Domain::DT);
  for (int i = 0; i < G.size(); ++i)
    for (int k = 0; k < G.size(); ++k) {
      const RationalScalar& e = G(i, k);
      const Polynomial n = e.num() - c(i, k) * e.den();
      if (n.is_zero()) continue;
      const PolyDivision qr = divmod(n, zp1);
      const double scale = std::max({n.norm_inf(), e.den().norm_inf(), 1.0});
      const double resid = qr.remainder.is_zero() ? 0.0 : qr.remainder.norm_inf();
      if (resid > 1e-8 * scale)
        throw Error(ErrorKind::CancellationFailure, "residual " + fmt(resid) + " at z = -1 in entry (" +
                                                        std::to_string(i) + "," + std::to_string(k) + ")");
      out(i, k) = RationalScalar(zm1 * qr.quotient, e.den());
    }
  return out;
}

RationalMatrix dt_pr_to_ni(const RationalMatrix& F, const Mat& offset) {
  check_dims(F, offset, ErrorKind::AsymmetricOffset, "offset");
  const RationalScalar f(Polynomial{1.0, 1.0}, Polynomial{-1.0, 1.0});
  return f * F + RationalMatrix::constant(offset, F.domain());
}

SsTransform dt_ni_to_pr_ss(const StateSpace& ss) {
  ss.validate();
  SsTransform out;
  const int n = ss.n();
  if (n == 0) {
    out.ss = StateSpace::static_gain(Mat::Zero(ss.m(), ss.m()), ss.domain);
    out.minimal = true;
    return out;
  }
  const Mat I = Mat::Identity(n, n);
  const Mat ap = ss.A + I;
  const Eigen::JacobiSVD<Mat> svd(ap);
  if (svd.singularValues()(n - 1) <= 1e-9 * (1.0 + ss.A.norm()))
    throw Error(ErrorKind::EigenvalueAtMinusOne, "A + I is singular");
  const Mat inv = ap.inverse();
  out.ss.A = ss.A;
  out.ss.B = ss.B;
  out.ss.C = ss.C * (ss.A - I) * inv;
  out.ss.D = ss.C * inv * ss.B;
  out.ss.domain = ss.domain;
  out.minimal = is_minimal(out.ss);
  return out;
}

}  // namespace nipr
