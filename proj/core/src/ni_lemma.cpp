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

#include "nipr/ni_lemma.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "lmi.hpp"
#include "nipr/error.hpp"

namespace nipr {

const char* to_string(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Feasible: return "Feasible";
    case FeasibilityStatus::Infeasible: return "Infeasible";
    case FeasibilityStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double sym_min_eig(const Mat& m) {
  if (m.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es((m + m.transpose()) / 2.0, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

double min_singular(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  return svd.singularValues()(svd.singularValues().size() - 1);
}

void require_dt(const StateSpace& ss) {
  ss.validate();
  if (ss.domain != Domain::DT) throw Error(ErrorKind::DomainMismatch, "the lemma applies to discrete-time realizations");
}

// P X Q = R together with X > 0 and X - F^T X F >= 0.
struct NiForm {
  Mat P, Q, R, F;
};

NiForm primal_form(const StateSpace& ss) {
  const int n = ss.n();
  const Mat I = Mat::Identity(n, n);
  return {ss.B.transpose() * (ss.A.transpose() - I).inverse(), I, -ss.C * (ss.A + I).inverse(), ss.A};
}

NiForm dual_form(const StateSpace& ss) {
  const int n = ss.n();
  const Mat I = Mat::Identity(n, n);
  return {I, (ss.A.transpose() + I).inverse() * ss.C.transpose(), -(ss.A - I).inverse() * ss.B,
          ss.A.transpose()};
}

Mat stein(const Mat& X, const Mat& F) { return X - F.transpose() * X * F; }

CertificateCheck verify_form(const NiForm& f, const Mat& X) {
  CertificateCheck c;
  if (X.rows() != f.F.rows() || X.cols() != f.F.rows()) return c;
  const Mat xs = (X + X.transpose()) / 2.0;
  const double scale = 1.0 + f.R.norm() + f.P.norm() * xs.norm() * f.Q.norm();
  c.residual_affine = (f.P * xs * f.Q - f.R).norm() / scale;
  c.lambda_min_X = sym_min_eig(xs);
  const Mat s = stein(xs, f.F);
  c.lambda_min_lyap = sym_min_eig(s);
  const double xn = xs.norm();
  c.valid = (X - X.transpose()).norm() <= 1e-10 * (1.0 + xn) && c.residual_affine <= kAffineTol &&
            c.lambda_min_X > 1e-10 * xn && c.lambda_min_lyap >= -kConeTol * (xn + (xs - s).norm());
  return c;
}

void check_ni_preconditions(const StateSpace& ss) {
  require_dt(ss);
  if ((ss.D - ss.D.transpose()).norm() > 1e-9 * (1.0 + ss.D.norm()))
    throw Error(ErrorKind::AsymmetricD, "D is not symmetric");
  if (ss.n() == 0) return;
  if (!is_minimal(ss)) throw Error(ErrorKind::NonMinimalRealization, "the realization is not minimal");
  const int n = ss.n();
  const Mat I = Mat::Identity(n, n);
  const double tol = 1e-9 * (1.0 + ss.A.norm());
  if (min_singular(ss.A + I) <= tol || min_singular(ss.A - I) <= tol)
    throw Error(ErrorKind::EigenvalueAtPlusMinusOne, "A has an eigenvalue at +1 or -1");
}

FeasibilityCertificate solve_ni(const StateSpace& ss, const NiForm& f, const Config& cfg) {
  FeasibilityCertificate cert;
  const int n = ss.n();
  if (n == 0) {
    cert.status = FeasibilityStatus::Feasible;
    cert.X = Mat(0, 0);
    cert.note = "static gain: no state, feasible with an empty certificate";
    return cert;
  }
  const std::vector<Mat> basis = detail::symmetric_basis(n);
  const int p = static_cast<int>(basis.size());
  const int rows = static_cast<int>(f.R.size());
  Mat M(rows, p);
  for (int k = 0; k < p; ++k) {
    const Mat img = f.P * basis[k] * f.Q;
    M.col(k) = Eigen::Map<const Eigen::VectorXd>(img.data(), rows);
  }
  const Eigen::VectorXd r = Eigen::Map<const Eigen::VectorXd>(f.R.data(), rows);
  const Eigen::VectorXd theta = Eigen::CompleteOrthogonalDecomposition<Mat>(M).solve(r);
  const double lsres = (M * theta - r).norm() / (1.0 + r.norm() + M.norm() * theta.norm());
  cert.residual_affine = lsres;
  if (lsres > 1e-9) {
    cert.status = FeasibilityStatus::Infeasible;
    cert.note = "linear equation has no symmetric solution (residual " + fmt(lsres) + ")";
    return cert;
  }
  Mat X0 = Mat::Zero(n, n);
  for (int k = 0; k < p; ++k) X0 += theta(k) * basis[k];

  Eigen::JacobiSVD<Mat> svd(M, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  int rank = 0;
  const double cut = 1e-10 * (sv.size() ? sv(0) : 0.0);
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cut) ++rank;

  detail::ConeProblem prob;
  prob.X0 = X0;
  prob.S0 = stein(X0, f.F);
  for (int j = rank; j < p; ++j) {
    Mat N = Mat::Zero(n, n);
    for (int k = 0; k < p; ++k) N += svd.matrixV()(k, j) * basis[k];
    prob.Xk.push_back(N);
    prob.Sk.push_back(stein(N, f.F));
  }
  prob.x_shift = 1e-6 * (X0.norm() + 1e-3);

  CertificateCheck best;
  const detail::ConeOutcome out = detail::solve_cones(prob, cfg.lemma_max_iter, [&](const Eigen::VectorXd& x) {
    const Mat X = detail::eval_x(prob, x);
    best = verify_form(f, X);
    return best.valid;
  });
  const Mat X = detail::eval_x(prob, out.x);
  const CertificateCheck chk = verify_form(f, X);
  cert.X = X;
  cert.iterations = out.iterations;
  cert.residual_affine = chk.residual_affine;
  cert.lambda_min_X = chk.lambda_min_X;
  cert.lambda_min_lyap = chk.lambda_min_lyap;
  switch (out.state) {
    case detail::ConeOutcome::State::Found:
      cert.status = FeasibilityStatus::Feasible;
      break;
    case detail::ConeOutcome::State::Separated:
      cert.status = FeasibilityStatus::Infeasible;
      cert.note = prob.Xk.empty() ? "unique symmetric solution violates the cone conditions"
                                  : "affine set separated from the cones (gap " + fmt(out.gap) + ")";
      break;
    case detail::ConeOutcome::State::Stalled:
      cert.status = FeasibilityStatus::Inconclusive;
      cert.note = "projections stalled without a verified point (gap " + fmt(out.gap) + ")";
      break;
  }
  cert.note += (cert.note.empty() ? "" : "; ") + std::to_string(prob.Xk.size()) + "-dimensional solution set";
  return cert;
}

Mat dpr_block(const StateSpace& ss, const Mat& X) {
  const int n = ss.n(), m = ss.m();
  Mat b(n + m, n + m);
  b.topLeftCorner(n, n) = X - ss.A.transpose() * X * ss.A;
  b.topRightCorner(n, m) = ss.C.transpose() - ss.A.transpose() * X * ss.B;
  b.bottomLeftCorner(m, n) = b.topRightCorner(n, m).transpose();
  b.bottomRightCorner(m, m) = ss.D.transpose() + ss.D - ss.B.transpose() * X * ss.B;
  return b;
}

}  // namespace

CertificateCheck verify_dni_certificate(const StateSpace& ss, const Mat& X) {
  return verify_form(primal_form(ss), X);
}

CertificateCheck verify_dual_dni_certificate(const StateSpace& ss, const Mat& Y) {
  return verify_form(dual_form(ss), Y);
}

CertificateCheck verify_dpr_certificate(const StateSpace& ss, const Mat& X) {
  CertificateCheck c;
  if (X.rows() != ss.n() || X.cols() != ss.n()) return c;
  const Mat b = dpr_block(ss, X);
  c.lambda_min_X = sym_min_eig(X);
  c.lambda_min_lyap = sym_min_eig(b);
  const double xn = X.norm();
  c.valid = (X - X.transpose()).norm() <= 1e-10 * (1.0 + xn) && (ss.n() == 0 || c.lambda_min_X > 1e-10 * xn) &&
            c.lambda_min_lyap >= -kConeTol * (1.0 + b.norm());
  return c;
}

FeasibilityCertificate dni_lemma_check(const StateSpace& ss, const Config& cfg) {
  check_ni_preconditions(ss);
  if (ss.n() == 0) return solve_ni(ss, NiForm{}, cfg);
  return solve_ni(ss, primal_form(ss), cfg);
}

FeasibilityCertificate dual_dni_lemma_check(const StateSpace& ss, const Config& cfg) {
  check_ni_preconditions(ss);
  if (ss.n() == 0) return solve_ni(ss, NiForm{}, cfg);
  return solve_ni(ss, dual_form(ss), cfg);
}

FeasibilityCertificate dpr_lemma_check(const StateSpace& ss, const Config& cfg) {
  require_dt(ss);
  FeasibilityCertificate cert;
  const int n = ss.n(), m = ss.m();
  if (n == 0) {
    const Mat b = ss.D + ss.D.transpose();
    cert.X = Mat(0, 0);
    cert.lambda_min_lyap = sym_min_eig(b);
    const bool ok = cert.lambda_min_lyap >= -kConeTol * (1.0 + b.norm());
    cert.status = ok ? FeasibilityStatus::Feasible : FeasibilityStatus::Infeasible;
    cert.note = "static gain: decided on D + D^T";
    if (ok) {
      cert.L = Mat(0, 0);
      Eigen::SelfAdjointEigenSolver<Mat> es(b);
      cert.W = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    }
    return cert;
  }
  if (!is_minimal(ss)) throw Error(ErrorKind::NonMinimalRealization, "the realization is not minimal");
  for (cplx e : spectrum(ss)) {
    if (std::abs(e) > 1.0 + 1e-9) {
      cert.status = FeasibilityStatus::Infeasible;
      cert.note = "eigenvalue " + fmt(std::abs(e)) + " outside the unit disc";
      return cert;
    }
  }
  detail::ConeProblem prob;
  prob.X0 = Mat::Zero(n, n);
  prob.S0 = dpr_block(ss, prob.X0);
  for (const Mat& e : detail::symmetric_basis(n)) {
    prob.Xk.push_back(e);
    prob.Sk.push_back(dpr_block(ss, e) - prob.S0);
  }
  prob.x_shift = 1e-6 * (1.0 + prob.S0.norm());
  const detail::ConeOutcome out = detail::solve_cones(prob, cfg.lemma_max_iter, [&](const Eigen::VectorXd& x) {
    return verify_dpr_certificate(ss, detail::eval_x(prob, x)).valid;
  });
  cert.X = detail::eval_x(prob, out.x);
  const CertificateCheck chk = verify_dpr_certificate(ss, cert.X);
  cert.iterations = out.iterations;
  cert.lambda_min_X = chk.lambda_min_X;
  cert.lambda_min_lyap = chk.lambda_min_lyap;
  switch (out.state) {
    case detail::ConeOutcome::State::Found: {
      cert.status = FeasibilityStatus::Feasible;
      Eigen::SelfAdjointEigenSolver<Mat> es(dpr_block(ss, cert.X));
      const Mat r = es.eigenvalues().cwiseMax(0.0).cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
      cert.L = r.leftCols(n);
      cert.W = r.rightCols(m);
      break;
    }
    case detail::ConeOutcome::State::Separated:
      cert.status = FeasibilityStatus::Infeasible;
      cert.note = "block matrix separated from the cone (gap " + fmt(out.gap) + ")";
      break;
    case detail::ConeOutcome::State::Stalled:
      cert.status = FeasibilityStatus::Inconclusive;
      cert.note = "projections stalled without a verified point (gap " + fmt(out.gap) + ")";
      break;
  }
  return cert;
}

}  // namespace nipr
