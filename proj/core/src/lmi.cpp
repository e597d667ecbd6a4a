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

#include "lmi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <Eigen/Cholesky>
#include <Eigen/QR>

namespace nipr::detail {

std::vector<Mat> symmetric_basis(int n) {
  std::vector<Mat> out;
  const double r = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Mat e = Mat::Zero(n, n);
      if (i == j) {
        e(i, i) = 1.0;
      } else {
        e(i, j) = r;
        e(j, i) = r;
      }
      out.push_back(e);
    }
  return out;
}

Mat project_psd(const Mat& z, double shift) {
  if (z.size() == 0) return z;
  const Mat s = (z + z.transpose()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Mat> es(s);
  Eigen::VectorXd d = es.eigenvalues();
  for (int i = 0; i < d.size(); ++i) d(i) = std::max(d(i), shift);
  return es.eigenvectors() * d.asDiagonal() * es.eigenvectors().transpose();
}

Mat eval_x(const ConeProblem& p, const Eigen::VectorXd& x) {
  Mat out = p.X0;
  for (size_t k = 0; k < p.Xk.size(); ++k) out += x(static_cast<int>(k)) * p.Xk[k];
  return out;
}

Mat eval_s(const ConeProblem& p, const Eigen::VectorXd& x) {
  Mat out = p.S0;
  for (size_t k = 0; k < p.Sk.size(); ++k) out += x(static_cast<int>(k)) * p.Sk[k];
  return out;
}

namespace {

double neg_part(const Mat& z, double shift) {
  if (z.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Mat> es((z + z.transpose()) / 2.0, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double v = std::min(es.eigenvalues()(i) - shift, 0.0);
    s += v * v;
  }
  return std::sqrt(s);
}

Eigen::Map<const Eigen::VectorXd> as_vec(const Mat& m) { return {m.data(), m.size()}; }

}  // namespace

ConeOutcome dykstra(const ConeProblem& p, int max_iter, const std::function<bool(const Eigen::VectorXd&)>& accept) {
  ConeOutcome out;
  const int k = static_cast<int>(p.Xk.size());
  const int nx = static_cast<int>(p.X0.size()), ns = static_cast<int>(p.S0.size());
  out.x = Eigen::VectorXd::Zero(k);
  if (accept(out.x)) {
    out.state = ConeOutcome::State::Found;
    return out;
  }
  if (k == 0) return out;
  Mat J(nx + ns, k);
  for (int c = 0; c < k; ++c) {
    J.col(c).head(nx) = as_vec(p.Xk[c]);
    J.col(c).tail(ns) = as_vec(p.Sk[c]);
  }
  const Eigen::CompleteOrthogonalDecomposition<Mat> cod(J);
  const double scale = 1.0 + p.X0.norm() + p.S0.norm();
  const int n = static_cast<int>(p.X0.rows()), q = static_cast<int>(p.S0.rows());

  // Start from a point deep inside the cones so the first projection tends to land inside.
  Mat z1 = scale * Mat::Identity(n, n), z2 = scale * Mat::Identity(q, q);
  Mat q1 = Mat::Zero(n, n), q2 = Mat::Zero(q, q);
  for (int it = 1; it <= max_iter; ++it) {
    Eigen::VectorXd b(nx + ns);
    b.head(nx) = as_vec(Mat(z1 - p.X0));
    b.tail(ns) = as_vec(Mat(z2 - p.S0));
    out.x = cod.solve(b);
    out.iterations = it;
    if (accept(out.x)) {
      out.state = ConeOutcome::State::Found;
      return out;
    }
    const Mat x1 = eval_x(p, out.x), x2 = eval_s(p, out.x);
    out.gap = std::hypot(neg_part(x1, p.x_shift), neg_part(x2, 0.0)) / scale;
    const Mat y1 = project_psd(x1 + q1, p.x_shift), y2 = project_psd(x2 + q2, 0.0);
    q1 = x1 + q1 - y1;
    q2 = x2 + q2 - y2;
    z1 = y1;
    z2 = y2;
  }
  return out;
}

namespace {

// F1 = X(x)/sx - t I, F2 = S(x)/ss - t I, ball |x| < R.
struct Barrier {
  const ConeProblem& p;
  double sx, ss, R;
  int k;

  bool factor(const Eigen::VectorXd& y, Mat& i1, Mat& i2, double& logdet) const {
    const Eigen::VectorXd x = y.head(k);
    const double t = y(k);
    const double g = R * R - x.squaredNorm();
    if (!(g > 0.0)) return false;
    logdet = std::log(g);
    const Mat f1 = eval_x(p, x) / sx - t * Mat::Identity(p.X0.rows(), p.X0.rows());
    const Mat f2 = eval_s(p, x) / ss - t * Mat::Identity(p.S0.rows(), p.S0.rows());
    Eigen::LLT<Mat> l1(f1), l2(f2);
    if (l1.info() != Eigen::Success || l2.info() != Eigen::Success) return false;
    for (int i = 0; i < f1.rows(); ++i) logdet += 2.0 * std::log(l1.matrixL()(i, i));
    for (int i = 0; i < f2.rows(); ++i) logdet += 2.0 * std::log(l2.matrixL()(i, i));
    if (!std::isfinite(logdet)) return false;
    i1 = l1.solve(Mat::Identity(f1.rows(), f1.rows()));
    i2 = l2.solve(Mat::Identity(f2.rows(), f2.rows()));
    return true;
  }

  double value(const Eigen::VectorXd& y, double tau) const {
    Mat i1, i2;
    double ld = 0.0;
    if (!factor(y, i1, i2, ld)) return std::numeric_limits<double>::infinity();
    return -tau * y(k) - ld;
  }
};

}  // namespace

ConeOutcome barrier(const ConeProblem& p, const std::function<bool(const Eigen::VectorXd&)>& accept) {
  ConeOutcome out;
  const int k = static_cast<int>(p.Xk.size());
  const int n = static_cast<int>(p.X0.rows()), q = static_cast<int>(p.S0.rows());
  Barrier b{p, 1.0 + p.X0.norm(), 1.0 + p.S0.norm(), 0.0, k};
  b.R = 1e3 * b.sx;
  const double nu = n + q + 1.0;

  Eigen::VectorXd y = Eigen::VectorXd::Zero(k + 1);
  {
    auto lmin = [](const Mat& m) {
      return m.size() ? Eigen::SelfAdjointEigenSolver<Mat>(m, Eigen::EigenvaluesOnly).eigenvalues()(0) : 0.0;
    };
    y(k) = std::min(lmin(p.X0) / b.sx, lmin(p.S0) / b.ss) - 1.0;
  }
  // Derivative matrices of F1 and F2 in each coordinate of y.
  std::vector<Mat> d1(k + 1), d2(k + 1);
  for (int a = 0; a < k; ++a) {
    d1[a] = p.Xk[a] / b.sx;
    d2[a] = p.Sk[a] / b.ss;
  }
  d1[k] = -Mat::Identity(n, n);
  d2[k] = -Mat::Identity(q, q);

  double tau = 1.0;
  for (int outer = 0; outer < 60; ++outer) {
    for (int it = 0; it < 100; ++it) {
      ++out.iterations;
      Mat i1, i2;
      double ld = 0.0;
      if (!b.factor(y, i1, i2, ld)) break;
      const Eigen::VectorXd x = y.head(k);
      const double g = b.R * b.R - x.squaredNorm();
      std::vector<Mat> g1(k + 1), g2(k + 1);
      Eigen::VectorXd grad = Eigen::VectorXd::Zero(k + 1);
      Mat H = Mat::Zero(k + 1, k + 1);
      for (int a = 0; a <= k; ++a) {
        g1[a] = i1 * d1[a];
        g2[a] = i2 * d2[a];
        grad(a) = -g1[a].trace() - g2[a].trace();
      }
      grad(k) -= tau;
      for (int a = 0; a <= k; ++a)
        for (int c = a; c <= k; ++c) {
          H(a, c) = (g1[a] * g1[c]).trace() + (g2[a] * g2[c]).trace();
          H(c, a) = H(a, c);
        }
      for (int a = 0; a < k; ++a) {
        grad(a) += 2.0 * x(a) / g;
        for (int c = 0; c < k; ++c) H(a, c) += 4.0 * x(a) * x(c) / (g * g) + (a == c ? 2.0 / g : 0.0);
      }
      const Eigen::VectorXd dy = -H.ldlt().solve(grad);
      const double dec = -grad.dot(dy);
      if (!std::isfinite(dec) || dec / 2.0 < 1e-12) break;
      const double f0 = b.value(y, tau);
      double s = 1.0;
      int ls = 0;
      while (ls < 60 && b.value(y + s * dy, tau) > f0 - 0.25 * s * dec) {
        s *= 0.5;
        ++ls;
      }
      if (ls == 60) break;
      y += s * dy;
      out.x = y.head(k);
      if (y(k) > 0.0 && accept(out.x)) {
        out.state = ConeOutcome::State::Found;
        out.margin_bound = y(k) + nu / tau;
        return out;
      }
    }
    out.x = y.head(k);
    out.margin_bound = y(k) + nu / tau;
    if (accept(out.x)) {
      out.state = ConeOutcome::State::Found;
      return out;
    }
    if (out.margin_bound < -1e-9) {
      out.state = ConeOutcome::State::Separated;
      out.gap = -out.margin_bound;
      return out;
    }
    if (nu / tau < 1e-13) break;
    tau *= 8.0;
  }
  out.gap = std::max(0.0, -y(k));
  out.state = ConeOutcome::State::Stalled;
  return out;
}

ConeOutcome solve_cones(const ConeProblem& p, int max_iter,
                        const std::function<bool(const Eigen::VectorXd&)>& accept) {
  ConeOutcome d = dykstra(p, max_iter, accept);
  if (d.state == ConeOutcome::State::Found) return d;
  ConeOutcome b = barrier(p, accept);
  b.iterations += d.iterations;
  return b;
}

}  // namespace nipr::detail
