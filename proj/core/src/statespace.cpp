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

#include "nipr/statespace.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "nipr/error.hpp"

namespace nipr {

StateSpace StateSpace::static_gain(const Mat& d, Domain domain) {
  StateSpace ss;
  const auto m = d.rows();
  ss.A = Mat(0, 0);
  ss.B = Mat(0, m);
  ss.C = Mat(m, 0);
  ss.D = d;
  ss.domain = domain;
  return ss;
}

void StateSpace::validate() const {
  const auto nn = A.rows();
  const auto mm = D.rows();
  if (A.cols() != nn || B.rows() != nn || C.cols() != nn || D.cols() != mm || B.cols() != mm ||
      C.rows() != mm)
    throw Error(ErrorKind::DimensionMismatch, "inconsistent state-space block sizes");
}

CMat eval(const StateSpace& ss, cplx p) {
  const int n = ss.n();
  CMat out = ss.D.cast<cplx>();
  if (n == 0) return out;
  const CMat M = p * CMat::Identity(n, n) - ss.A.cast<cplx>();
  Eigen::PartialPivLU<CMat> lu(M);
  const double scale = 1.0 + std::abs(p) + ss.A.norm();
  if (std::abs(lu.determinant()) <= std::pow(1e-12 * scale, n))
    throw Error(ErrorKind::PoleProximity, "evaluation point is an eigenvalue of A");
  out += ss.C.cast<cplx>() * lu.solve(ss.B.cast<cplx>());
  return out;
}

RationalMatrix tf_of(const StateSpace& ss) {
  ss.validate();
  const int n = ss.n();
  const int m = ss.m();
  if (n == 0) return RationalMatrix::constant(ss.D, ss.domain);
  // adj(sI - A) = sum_{k=1..n} M_k s^(n-k), det(sI - A) = sum c_j s^j.
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  std::vector<Mat> M(n + 1);
  Mat prev = Mat::Zero(n, n);
  for (int k = 1; k <= n; ++k) {
    M[k] = ss.A * prev + c[n - k + 1] * Mat::Identity(n, n);
    c[n - k] = -(ss.A * M[k]).trace() / k;
    prev = M[k];
  }
  const Polynomial den(c);
  std::vector<Mat> CMB(n + 1);
  for (int k = 1; k <= n; ++k) CMB[k] = ss.C * M[k] * ss.B;
  RationalMatrix r(m, ss.domain);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<double> num(n + 1, 0.0);
      for (int k = 1; k <= n; ++k) num[n - k] = CMB[k](i, j);
      for (int d = 0; d <= n; ++d) num[d] += ss.D(i, j) * c[d];
      Polynomial p(num);
      const double scale = std::max(p.norm_inf(), std::abs(ss.D(i, j)) * den.norm_inf());
      p = p.trimmed(1e-13, scale);
      r(i, j) = RationalScalar(p, den, true);
    }
  }
  return r;
}

std::vector<cplx> spectrum(const StateSpace& ss) {
  if (ss.n() == 0) return {};
  Eigen::EigenSolver<Mat> es(ss.A, false);
  std::vector<cplx> out(es.eigenvalues().data(), es.eigenvalues().data() + ss.n());
  std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

namespace {

// Columns of an orthonormal basis for range(W) with singular values above tol.
Mat orth(const Mat& W, double tol) {
  if (W.cols() == 0 || W.rows() == 0) return Mat(W.rows(), 0);
  Eigen::JacobiSVD<Mat> svd(W, Eigen::ComputeThinU);
  int r = 0;
  for (int k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) > tol) ++r;
  return svd.matrixU().leftCols(r);
}

// Orthonormal basis of the controllable subspace of (A, B).
Mat controllable_basis(const Mat& A, const Mat& B, double rel) {
  const int n = static_cast<int>(A.rows());
  const double scale = std::max({A.norm(), B.norm(), 1e-300});
  const double tol = rel * scale;
  Mat V = orth(B, tol);
  Mat frontier = V;
  while (V.cols() < n && frontier.cols() > 0) {
    Mat W = A * frontier;
    W -= V * (V.transpose() * W);
    W -= V * (V.transpose() * W);
    Mat add = orth(W, tol);
    if (add.cols() == 0) break;
    Mat next(n, V.cols() + add.cols());
    next << V, add;
    V = next;
    frontier = add;
  }
  return V;
}

StateSpace project(const StateSpace& ss, const Mat& V) {
  StateSpace out;
  out.A = V.transpose() * ss.A * V;
  out.B = V.transpose() * ss.B;
  out.C = ss.C * V;
  out.D = ss.D;
  out.domain = ss.domain;
  return out;
}

}  // namespace

StateSpace balance(const StateSpace& ss) {
  const int n = ss.n();
  if (n == 0) return ss;
  StateSpace out = ss;
  for (int sweep = 0; sweep < 20; ++sweep) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        c += std::abs(out.A(k, i));
        r += std::abs(out.A(i, k));
      }
      c += out.C.col(i).cwiseAbs().sum();
      r += out.B.row(i).cwiseAbs().sum();
      if (c == 0.0 || r == 0.0) continue;
      double f = 1.0;
      const double g = r / 2.0;
      const double s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      const double g2 = r * 2.0;
      while (c >= g2) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        changed = true;
        out.A.col(i) *= f;
        out.A.row(i) /= f;
        out.C.col(i) *= f;
        out.B.row(i) /= f;
      }
    }
    if (!changed) break;
  }
  return out;
}

int controllable_dimension(const Mat& A, const Mat& B, double tol) {
  if (A.rows() == 0) return 0;
  return static_cast<int>(controllable_basis(A, B, tol).cols());
}

int observable_dimension(const Mat& A, const Mat& C, double tol) {
  if (A.rows() == 0) return 0;
  return static_cast<int>(controllable_basis(A.transpose(), C.transpose(), tol).cols());
}

bool is_minimal(const StateSpace& ss, double tol) {
  if (ss.n() == 0) return true;
  const StateSpace b = balance(ss);
  return controllable_dimension(b.A, b.B, tol) == ss.n() && observable_dimension(b.A, b.C, tol) == ss.n();
}

StateSpace reduce_to_minimal(const StateSpace& ss) {
  if (ss.n() == 0) return ss;
  StateSpace cur = balance(ss);
  cur = project(cur, controllable_basis(cur.A, cur.B, kRankTol));
  if (cur.n() == 0) return StateSpace::static_gain(ss.D, ss.domain);
  cur = balance(cur);
  cur = project(cur, controllable_basis(cur.A.transpose(), cur.C.transpose(), kRankTol));
  if (cur.n() == 0) return StateSpace::static_gain(ss.D, ss.domain);
  return cur;
}

StateSpace append(const StateSpace& a, const StateSpace& b) {
  if (a.domain != b.domain) throw Error(ErrorKind::DomainMismatch, "cannot append systems of different domains");
  StateSpace out;
  const int n = a.n() + b.n();
  const int ma = a.m(), mb = b.m();
  out.A = Mat::Zero(n, n);
  out.B = Mat::Zero(n, ma + mb);
  out.C = Mat::Zero(ma + mb, n);
  out.D = Mat::Zero(ma + mb, ma + mb);
  out.A.topLeftCorner(a.n(), a.n()) = a.A;
  out.A.bottomRightCorner(b.n(), b.n()) = b.A;
  out.B.topLeftCorner(a.n(), ma) = a.B;
  out.B.bottomRightCorner(b.n(), mb) = b.B;
  out.C.topLeftCorner(ma, a.n()) = a.C;
  out.C.bottomRightCorner(mb, b.n()) = b.C;
  out.D.topLeftCorner(ma, ma) = a.D;
  out.D.bottomRightCorner(mb, mb) = b.D;
  out.domain = a.domain;
  return out;
}

namespace {

StateSpace gilbert(const RationalMatrix& sp, const std::vector<MatrixPole>& ps, const Mat& D) {
  const int m = sp.size();
  std::vector<Mat> As, Bs, Cs;
  for (const MatrixPole& mp : ps) {
    const cplx p = mp.location;
    if (p.imag() < 0.0) continue;
    const PoleDatum pd = residues_at(sp, p);
    const CMat& R = pd.residue_A1;
    Eigen::JacobiSVD<CMat> svd(R, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const double smax = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
    int r = 0;
    for (int k = 0; k < svd.singularValues().size(); ++k)
      if (svd.singularValues()(k) > kRankTol * smax) ++r;
    if (r == 0) continue;
    Vec sq = svd.singularValues().head(r).cwiseSqrt();
    const CMat L = svd.matrixU().leftCols(r) * sq.asDiagonal();
    const CMat Mm = sq.asDiagonal() * svd.matrixV().leftCols(r).adjoint();
    if (p.imag() == 0.0) {
      As.push_back(p.real() * Mat::Identity(r, r));
      Bs.push_back(Mm.real());
      Cs.push_back(L.real());
    } else {
      const double a = p.real(), b = p.imag();
      Mat A = Mat::Zero(2 * r, 2 * r);
      A.topLeftCorner(r, r) = a * Mat::Identity(r, r);
      A.bottomRightCorner(r, r) = a * Mat::Identity(r, r);
      A.topRightCorner(r, r) = -b * Mat::Identity(r, r);
      A.bottomLeftCorner(r, r) = b * Mat::Identity(r, r);
      Mat B(2 * r, m);
      B << std::sqrt(2.0) * Mm.real(), std::sqrt(2.0) * Mm.imag();
      Mat C(m, 2 * r);
      C << std::sqrt(2.0) * L.real(), -std::sqrt(2.0) * L.imag();
      As.push_back(A);
      Bs.push_back(B);
      Cs.push_back(C);
    }
  }
  StateSpace out = StateSpace::static_gain(D, sp.domain());
  for (size_t k = 0; k < As.size(); ++k) {
    const int n0 = out.n(), nk = static_cast<int>(As[k].rows());
    Mat A = Mat::Zero(n0 + nk, n0 + nk);
    A.topLeftCorner(n0, n0) = out.A;
    A.bottomRightCorner(nk, nk) = As[k];
    Mat B(n0 + nk, m);
    B << out.B, Bs[k];
    Mat C(m, n0 + nk);
    C << out.C, Cs[k];
    out.A = A;
    out.B = B;
    out.C = C;
  }
  return out;
}

// Least common multiple of the denominators in column j, from clustered roots.
Polynomial column_lcm(const RationalMatrix& sp, int j) {
  std::vector<Root> acc;
  for (int i = 0; i < sp.size(); ++i) {
    const RationalScalar& g = sp(i, j);
    if (g.is_zero() || g.den().degree() <= 0) continue;
    for (const Root& r : clustered_roots(g.den())) {
      bool merged = false;
      for (Root& a : acc) {
        const double rad = cluster_radius(std::max({2, a.multiplicity, r.multiplicity}));
        if (std::abs(a.value - r.value) <= rad * (1.0 + std::abs(r.value))) {
          a.multiplicity = std::max(a.multiplicity, r.multiplicity);
          merged = true;
          break;
        }
      }
      if (!merged) acc.push_back(r);
    }
  }
  std::vector<cplx> rs;
  for (const Root& r : acc)
    for (int k = 0; k < r.multiplicity; ++k) rs.push_back(r.value);
  return Polynomial::from_roots(rs);
}

StateSpace column_companion(const RationalMatrix& sp, const Mat& D) {
  const int m = sp.size();
  StateSpace out = StateSpace::static_gain(D, sp.domain());
  for (int j = 0; j < m; ++j) {
    const Polynomial d = column_lcm(sp, j);
    const int k = d.degree();
    if (k <= 0) continue;
    Mat A = Mat::Zero(k, k);
    for (int r = 0; r + 1 < k; ++r) A(r, r + 1) = 1.0;
    for (int c = 0; c < k; ++c) A(k - 1, c) = -d[c];
    Mat B = Mat::Zero(k, m);
    B(k - 1, j) = 1.0;
    Mat C = Mat::Zero(m, k);
    for (int i = 0; i < m; ++i) {
      const RationalScalar& g = sp(i, j);
      if (g.is_zero()) continue;
      const Polynomial q = divmod(d, g.den()).quotient;
      const Polynomial n = g.num() * q;
      for (int c = 0; c < k; ++c) C(i, c) = n[c];
    }
    const int n0 = out.n();
    Mat Ab = Mat::Zero(n0 + k, n0 + k);
    Ab.topLeftCorner(n0, n0) = out.A;
    Ab.bottomRightCorner(k, k) = A;
    Mat Bb(n0 + k, m);
    Bb << out.B, B;
    Mat Cb(m, n0 + k);
    Cb << out.C, C;
    out.A = Ab;
    out.B = Bb;
    out.C = Cb;
  }
  return out;
}

}  // namespace

StateSpace minimal_realization(const RationalMatrix& r) {
  if (!r.is_proper()) throw Error(ErrorKind::ImproperInput, "realization requires a proper matrix");
  const int m = r.size();
  const Mat D = r.at_infinity();
  RationalMatrix sp(m, r.domain());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sp(i, j) = r(i, j) - RationalScalar(D(i, j));
  if (sp.is_zero()) return StateSpace::static_gain(D, r.domain());
  const std::vector<MatrixPole> ps = poles(sp);
  const bool simple = std::all_of(ps.begin(), ps.end(), [](const MatrixPole& p) { return p.multiplicity == 1; });
  if (simple) return gilbert(sp, ps, D);
  return reduce_to_minimal(column_companion(sp, D));
}

StateSpace cayley_ss(const StateSpace& ss) {
  ss.validate();
  const int n = ss.n();
  StateSpace out;
  out.D = ss.D;
  if (ss.domain == Domain::DT) {
    out.domain = Domain::CT;
    if (n == 0) return StateSpace::static_gain(ss.D, Domain::CT);
    for (cplx l : spectrum(ss))
      if (std::abs(l + 1.0) <= 1e-9 * (1.0 + std::abs(l)))
        throw Error(ErrorKind::EigenvalueAtMinusOne, "A has an eigenvalue at -1");
    const Mat I = Mat::Identity(n, n);
    Eigen::PartialPivLU<Mat> lu(ss.A + I);
    const Mat inv = lu.inverse();
    out.A = inv * (ss.A - I);
    out.B = std::sqrt(2.0) * inv * ss.B;
    out.C = std::sqrt(2.0) * ss.C * inv;
    out.D = ss.D - ss.C * inv * ss.B;
  } else {
    out.domain = Domain::DT;
    if (n == 0) return StateSpace::static_gain(ss.D, Domain::DT);
    for (cplx l : spectrum(ss))
      if (std::abs(l - 1.0) <= 1e-9 * (1.0 + std::abs(l)))
        throw Error(ErrorKind::EigenvalueAtPlusOne, "A has an eigenvalue at +1");
    const Mat I = Mat::Identity(n, n);
    Eigen::PartialPivLU<Mat> lu(I - ss.A);
    const Mat inv = lu.inverse();
    out.A = (I + ss.A) * inv;
    out.B = std::sqrt(2.0) * inv * ss.B;
    out.C = std::sqrt(2.0) * ss.C * inv;
    out.D = ss.D + ss.C * inv * ss.B;
  }
  return out;
}

}  // namespace nipr
