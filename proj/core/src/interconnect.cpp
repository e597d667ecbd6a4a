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

#include "nipr/interconnect.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "checks.hpp"
#include "nipr/analysis.hpp"
#include "nipr/error.hpp"

namespace nipr {

namespace {

Mat rows_of(const Mat& m, const std::vector<int>& idx) {
  Mat out(idx.size(), m.cols());
  for (size_t k = 0; k < idx.size(); ++k) out.row(k) = m.row(idx[k]);
  return out;
}

Mat cols_of(const Mat& m, const std::vector<int>& idx) {
  Mat out(m.rows(), idx.size());
  for (size_t k = 0; k < idx.size(); ++k) out.col(k) = m.col(idx[k]);
  return out;
}

std::vector<int> range(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i < hi; ++i) v.push_back(i);
  return v;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

bool is_stable(cplx l, Domain d) {
  return d == Domain::CT ? l.real() < -1e-10 * (1.0 + std::abs(l)) : std::abs(l) < 1.0 - 1e-10;
}

// Closes input in_int[k] onto output out_int[k]; ext_in / ext_out remain.
InterconnectResult close_loop(const StateSpace& g, const std::vector<int>& ext_in, const std::vector<int>& in_int,
                              const std::vector<int>& ext_out, const std::vector<int>& out_int) {
  const Mat Be = cols_of(g.B, ext_in), Bi = cols_of(g.B, in_int);
  const Mat Cz = rows_of(g.C, ext_out), Co = rows_of(g.C, out_int);
  const Mat Dze = cols_of(rows_of(g.D, ext_out), ext_in), Dzi = cols_of(rows_of(g.D, ext_out), in_int);
  const Mat Doe = cols_of(rows_of(g.D, out_int), ext_in), Doi = cols_of(rows_of(g.D, out_int), in_int);
  const int k = static_cast<int>(in_int.size());
  const Mat M = Mat::Identity(k, k) - Doi;
  InterconnectResult r;
  if (k > 0) {
    Eigen::JacobiSVD<Mat> svd(M);
    if (svd.singularValues()(k - 1) <= 1e-10 * (1.0 + Doi.norm()))
      throw Error(ErrorKind::IllPosed, "I - D_loop is singular; the interconnection is not well posed");
  }
  const Mat Mi = k > 0 ? Mat(M.inverse()) : Mat(0, 0);
  r.well_posed = true;
  r.system.domain = g.domain;
  r.system.A = g.A + Bi * Mi * Co;
  r.system.B = Be + Bi * Mi * Doe;
  r.system.C = Cz + Dzi * Mi * Co;
  r.system.D = Dze + Dzi * Mi * Doe;
  if (r.system.A.size() > 0) {
    Eigen::EigenSolver<Mat> es(r.system.A, false);
    for (int i = 0; i < es.eigenvalues().size(); ++i) r.closed_loop_spectrum.push_back(es.eigenvalues()(i));
  }
  std::sort(r.closed_loop_spectrum.begin(), r.closed_loop_spectrum.end(), [](cplx x, cplx y) {
    return x.real() != y.real() ? x.real() > y.real() : x.imag() > y.imag();
  });
  r.internally_stable = std::all_of(r.closed_loop_spectrum.begin(), r.closed_loop_spectrum.end(),
                                    [&](cplx l) { return is_stable(l, g.domain); });
  return r;
}

// [P I; I 0] when p_top_left, [0 I; I P] otherwise.
StateSpace wrapper(const StateSpace& p, bool p_top_left) {
  const int m = p.m(), n = p.n();
  StateSpace w;
  w.domain = p.domain;
  w.A = p.A;
  w.B = Mat::Zero(n, 2 * m);
  w.C = Mat::Zero(2 * m, n);
  w.D = Mat::Zero(2 * m, 2 * m);
  const Mat I = Mat::Identity(m, m);
  w.D.topRightCorner(m, m) = I;
  w.D.bottomLeftCorner(m, m) = I;
  if (p_top_left) {
    w.B.leftCols(m) = p.B;
    w.C.topRows(m) = p.C;
    w.D.topLeftCorner(m, m) = p.D;
  } else {
    w.B.rightCols(m) = p.B;
    w.C.bottomRows(m) = p.C;
    w.D.bottomRightCorner(m, m) = p.D;
  }
  return w;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

InterconnectResult redheffer_star(const StateSpace& s1, const StateSpace& s2, int a, int b) {
  s1.validate();
  s2.validate();
  if (s1.domain != s2.domain) throw Error(ErrorKind::DomainMismatch, "star product of CT and DT systems");
  const int m1 = s1.m(), m2 = s2.m();
  if (a <= 0 || b <= 0 || a > std::min(m1, m2) || b > std::min(m1, m2))
    throw Error(ErrorKind::DimensionMismatch, "partition sizes must satisfy 0 < a, b <= min(m1, m2)");
  const StateSpace g = append(s1, s2);
  // Inputs [u1, beta | alpha, u2], outputs [y1, alpha | beta, y2].
  const std::vector<int> ext_in = cat(range(0, m1 - b), range(m1 + a, m1 + m2));
  const std::vector<int> in_int = cat(range(m1 - b, m1), range(m1, m1 + a));
  const std::vector<int> ext_out = cat(range(0, m1 - a), range(m1 + b, m1 + m2));
  const std::vector<int> out_int = cat(range(m1, m1 + b), range(m1 - a, m1));
  return close_loop(g, ext_in, in_int, ext_out, out_int);
}

InterconnectResult redheffer_star(const PartitionedSystem& s1, const StateSpace& s2) {
  return redheffer_star(s1.sys, s2, s1.a, s1.b);
}

StateSpace sum_wrapper(const StateSpace& p) { return wrapper(p, true); }
StateSpace feedback_left_wrapper(const StateSpace& p) { return wrapper(p, false); }
StateSpace feedback_right_wrapper(const StateSpace& q) { return wrapper(q, true); }

InterconnectResult internal_stability(const StateSpace& P, const StateSpace& Q) {
  if (P.m() != Q.m()) throw Error(ErrorKind::DimensionMismatch, "P and Q must have the same size");
  if (P.domain != Q.domain) throw Error(ErrorKind::DomainMismatch, "P and Q must share a domain");
  return redheffer_star(feedback_left_wrapper(P), feedback_right_wrapper(Q), P.m(), P.m());
}

NiStabilityReport ni_stability_test(const RationalMatrix& P, const RationalMatrix& Q, const Config& cfg) {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::PreconditionViolated, what); };
  if (P.domain() != Domain::DT || Q.domain() != Domain::DT) fail("P and Q must be discrete-time");
  if (P.size() != Q.size()) throw Error(ErrorKind::DimensionMismatch, "P and Q must have the same size");
  if (!P.is_proper()) fail("P is not proper");
  if (!Q.is_proper()) fail("Q is not proper");
  for (const MatrixPole& p : poles(P)) {
    if (std::abs(p.location - 1.0) <= cfg.pole_band * 2.0 || std::abs(p.location + 1.0) <= cfg.pole_band * 2.0)
      fail("P has a pole at " + detail::fmt(p.location));
  }
  if (const ClassificationReport r = classify_dni(P, cfg); !r.verdict)
    fail("P is not D-NI: " + r.first_failure()->id + " (" + r.first_failure()->detail + ")");
  if (const ClassificationReport r = classify_dwsni(Q, cfg); !r.verdict)
    fail("Q is not D-WSNI: " + r.first_failure()->id + " (" + r.first_failure()->detail + ")");
  const Mat pm = P.try_eval(-1.0)->real();
  const Mat qm = Q.try_eval(-1.0)->real();
  const double pq = (pm * qm).norm();
  if (pq > 1e-7 * (1.0 + pm.norm() * qm.norm())) fail("P(-1)Q(-1) != 0: norm " + fmt(pq));
  if (!detail::is_psd(qm.cast<cplx>(), cfg.psd_tol))
    fail("Q(-1) is not PSD: minimum eigenvalue " + fmt(detail::min_eig(qm.cast<cplx>())));

  NiStabilityReport rep;
  rep.P1Q1 = (*P.try_eval(1.0) * *Q.try_eval(1.0)).real();
  Eigen::EigenSolver<Mat> es(rep.P1Q1, false);
  rep.lambda_bar = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const cplx l = es.eigenvalues()(i);
    rep.eigenvalues.push_back(l);
    if (std::abs(l.imag()) > 1e-8 * (1.0 + rep.P1Q1.norm()))
      fail("P(1)Q(1) has a non-real eigenvalue " + detail::fmt(l));
    rep.lambda_bar = std::max(rep.lambda_bar, l.real());
  }
  rep.stable_by_lambda = rep.lambda_bar < 1.0;
  const InterconnectResult ir = internal_stability(minimal_realization(P), minimal_realization(Q));
  rep.stable_by_state_space = ir.internally_stable;
  rep.closed_loop_spectrum = ir.closed_loop_spectrum;
  rep.agree = rep.stable_by_lambda == rep.stable_by_state_space;
  return rep;
}

StarClassReport star_class_preservation(const RationalMatrix& s1, const RationalMatrix& s2, int a, int b,
                                        const std::string& cls, const Config& cfg) {
  static const std::vector<std::string> allowed = {"dni", "dwsni", "dssni", "cni", "cwsni", "cssni"};
  if (std::find(allowed.begin(), allowed.end(), cls) == allowed.end())
    throw Error(ErrorKind::PreconditionViolated, "star class must be an NI class, got '" + cls + "'");
  StarClassReport rep;
  rep.cls = cls;
  const ClassificationReport r1 = classify(s1, cls, cfg), r2 = classify(s2, cls, cfg);
  rep.s1_in_class = r1.verdict;
  rep.s2_in_class = r2.verdict;
  const InterconnectResult ir = redheffer_star(minimal_realization(s1), minimal_realization(s2), a, b);
  rep.internally_stable = ir.internally_stable;
  rep.star = tf_of(ir.system);
  rep.star_report = classify(rep.star, cls, cfg);
  rep.preserved = rep.s1_in_class && rep.s2_in_class && rep.internally_stable && rep.star_report.verdict;
  const std::string star_v = rep.star_report.verdict ? "is " + cls : "is not " + cls;
  if (!rep.internally_stable) {
    rep.message = "interconnection is not internally stable; the star product " + star_v;
  } else if (rep.s1_in_class && rep.s2_in_class) {
    rep.message = rep.star_report.verdict ? "class preserved: the star product is " + cls
                                          : "counterexample: both factors are " + cls + " but the star product is not";
  } else {
    rep.message = std::string("mixed classes: ") + (rep.s1_in_class ? "" : "S1 is not " + cls + "; ") +
                  (rep.s2_in_class ? "" : "S2 is not " + cls + "; ") + "the star product " + star_v;
  }
  if (!rep.star_report.verdict) {
    const Condition* f = rep.star_report.first_failure();
    rep.message += " (" + f->id + ": " + f->detail + ")";
  }
  return rep;
}

}  // namespace nipr
