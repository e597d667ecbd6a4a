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

#include "nipr/rational.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <random>

#include "nipr/error.hpp"
#include "nipr/series.hpp"

namespace nipr {

const char* to_string(Domain d) { return d == Domain::CT ? "ct" : "dt"; }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleProximity: return "PoleProximity";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::MultiplicityTooHigh: return "MultiplicityTooHigh";
    case ErrorKind::DegenerateMap: return "DegenerateMap";
    case ErrorKind::ImproperInput: return "ImproperInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EigenvalueAtMinusOne: return "EigenvalueAtMinusOne";
    case ErrorKind::EigenvalueAtPlusOne: return "EigenvalueAtPlusOne";
    case ErrorKind::EigenvalueAtPlusMinusOne: return "EigenvalueAtPlusMinusOne";
    case ErrorKind::PoleAtMinusOne: return "PoleAtMinusOne";
    case ErrorKind::PoleAtPlusMinusOne: return "PoleAtPlusMinusOne";
    case ErrorKind::CancellationFailure: return "CancellationFailure";
    case ErrorKind::AsymmetricD: return "AsymmetricD";
    case ErrorKind::AsymmetricOffset: return "AsymmetricOffset";
    case ErrorKind::EpsilonSearchFailed: return "EpsilonSearchFailed";
    case ErrorKind::NonMinimalRealization: return "NonMinimalRealization";
    case ErrorKind::IllPosed: return "IllPosed";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// RationalScalar

RationalScalar::RationalScalar(double c) : num_(Polynomial::constant(c)), den_(Polynomial::constant(1.0)) {}

RationalScalar::RationalScalar(Polynomial num, Polynomial den, bool reduce)
    : num_(std::move(num)), den_(std::move(den)) {
  normalize(reduce);
}

namespace {

double abs_poly_at(const Polynomial& p, double r) {
  double acc = 0.0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * r + std::abs(*it);
  return acc;
}

// Cancels denominator roots at which the numerator vanishes.
void cancel_common_roots(Polynomial& num, Polynomial& den) {
  bool changed = true;
  while (changed && den.degree() > 0 && !num.is_zero() && num.degree() > 0) {
    changed = false;
    for (const Root& r : clustered_roots(den)) {
      const double mag = abs_poly_at(num, std::abs(r.value));
      if (std::abs(num.eval(r.value)) > 1e-9 * mag) continue;
      if (r.value.imag() < 0.0) continue;
      const Polynomial f = r.value.imag() == 0.0
                               ? Polynomial{-r.value.real(), 1.0}
                               : Polynomial{std::norm(r.value), -2.0 * r.value.real(), 1.0};
      if (f.degree() > num.degree()) continue;
      num = divmod(num, f).quotient;
      den = divmod(den, f).quotient;
      changed = true;
      break;
    }
  }
}

}  // namespace

void RationalScalar::normalize(bool reduce) {
  if (den_.is_zero()) throw Error(ErrorKind::DegenerateMap, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial::constant(1.0);
    return;
  }
  if (reduce && den_.degree() > 0 && num_.degree() > 0) {
    const Polynomial g = approx_gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = divmod(num_, g).quotient;
      den_ = divmod(den_, g).quotient;
    }
    cancel_common_roots(num_, den_);
  }
  const double lead = den_.leading();
  num_ *= 1.0 / lead;
  den_ *= 1.0 / lead;
  std::vector<double> d = den_.coeffs();
  d.back() = 1.0;
  den_ = Polynomial(std::move(d));
}

int RationalScalar::relative_degree() const {
  if (num_.is_zero()) return INT_MAX / 2;
  return den_.degree() - num_.degree();
}

std::optional<cplx> RationalScalar::try_eval(cplx p) const {
  if (num_.is_zero()) return cplx(0.0);
  const cplx d = den_.eval(p);
  const double mag = abs_poly_at(den_, std::abs(p));
  if (std::abs(d) <= 1e-12 * mag) return std::nullopt;
  return num_.eval(p) / d;
}

cplx RationalScalar::eval(cplx p) const {
  auto v = try_eval(p);
  if (!v) throw Error(ErrorKind::PoleProximity, "evaluation point is within tolerance of a pole");
  return *v;
}

double RationalScalar::at_infinity() const {
  if (!is_proper()) throw Error(ErrorKind::ImproperInput, "value at infinity of an improper function");
  if (num_.is_zero() || num_.degree() < den_.degree()) return 0.0;
  return num_.leading() / den_.leading();
}

RationalScalar RationalScalar::operator-() const { return RationalScalar(-num_, den_, false); }

RationalScalar operator+(const RationalScalar& a, const RationalScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalScalar(a.num_ + b.num_, a.den_, true);
  return RationalScalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, true);
}

RationalScalar operator-(const RationalScalar& a, const RationalScalar& b) { return a + (-b); }

RationalScalar operator*(const RationalScalar& a, const RationalScalar& b) {
  if (a.is_zero() || b.is_zero()) return RationalScalar(0.0);
  return RationalScalar(a.num_ * b.num_, a.den_ * b.den_, true);
}

RationalScalar operator/(const RationalScalar& a, const RationalScalar& b) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateMap, "division by the zero function");
  return RationalScalar(a.num_ * b.den_, a.den_ * b.num_, true);
}

// ---------------------------------------------------------------------------
// RationalMatrix

RationalMatrix::RationalMatrix(int m, Domain domain)
    : m_(m), domain_(domain), e_(static_cast<size_t>(m) * m, RationalScalar(0.0)) {}

RationalMatrix::RationalMatrix(int m, Domain domain, std::vector<RationalScalar> entries)
    : m_(m), domain_(domain), e_(std::move(entries)) {
  if (static_cast<int>(e_.size()) != m * m)
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match m*m");
}

RationalMatrix RationalMatrix::constant(const Mat& k, Domain domain) {
  if (k.rows() != k.cols()) throw Error(ErrorKind::DimensionMismatch, "constant matrix must be square");
  RationalMatrix r(static_cast<int>(k.rows()), domain);
  for (int i = 0; i < r.m_; ++i)
    for (int j = 0; j < r.m_; ++j) r(i, j) = RationalScalar(k(i, j));
  return r;
}

RationalMatrix RationalMatrix::identity(int m, Domain domain) {
  return constant(Mat::Identity(m, m), domain);
}

RationalMatrix RationalMatrix::scalar(const RationalScalar& g, Domain domain) {
  return RationalMatrix(1, domain, {g});
}

RationalMatrix RationalMatrix::scaled(const RationalScalar& g, const Mat& k, Domain domain) {
  RationalMatrix r(static_cast<int>(k.rows()), domain);
  for (int i = 0; i < r.m_; ++i)
    for (int j = 0; j < r.m_; ++j)
      r(i, j) = k(i, j) == 0.0 ? RationalScalar(0.0) : RationalScalar(k(i, j)) * g;
  return r;
}

bool RationalMatrix::is_proper() const {
  return std::all_of(e_.begin(), e_.end(), [](const RationalScalar& g) { return g.is_proper(); });
}

bool RationalMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const RationalScalar& g) { return g.is_zero(); });
}

Mat RationalMatrix::at_infinity() const {
  Mat out(m_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) out(i, j) = (*this)(i, j).at_infinity();
  return out;
}

std::optional<CMat> RationalMatrix::try_eval(cplx p) const {
  CMat out(m_, m_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < m_; ++j) {
      auto v = (*this)(i, j).try_eval(p);
      if (!v) return std::nullopt;
      out(i, j) = *v;
    }
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix r(m_, domain_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j) r(i, j) = (*this)(j, i);
  return r;
}

RationalMatrix RationalMatrix::reflect() const {
  RationalMatrix r(m_, domain_);
  for (size_t k = 0; k < e_.size(); ++k)
    r.e_[k] = RationalScalar(e_[k].num().reflect(), e_[k].den().reflect(), false);
  return r;
}

RationalMatrix RationalMatrix::invert_argument() const {
  RationalMatrix r(m_, domain_);
  for (size_t k = 0; k < e_.size(); ++k) {
    const RationalScalar& g = e_[k];
    if (g.is_zero()) continue;
    const int n = std::max(g.num().degree(), g.den().degree());
    r.e_[k] = RationalScalar(g.num().reversed(n), g.den().reversed(n), false);
  }
  return r;
}

RationalMatrix RationalMatrix::with_domain(Domain d) const {
  RationalMatrix r = *this;
  r.domain_ = d;
  return r;
}

namespace {

void check_compatible(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "matrix sizes differ");
  if (a.domain() != b.domain()) throw Error(ErrorKind::DomainMismatch, "matrix domains differ");
}

}  // namespace

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  check_compatible(a, b);
  RationalMatrix r(a.m_, a.domain_);
  for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] + b.e_[k];
  return r;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  check_compatible(a, b);
  RationalMatrix r(a.m_, a.domain_);
  for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = a.e_[k] - b.e_[k];
  return r;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  check_compatible(a, b);
  const int m = a.m_;
  RationalMatrix r(m, a.domain_);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      RationalScalar acc(0.0);
      for (int k = 0; k < m; ++k) acc = acc + a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

RationalMatrix operator*(const RationalScalar& g, const RationalMatrix& a) {
  RationalMatrix r(a.m_, a.domain_);
  for (size_t k = 0; k < a.e_.size(); ++k) r.e_[k] = g * a.e_[k];
  return r;
}

// ---------------------------------------------------------------------------
// Operations

CMat eval(const RationalMatrix& r, cplx p) {
  auto v = r.try_eval(p);
  if (!v) throw Error(ErrorKind::PoleProximity, "evaluation point is within tolerance of a pole");
  return *v;
}

std::vector<MatrixPole> poles(const RationalMatrix& r) {
  std::vector<MatrixPole> upper;  // Im >= 0 representatives
  for (const RationalScalar& g : r.entries()) {
    if (g.is_zero() || g.den().degree() <= 0) continue;
    for (const Root& root : clustered_roots(g.den())) {
      if (root.value.imag() < 0.0) continue;
      bool merged = false;
      for (MatrixPole& mp : upper) {
        const double rad = cluster_radius(std::max({2, mp.multiplicity, root.multiplicity}));
        if (std::abs(mp.location - root.value) <= rad * (1.0 + std::abs(root.value))) {
          mp.multiplicity = std::max(mp.multiplicity, root.multiplicity);
          merged = true;
          break;
        }
      }
      if (!merged) upper.push_back({root.value, root.multiplicity});
    }
  }
  std::vector<MatrixPole> out;
  for (const MatrixPole& mp : upper) {
    out.push_back(mp);
    if (mp.location.imag() > 0.0) out.push_back({std::conj(mp.location), mp.multiplicity});
  }
  std::sort(out.begin(), out.end(), [](const MatrixPole& a, const MatrixPole& b) {
    if (a.location.real() != b.location.real()) return a.location.real() < b.location.real();
    return a.location.imag() < b.location.imag();
  });
  return out;
}

PoleDatum residues_at(const RationalMatrix& r, cplx p) {
  const int m = r.size();
  PoleDatum out;
  out.location = p;
  out.residue_A1 = CMat::Zero(m, m);
  out.quad_residue_A2 = CMat::Zero(m, m);
  int kmax = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const RationalScalar& g = r(i, j);
      if (g.is_zero()) continue;
      const int k = pole_order_at(g, p);
      kmax = std::max(kmax, k);
      if (k > 2) continue;
      if (k == 0) continue;
      Laurent l = laurent_at(g, p, k, 2);
      if (k == 2) {
        out.quad_residue_A2(i, j) = l.c[0];
        out.residue_A1(i, j) = l.c[1];
      } else {
        out.residue_A1(i, j) = l.c[0];
      }
    }
  }
  if (kmax == 0) throw Error(ErrorKind::PreconditionViolated, "residues requested at a point that is not a pole");
  if (kmax > 2)
    throw Error(ErrorKind::MultiplicityTooHigh, "pole multiplicity " + std::to_string(kmax) + " exceeds 2");
  out.multiplicity = kmax;
  const cplx I(0.0, 1.0);
  out.normalized_K0 = r.domain() == Domain::CT ? CMat(I * out.residue_A1) : CMat((I / p) * out.residue_A1);
  return out;
}

InfinityExpansion infinity_expansion(const RationalMatrix& r) {
  const int m = r.size();
  InfinityExpansion out;
  out.proper_part = RationalMatrix(m, r.domain());
  int k = 0;
  std::vector<Polynomial> quot(static_cast<size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const RationalScalar& g = r(i, j);
      if (g.is_zero()) continue;
      PolyDivision d = divmod(g.num(), g.den());
      quot[i * m + j] = d.quotient;
      k = std::max(k, d.quotient.degree());
      out.proper_part(i, j) = RationalScalar(d.remainder, g.den(), false) + RationalScalar(d.quotient[0]);
    }
  }
  for (int deg = 1; deg <= k; ++deg) {
    Mat a = Mat::Zero(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) a(i, j) = quot[i * m + j][deg];
    out.poly_coeffs.push_back(a);
  }
  return out;
}

RationalMatrix mobius_substitute(const RationalMatrix& r, double a, double b, double c, double d,
                                 MapIntent intent) {
  const double det = a * d - b * c;
  if (std::abs(det) <= 1e-12 * (std::abs(a * d) + std::abs(b * c)) || det == 0.0)
    throw Error(ErrorKind::DegenerateMap, "ad - bc vanishes");
  Domain dom = r.domain();
  if (intent == MapIntent::FlipDomain) dom = dom == Domain::CT ? Domain::DT : Domain::CT;
  RationalMatrix out(r.size(), dom);
  for (int i = 0; i < r.size(); ++i) {
    for (int j = 0; j < r.size(); ++j) {
      const RationalScalar& g = r(i, j);
      if (g.is_zero()) continue;
      const int n = std::max(g.num().degree(), g.den().degree());
      out(i, j) = RationalScalar(mobius_numerator(g.num(), a, b, c, d, n),
                                 mobius_numerator(g.den(), a, b, c, d, n), true);
    }
  }
  return out;
}

RationalMatrix cayley_dt_to_ct(const RationalMatrix& g) {
  if (g.domain() != Domain::DT) throw Error(ErrorKind::DomainMismatch, "expected a discrete-time matrix");
  return mobius_substitute(g, 1.0, 1.0, -1.0, 1.0, MapIntent::FlipDomain);
}

RationalMatrix cayley_ct_to_dt(const RationalMatrix& g) {
  if (g.domain() != Domain::CT) throw Error(ErrorKind::DomainMismatch, "expected a continuous-time matrix");
  return mobius_substitute(g, 1.0, -1.0, 1.0, 1.0, MapIntent::FlipDomain);
}

namespace {

// |n1 d2 - n2 d1| relative to the operand scale.
double scalar_distance(const RationalScalar& x, const RationalScalar& y) {
  if (x.is_zero() && y.is_zero()) return 0.0;
  const Polynomial a = x.num() * y.den();
  const Polynomial b = y.num() * x.den();
  const size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  double diff = 0.0;
  double scale = 0.0;
  for (size_t k = 0; k < n; ++k) {
    diff = std::max(diff, std::abs(a[static_cast<int>(k)] - b[static_cast<int>(k)]));
    scale = std::max({scale, std::abs(a[static_cast<int>(k)]), std::abs(b[static_cast<int>(k)])});
  }
  return scale == 0.0 ? 0.0 : diff / scale;
}

}  // namespace

bool is_symmetric(const RationalMatrix& r, double tol) {
  for (int i = 0; i < r.size(); ++i)
    for (int j = i + 1; j < r.size(); ++j)
      if (scalar_distance(r(i, j), r(j, i)) > tol) return false;
  return true;
}

double hermitian_defect(const RationalMatrix& r, cplx p) {
  const CMat v = eval(r, p);
  return (v - v.adjoint()).norm();
}

double coefficient_distance(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (size_t k = 0; k < a.entries().size(); ++k)
    d = std::max(d, scalar_distance(a.entries()[k], b.entries()[k]));
  return d;
}

double evaluation_distance(const RationalMatrix& a, const RationalMatrix& b, const std::vector<cplx>& points) {
  double d = 0.0;
  for (cplx p : points) {
    auto va = a.try_eval(p);
    auto vb = b.try_eval(p);
    if (!va || !vb) continue;
    const double scale = std::max(va->norm(), vb->norm());
    if (scale == 0.0) continue;
    d = std::max(d, (*va - *vb).norm() / scale);
  }
  return d;
}

bool full_normal_rank(const RationalMatrix& r) {
  const int m = r.size();
  if (m == 0) return true;
  // Fast path: a clearly nonsingular sample settles it.
  std::mt19937_64 rng(0x5eedULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 3; ++t) {
    const cplx p(u(rng) * 2.0, u(rng) * 2.0);
    auto v = r.try_eval(p);
    if (!v) continue;
    double bound = 1.0;
    for (int i = 0; i < m; ++i) bound *= v->row(i).norm();
    if (bound > 0.0 && std::abs(v->determinant()) > 1e-6 * bound) return true;
  }
  // Row-cleared polynomial matrix P with det P = det R * prod(row denominators).
  std::vector<Polynomial> p(static_cast<size_t>(m) * m);
  int degree_bound = 0;
  for (int i = 0; i < m; ++i) {
    int row_max = 0;
    for (int j = 0; j < m; ++j) {
      Polynomial acc = r(i, j).num();
      for (int k = 0; k < m; ++k)
        if (k != j) acc = acc * r(i, k).den();
      p[i * m + j] = acc;
      row_max = std::max(row_max, acc.degree());
    }
    degree_bound += row_max;
  }
  // A nonzero polynomial of degree <= D cannot vanish at D + 1 distinct points.
  const int npts = degree_bound + 1;
  double best = 0.0;
  for (int l = 0; l < npts; ++l) {
    const double ang = 2.0 * M_PI * (l + 0.5) / npts;
    const cplx x = std::polar(1.0, ang);
    CMat v(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) v(i, j) = p[i * m + j].eval(x);
    double bound = 1.0;
    for (int i = 0; i < m; ++i) bound *= v.row(i).norm();
    if (bound == 0.0) continue;
    best = std::max(best, std::abs(v.determinant()) / bound);
  }
  return best > 1e-10;
}

}  // namespace nipr
