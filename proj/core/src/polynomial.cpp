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

#include "nipr/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <unsupported/Eigen/Polynomials>

#include "nipr/error.hpp"

namespace nipr {

Polynomial::Polynomial(std::initializer_list<double> c) : c_(c) { strip(); }

Polynomial::Polynomial(std::vector<double> c) : c_(std::move(c)) { strip(); }

Polynomial Polynomial::constant(double c) { return Polynomial(std::vector<double>{c}); }

Polynomial Polynomial::monomial(int degree, double c) {
  std::vector<double> v(degree + 1, 0.0);
  v[degree] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::from_roots(const std::vector<cplx>& roots) {
  Polynomial p = constant(1.0);
  for (const cplx& r : roots) {
    if (r.imag() == 0.0) {
      p = p * Polynomial{-r.real(), 1.0};
    } else if (r.imag() > 0.0) {
      p = p * Polynomial{std::norm(r), -2.0 * r.real(), 1.0};
    }
  }
  return p;
}

void Polynomial::strip() {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

double Polynomial::operator[](int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0.0;
}

double Polynomial::norm_inf() const {
  double m = 0.0;
  for (double v : c_) m = std::max(m, std::abs(v));
  return m;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

cplx Polynomial::eval(cplx x) const {
  cplx acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = static_cast<double>(i) * c_[i];
  return Polynomial(std::move(d));
}

Polynomial Polynomial::reflect() const {
  std::vector<double> r = c_;
  for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::reversed(int n) const {
  std::vector<double> r(n + 1, 0.0);
  for (int i = 0; i <= degree(); ++i) r[n - i] = c_[i];
  return Polynomial(std::move(r));
}

Polynomial Polynomial::trimmed(double rel, double scale) const {
  std::vector<double> r = c_;
  while (!r.empty() && std::abs(r.back()) <= rel * scale) r.pop_back();
  return Polynomial(std::move(r));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Polynomial r = *this;
  r *= 1.0 / leading();
  r.c_.back() = 1.0;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (double& v : r.c_) v = -v;
  return r;
}

Polynomial& Polynomial::operator*=(double k) {
  for (double& v : c_) v *= k;
  strip();
  return *this;
}

namespace {

// Sum with cancellation-aware trimming of the leading run.
Polynomial add_scaled(const Polynomial& a, const Polynomial& b, double sb) {
  const size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  std::vector<double> r(n, 0.0);
  std::vector<double> mag(n, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    r[i] += a.coeffs()[i];
    mag[i] = std::abs(a.coeffs()[i]);
  }
  for (size_t i = 0; i < b.coeffs().size(); ++i) {
    r[i] += sb * b.coeffs()[i];
    mag[i] = std::max(mag[i], std::abs(b.coeffs()[i]));
  }
  while (!r.empty() && std::abs(r.back()) <= kCancelTol * mag[r.size() - 1]) r.pop_back();
  return Polynomial(std::move(r));
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, 1.0); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add_scaled(a, b, -1.0); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> r(a.coeffs().size() + b.coeffs().size() - 1, 0.0);
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) r[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return Polynomial(std::move(r));
}

Polynomial operator*(double k, const Polynomial& a) {
  Polynomial r = a;
  r *= k;
  return r;
}

PolyDivision divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::DegenerateMap, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<double> rem = a.coeffs();
  const int db = b.degree();
  const int dq = a.degree() - db;
  std::vector<double> q(dq + 1, 0.0);
  const double lb = b.leading();
  for (int k = dq; k >= 0; --k) {
    const double f = rem[k + db] / lb;
    q[k] = f;
    for (int j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs()[j];
    rem[k + db] = 0.0;
  }
  rem.resize(db);
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial approx_gcd(const Polynomial& a, const Polynomial& b, double rel_tol) {
  if (a.is_zero() && b.is_zero()) return Polynomial::constant(1.0);
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  Polynomial r0 = (1.0 / a.norm_inf()) * a;
  Polynomial r1 = (1.0 / b.norm_inf()) * b;
  if (r0.degree() < r1.degree()) std::swap(r0, r1);
  Polynomial g;
  while (true) {
    if (r1.degree() <= 0) return Polynomial::constant(1.0);
    PolyDivision d = divmod(r0, r1);
    const double scale = std::max(r0.norm_inf(), d.quotient.norm_inf() * r1.norm_inf());
    Polynomial rem = d.remainder.trimmed(rel_tol, scale);
    if (rem.is_zero()) {
      g = r1.monic();
      break;
    }
    r0 = r1;
    r1 = (1.0 / rem.norm_inf()) * rem;
  }
  // Accept only if g divides both inputs to a reasonable accuracy.
  auto divides = [&](const Polynomial& p) {
    PolyDivision d = divmod(p, g);
    const double scale = std::max(p.norm_inf(), d.quotient.norm_inf() * g.norm_inf());
    return d.remainder.norm_inf() <= 1e-8 * scale;
  };
  if (!divides(a) || !divides(b)) return Polynomial::constant(1.0);
  return g;
}

Polynomial mobius_numerator(const Polynomial& p, double a, double b, double c, double d, int n) {
  const Polynomial num{b, a};
  const Polynomial den{d, c};
  std::vector<Polynomial> num_pow{Polynomial::constant(1.0)};
  std::vector<Polynomial> den_pow{Polynomial::constant(1.0)};
  for (int k = 1; k <= n; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  std::vector<double> acc;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p[k] == 0.0) continue;
    Polynomial term = p[k] * (num_pow[k] * den_pow[n - k]);
    if (acc.size() < term.coeffs().size()) acc.resize(term.coeffs().size(), 0.0);
    for (size_t i = 0; i < term.coeffs().size(); ++i) acc[i] += term.coeffs()[i];
  }
  // Leading cancellation is structural here (e.g. c = 0 or p vanishing at a/c).
  Polynomial r(std::move(acc));
  double scale = 0.0;
  for (int k = 0; k <= p.degree(); ++k)
    scale = std::max(scale, std::abs(p[k]) * std::pow(std::abs(a) + std::abs(b), k) *
                                std::pow(std::abs(c) + std::abs(d), n - k));
  return r.trimmed(kCancelTol, scale);
}

std::vector<cplx> roots(const Polynomial& p) {
  std::vector<cplx> out;
  if (p.degree() <= 0) return out;
  int zeros = 0;
  while (p[zeros] == 0.0) ++zeros;
  for (int i = 0; i < zeros; ++i) out.emplace_back(0.0, 0.0);
  const int n = p.degree() - zeros;
  if (n == 0) return out;
  if (n == 1) {
    out.emplace_back(-p[zeros] / p[zeros + 1], 0.0);
    return out;
  }
  Eigen::VectorXd c(n + 1);
  for (int i = 0; i <= n; ++i) c(i) = p[zeros + i];
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver;
  solver.compute(c);
  for (Eigen::Index i = 0; i < solver.roots().size(); ++i) {
    const cplx r = solver.roots()(i);
    if (!std::isfinite(r.real()) || !std::isfinite(r.imag()))
      throw Error(ErrorKind::RootFindingFailure, "companion eigensolve did not converge");
    out.push_back(r);
  }
  return out;
}

double cluster_radius(int k, double tol) {
  if (k <= 1) return tol;
  const double eps = std::numeric_limits<double>::epsilon();
  return std::max(tol, 10.0 * std::pow(eps, 1.0 / k));
}

std::vector<Root> clustered_roots(const Polynomial& p, double tol) {
  std::vector<cplx> rs = roots(p);
  const size_t n = rs.size();
  std::vector<bool> used(n, false);
  std::vector<Root> clusters;
  // Seed clusters from the tightest neighbourhoods first.
  while (true) {
    int best_seed = -1;
    std::vector<size_t> best_members;
    double best_score = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      std::vector<size_t> nb;
      for (size_t j = 0; j < n; ++j)
        if (!used[j]) nb.push_back(j);
      std::sort(nb.begin(), nb.end(), [&](size_t x, size_t y) {
        return std::abs(rs[x] - rs[i]) < std::abs(rs[y] - rs[i]);
      });
      std::vector<size_t> members{i};
      for (size_t k = 2; k <= nb.size() && k <= 8; ++k) {
        std::vector<size_t> cand(nb.begin(), nb.begin() + k);
        cplx c = 0.0;
        for (size_t j : cand) c += rs[j];
        c /= static_cast<double>(k);
        double rad = 0.0;
        for (size_t j : cand) rad = std::max(rad, std::abs(rs[j] - c));
        if (rad <= cluster_radius(static_cast<int>(k), tol) * (1.0 + std::abs(c))) members = cand;
      }
      // Prefer larger clusters, then tighter ones.
      double score = -static_cast<double>(members.size());
      if (best_seed < 0 || score < best_score) {
        best_seed = static_cast<int>(i);
        best_score = score;
        best_members = members;
      }
    }
    if (best_seed < 0) break;
    cplx c = 0.0;
    for (size_t j : best_members) {
      c += rs[j];
      used[j] = true;
    }
    c /= static_cast<double>(best_members.size());
    clusters.push_back({c, static_cast<int>(best_members.size())});
  }
  // Snap near-real clusters; pair the rest as exact conjugates.
  std::vector<Root> out;
  std::vector<bool> paired(clusters.size(), false);
  for (size_t i = 0; i < clusters.size(); ++i) {
    if (paired[i]) continue;
    Root& r = clusters[i];
    const double rad = cluster_radius(r.multiplicity, tol) * (1.0 + std::abs(r.value));
    if (std::abs(r.value.imag()) <= rad) {
      out.push_back({cplx(r.value.real(), 0.0), r.multiplicity});
      paired[i] = true;
      continue;
    }
    size_t best = clusters.size();
    double bd = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < clusters.size(); ++j) {
      if (j == i || paired[j]) continue;
      const double d = std::abs(clusters[j].value - std::conj(r.value));
      if (d < bd) {
        bd = d;
        best = j;
      }
    }
    paired[i] = true;
    cplx v = r.value;
    int mult = r.multiplicity;
    if (best < clusters.size()) {
      paired[best] = true;
      v = 0.5 * (r.value + std::conj(clusters[best].value));
      mult = std::max(mult, clusters[best].multiplicity);
    }
    if (v.imag() < 0.0) v = std::conj(v);
    out.push_back({v, mult});
    out.push_back({std::conj(v), mult});
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    return a.value.imag() < b.value.imag();
  });
  return out;
}

CPoly to_complex(const Polynomial& p) { return CPoly(p.coeffs().begin(), p.coeffs().end()); }

cplx eval(const CPoly& p, cplx x) {
  cplx acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CPoly deflate(const CPoly& p, cplx r) {
  if (p.size() <= 1) return {};
  CPoly q(p.size() - 1);
  cplx acc = 0.0;
  for (size_t k = p.size() - 1; k >= 1; --k) {
    acc = acc * r + p[k];
    q[k - 1] = acc;
  }
  return q;
}

CPoly taylor_shift(const CPoly& p, cplx x0) {
  CPoly work = p;
  CPoly out;
  out.reserve(p.size());
  while (!work.empty()) {
    out.push_back(eval(work, x0));
    work = deflate(work, x0);
  }
  return out;
}

}  // namespace nipr
