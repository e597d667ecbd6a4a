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

#include <complex>
#include <initializer_list>
#include <vector>

namespace nipr {

using cplx = std::complex<double>;

// Leading coefficients smaller than this fraction of the operand scale are
// dropped after addition/subtraction (cancellation noise).
inline constexpr double kCancelTol = 1e-12;
// Relative remainder cutoff of the approximate Euclidean GCD.
inline constexpr double kGcdTol = 1e-10;
// Base root clustering radius, scaled by (1 + |root|).
inline constexpr double kClusterTol = 1e-7;

/// Real polynomial with ascending coefficients. The zero polynomial has no
/// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<double> c);
  explicit Polynomial(std::vector<double> c);

  static Polynomial constant(double c);
  static Polynomial monomial(int degree, double c = 1.0);
  // Product of (s - r) over the roots; non-real roots must come in
  // conjugate pairs. Imaginary residue is discarded.
  static Polynomial from_roots(const std::vector<cplx>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double operator[](int i) const;
  double leading() const { return c_.empty() ? 0.0 : c_.back(); }
  double norm_inf() const;

  double eval(double x) const;
  cplx eval(cplx x) const;

  Polynomial derivative() const;
  // p(-s)
  Polynomial reflect() const;
  // s^n p(1/s), n >= degree()
  Polynomial reversed(int n) const;
  // Drops leading coefficients with |c| <= rel * scale.
  Polynomial trimmed(double rel, double scale) const;
  Polynomial monic() const;

  Polynomial operator-() const;
  Polynomial& operator*=(double k);

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(double k, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void strip();
  std::vector<double> c_;
};

struct PolyDivision {
  Polynomial quotient;
  Polynomial remainder;
};

PolyDivision divmod(const Polynomial& a, const Polynomial& b);

// Approximate GCD by the Euclidean algorithm with relative remainder cutoff.
// Returns a monic polynomial; the constant 1 when coprime.
Polynomial approx_gcd(const Polynomial& a, const Polynomial& b, double rel_tol = kGcdTol);

// (a*w + b)^k (c*w + d)^(n-k) summed against p's coefficients: the numerator
// of p((a w + b)/(c w + d)) after clearing (c w + d)^n.
Polynomial mobius_numerator(const Polynomial& p, double a, double b, double c, double d, int n);

/// Roots via eigenvalues of the balanced companion matrix.
std::vector<cplx> roots(const Polynomial& p);

struct Root {
  cplx value;
  int multiplicity = 1;
};

// Roots merged into clusters. A pair merges within kClusterTol*(1+|r|); larger
// clusters use the wider radius expected of a k-fold root perturbed at
// machine precision. Near-real clusters are snapped to the real axis and
// complex clusters are returned as exact conjugate pairs.
std::vector<Root> clustered_roots(const Polynomial& p, double tol = kClusterTol);

// Matching radius (relative to 1 + |root|) for a cluster of k roots.
double cluster_radius(int k, double tol = kClusterTol);

// Complex coefficient helpers (ascending).
using CPoly = std::vector<cplx>;
CPoly to_complex(const Polynomial& p);
cplx eval(const CPoly& p, cplx x);
// Divides by (s - r); remainder discarded.
CPoly deflate(const CPoly& p, cplx r);
// Coefficients of p(s) in powers of (s - x0).
CPoly taylor_shift(const CPoly& p, cplx x0);

}  // namespace nipr
