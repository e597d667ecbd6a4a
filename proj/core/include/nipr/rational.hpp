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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nipr/polynomial.hpp"

namespace nipr {

using Mat = Eigen::MatrixXd;
using CMat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

enum class Domain { CT, DT };

const char* to_string(Domain d);

/// num/den with den monic and the pair reduced by approximate GCD.
class RationalScalar {
 public:
  RationalScalar() : den_(Polynomial::constant(1.0)) {}
  RationalScalar(double c);  // NOLINT(google-explicit-constructor)
  RationalScalar(Polynomial num, Polynomial den, bool reduce = true);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_proper() const { return num_.degree() <= den_.degree(); }
  bool is_constant() const { return den_.degree() == 0 && num_.degree() <= 0; }
  // deg(den) - deg(num); large positive for the zero function.
  int relative_degree() const;

  // Throws PoleProximity when |den(p)| is tiny relative to its coefficient scale.
  cplx eval(cplx p) const;
  std::optional<cplx> try_eval(cplx p) const;
  // Value at infinity of a proper function.
  double at_infinity() const;

  RationalScalar operator-() const;
  friend RationalScalar operator+(const RationalScalar& a, const RationalScalar& b);
  friend RationalScalar operator-(const RationalScalar& a, const RationalScalar& b);
  friend RationalScalar operator*(const RationalScalar& a, const RationalScalar& b);
  friend RationalScalar operator/(const RationalScalar& a, const RationalScalar& b);

 private:
  void normalize(bool reduce);
  Polynomial num_;
  Polynomial den_;
};

/// Square grid of rational scalars sharing a time-domain tag.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int m, Domain domain);
  RationalMatrix(int m, Domain domain, std::vector<RationalScalar> entries);

  static RationalMatrix constant(const Mat& k, Domain domain);
  static RationalMatrix identity(int m, Domain domain);
  static RationalMatrix scalar(const RationalScalar& g, Domain domain);
  // g times a constant matrix.
  static RationalMatrix scaled(const RationalScalar& g, const Mat& k, Domain domain);

  int size() const { return m_; }
  Domain domain() const { return domain_; }
  const RationalScalar& operator()(int i, int j) const { return e_[i * m_ + j]; }
  RationalScalar& operator()(int i, int j) { return e_[i * m_ + j]; }
  const std::vector<RationalScalar>& entries() const { return e_; }

  bool is_proper() const;
  bool is_zero() const;
  // Requires is_proper().
  Mat at_infinity() const;
  std::optional<CMat> try_eval(cplx p) const;

  RationalMatrix transpose() const;
  // G(-s)
  RationalMatrix reflect() const;
  // G(1/z)
  RationalMatrix invert_argument() const;
  RationalMatrix with_domain(Domain d) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalScalar& g, const RationalMatrix& a);

 private:
  int m_ = 0;
  Domain domain_ = Domain::CT;
  std::vector<RationalScalar> e_;
};

struct PoleDatum {
  cplx location;
  int multiplicity = 1;
  CMat residue_A1;
  CMat quad_residue_A2;
  // i*A1 for CT poles, (i/p)*A1 for DT poles.
  CMat normalized_K0;
};

struct InfinityExpansion {
  // poly_coeffs[i] multiplies s^(i+1).
  std::vector<Mat> poly_coeffs;
  RationalMatrix proper_part;
};

struct MatrixPole {
  cplx location;
  int multiplicity = 1;
};

/// Entrywise evaluation; throws PoleProximity near a pole of any entry.
CMat eval(const RationalMatrix& r, cplx p);

// Union over entries; matrix multiplicity is the largest entry multiplicity.
std::vector<MatrixPole> poles(const RationalMatrix& r);

// Laurent data at a pole of multiplicity <= 2 by polynomial deflation.
PoleDatum residues_at(const RationalMatrix& r, cplx p);

InfinityExpansion infinity_expansion(const RationalMatrix& r);

enum class MapIntent { Preserve, FlipDomain };

// Entrywise composition with w -> (a w + b)/(c w + d).
RationalMatrix mobius_substitute(const RationalMatrix& r, double a, double b, double c, double d,
                                 MapIntent intent = MapIntent::Preserve);

// G(z) -> G((1+s)/(1-s)); DT in, CT out.
RationalMatrix cayley_dt_to_ct(const RationalMatrix& g);
// G(s) -> G((z-1)/(z+1)); CT in, DT out. Inverse of cayley_dt_to_ct.
RationalMatrix cayley_ct_to_dt(const RationalMatrix& g);

bool is_symmetric(const RationalMatrix& r, double tol = 1e-9);
double hermitian_defect(const RationalMatrix& r, cplx p);

// det(M) not identically zero, decided on the row-cleared polynomial matrix.
bool full_normal_rank(const RationalMatrix& m);

// Largest relative coefficient difference after normalization; used to compare
// two rational matrices as rational identities.
double coefficient_distance(const RationalMatrix& a, const RationalMatrix& b);
// Max relative difference of evaluations at the given points.
double evaluation_distance(const RationalMatrix& a, const RationalMatrix& b,
                           const std::vector<cplx>& points);

}  // namespace nipr
