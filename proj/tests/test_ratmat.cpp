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


#include <cmath>

#include "doctest.h"
#include "generators.hpp"
#include "nipr/error.hpp"
#include "nipr/hermitian.hpp"
#include "nipr/rational.hpp"
#include "oracles.hpp"

using namespace nipr;
using namespace nipr::testing;

namespace {

const Domain CT = Domain::CT;
const Domain DT = Domain::DT;

RationalMatrix scalar(Polynomial n, Polynomial d, Domain dom) {
  return RationalMatrix::scalar(RationalScalar(std::move(n), std::move(d)), dom);
}

double c0(const CMat& m) { return std::abs(m(0, 0)); }

}  // namespace

TEST_SUITE("ratmat") {
  TEST_CASE("eval at sample points") {
    const RationalMatrix f = scalar({3, 1}, Polynomial::from_roots({-1.0, -2.0}), CT);
    CHECK(eval(f, 0.0)(0, 0).real() == doctest::Approx(1.5));
    const RationalMatrix id = RationalMatrix::identity(2, DT);
    CHECK(eval(id, cplx(0.3, 2.0)).isApprox(CMat::Identity(2, 2)));
    // Hermitian part at w = 0 equals 12 / ((w^2 + 4)(w^2 + 1)) there.
    const CMat h = boundary_hermitian(f, Kind::PositiveReal, 0.0);
    CHECK(h(0, 0).real() == doctest::Approx(3.0));
    for (double w : {0.5, 1.0, 3.0})
      CHECK(boundary_hermitian(f, Kind::PositiveReal, w)(0, 0).real() ==
            doctest::Approx(12.0 / ((w * w + 4) * (w * w + 1))));
  }

  TEST_CASE("eval near a pole throws") {
    const RationalMatrix g = scalar({1}, {1, 1}, CT);
    CHECK_THROWS_AS(eval(g, -1.0), Error);
    try {
      eval(g, -1.0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::PoleProximity);
    }
  }

  TEST_CASE("poles with multiplicity") {
    auto p = poles(scalar({1, 2}, {1, 2, 1}, CT));
    REQUIRE(p.size() == 1);
    CHECK(p[0].location.real() == doctest::Approx(-1.0));
    CHECK(p[0].multiplicity == 2);
    CHECK(poles(RationalMatrix::constant(Mat::Ones(2, 2), CT)).empty());
    auto q = poles(RationalMatrix::scaled(RationalScalar(Polynomial{2}, Polynomial{1, 2}), Mat::Ones(2, 2), DT));
    REQUIRE(q.size() == 1);
    CHECK(q[0].location.real() == doctest::Approx(-0.5));
    CHECK(q[0].multiplicity == 1);
  }

  TEST_CASE("residues at boundary poles") {
    PoleDatum a = residues_at(scalar({1}, {-1, 1}, DT), 1.0);
    CHECK(c0(a.residue_A1) == doctest::Approx(1.0));
    CHECK(c0(a.quad_residue_A2) == doctest::Approx(0.0));
    CHECK(a.multiplicity == 1);
    PoleDatum b = residues_at(scalar({1}, {0, 0, 1}, CT), 0.0);
    CHECK(c0(b.residue_A1) == doctest::Approx(0.0));
    CHECK(c0(b.quad_residue_A2) == doctest::Approx(1.0));
    CHECK(b.multiplicity == 2);
    // 1/(z-1) + 1/(z-1)^2 = z/(z-1)^2
    PoleDatum c = residues_at(scalar({0, 1}, {1, -2, 1}, DT), 1.0);
    CHECK(c0(c.residue_A1) == doctest::Approx(1.0));
    CHECK(c0(c.quad_residue_A2) == doctest::Approx(1.0));
    // K0 = (i/z0) A1 on the circle, i A1 on the axis.
    PoleDatum d = residues_at(scalar({1}, {4, 0, 1}, CT), cplx(0, 2));
    CHECK(std::abs(d.normalized_K0(0, 0) - cplx(0, 1) * d.residue_A1(0, 0)) < 1e-12);
    CHECK(d.normalized_K0(0, 0).real() == doctest::Approx(0.25));
  }

  TEST_CASE("triple pole is rejected") {
    CHECK_THROWS_AS(residues_at(scalar({1}, Polynomial::from_roots({0.0, 0.0, 0.0}), CT), 0.0), Error);
  }

  TEST_CASE("expansion at infinity") {
    InfinityExpansion s = infinity_expansion(scalar({0, 1}, {1}, CT));
    REQUIRE(s.poly_coeffs.size() == 1);
    CHECK(s.poly_coeffs[0](0, 0) == doctest::Approx(1.0));
    CHECK(s.proper_part.is_zero());
    InfinityExpansion e = infinity_expansion(scalar({1, 2}, {1, 2, 1}, CT));
    CHECK(e.poly_coeffs.empty());
    InfinityExpansion q = infinity_expansion(scalar({0, 0, -1}, {1}, CT));
    REQUIRE(q.poly_coeffs.size() == 2);
    CHECK(q.poly_coeffs[1](0, 0) == doctest::Approx(-1.0));
  }

  TEST_CASE("Mobius substitution examples") {
    const RationalMatrix s = scalar({0, 1}, {1}, CT);
    const RationalMatrix m = mobius_substitute(s, 1, 1, -1, 1);
    CHECK(coefficient_distance(m, scalar({1, 1}, {1, -1}, CT)) < 1e-12);
    const RationalMatrix g = scalar({1}, {-1, 1}, DT);
    const RationalMatrix gc = cayley_dt_to_ct(g);
    CHECK(gc.domain() == CT);
    CHECK(coefficient_distance(gc, scalar({1, -1}, {0, 2}, CT)) < 1e-12);
    CHECK(coefficient_distance(cayley_ct_to_dt(gc), g) < 1e-12);
    CHECK_THROWS_AS(mobius_substitute(s, 1, 2, 2, 4), Error);
  }

  TEST_CASE("symmetry predicate") {
    CHECK(is_symmetric(RationalMatrix::constant(Mat::Ones(2, 2), CT)));
    RationalMatrix a(2, CT);
    a(0, 1) = RationalScalar(Polynomial{1}, Polynomial{1, 1});
    CHECK_FALSE(is_symmetric(a));
    RationalMatrix b(2, CT);
    b(0, 0) = RationalScalar(Polynomial{1}, Polynomial{0, 1});
    b(0, 1) = b(1, 0) = RationalScalar(Polynomial{1}, Polynomial{1, 1});
    b(1, 1) = RationalScalar(2.0);
    CHECK(is_symmetric(b));
    CHECK(hermitian_defect(b, cplx(0.0, 1.0)) > 0.0);
    CHECK(hermitian_defect(RationalMatrix::constant(Mat::Ones(2, 2), CT), cplx(0.0, 1.0)) == 0.0);
  }

  TEST_CASE("full normal rank") {
    const RationalMatrix q = RationalMatrix::scaled(RationalScalar(Polynomial{1}, Polynomial{1, 1}), Mat::Ones(2, 2), CT);
    CHECK_FALSE(full_normal_rank(BoundaryForm(q, Kind::NegativeImaginary).para()));
    RationalMatrix d(2, CT);
    d(0, 0) = RationalScalar(Polynomial{1}, Polynomial{1, 1});
    d(1, 1) = RationalScalar(Polynomial{1}, Polynomial{2, 1});
    CHECK(full_normal_rank(BoundaryForm(d, Kind::NegativeImaginary).para()));
    CHECK_FALSE(full_normal_rank(RationalMatrix(2, CT)));
  }

  TEST_CASE("property: Mobius substitution commutes with evaluation") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
      const RationalMatrix g = ct_symmetric_arbitrary(rng, uniform_int(rng, 1, 2), uniform_int(rng, 1, 3));
      const double a = uniform(rng, -2, 2), b = uniform(rng, -2, 2), c = uniform(rng, -2, 2), d = uniform(rng, -2, 2);
      if (std::abs(a * d - b * c) < 0.2) continue;
      const RationalMatrix m = mobius_substitute(g, a, b, c, d);
      int checked = 0;
      for (int k = 0; k < 100; ++k) {
        const cplx w(uniform(rng, -3, 3), uniform(rng, -3, 3));
        const cplx x = (a * w + b) / (c * w + d);
        auto lhs = m.try_eval(w);
        auto rhs = g.try_eval(x);
        if (!lhs || !rhs || std::abs(c * w + d) < 1e-3 || rhs->norm() > 1e6) continue;
        CHECK(rel_err(*lhs, *rhs) < 1e-9 * std::max(1.0, rhs->norm()));
        ++checked;
      }
      CHECK(checked > 50);
    }
  }

  TEST_CASE("property: Cayley twice is the identity") {
    Rng rng(12);
    for (int trial = 0; trial < 30; ++trial) {
      const RationalMatrix g = trial % 2 ? dt_symmetric_arbitrary(rng, 2, 2) : dt_ni_boundary(rng, 2, 2);
      CHECK(coefficient_distance(cayley_ct_to_dt(cayley_dt_to_ct(g)), g) < 1e-9);
    }
  }

  TEST_CASE("property: residue reconstruction is analytic at the pole") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const RationalMatrix g = ct_ni_boundary(rng, 2, 2);
      for (const MatrixPole& p : poles(g)) {
        if (p.multiplicity > 2) continue;
        const PoleDatum d = residues_at(g, p.location);
        // Brute force: Laurent coefficients from 8 directions.
        const MatFn f = [&](cplx s) { return eval(g, s); };
        CHECK(rel_err(d.residue_A1, laurent_coefficient(f, p.location, -1)) < 1e-6);
        CHECK(rel_err(d.quad_residue_A2, laurent_coefficient(f, p.location, -2)) < 1e-6);
        double worst = 0.0;
        for (int k = 0; k < 8; ++k) {
          const cplx e = std::polar(1e-4, 2 * M_PI * k / 8.0 + 0.1);
          const CMat rest = eval(g, p.location + e) - d.residue_A1 / e - d.quad_residue_A2 / (e * e);
          worst = std::max(worst, rest.norm());
        }
        CHECK(worst < 1e3);
      }
    }
  }

  TEST_CASE("property: conjugate poles have conjugate residues") {
    Rng rng(14);
    for (int trial = 0; trial < 20; ++trial) {
      const RationalMatrix g = ct_ni_stable(rng, 2, 3);
      for (const MatrixPole& p : poles(g)) {
        if (std::abs(p.location.imag()) < 1e-6) continue;
        const CMat a = residues_at(g, p.location).residue_A1;
        const CMat b = residues_at(g, std::conj(p.location)).residue_A1;
        CHECK((a - b.conjugate()).norm() < 1e-8 * (1 + a.norm()));
      }
    }
  }

  TEST_CASE("property: poles of R and R^T coincide") {
    Rng rng(15);
    for (int trial = 0; trial < 20; ++trial) {
      RationalMatrix g(2, CT);
      for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
          g(i, k) = RationalScalar(Polynomial{uniform(rng, -1, 1)}, Polynomial{uniform(rng, 0.1, 2), 1.0}) *
                    RationalScalar(Polynomial{1.0}, Polynomial{uniform(rng, 0.1, 2), 1.0});
      auto a = poles(g), b = poles(g.transpose());
      REQUIRE(a.size() == b.size());
      for (size_t k = 0; k < a.size(); ++k) {
        CHECK(std::abs(a[k].location - b[k].location) < 1e-12);
        CHECK(a[k].multiplicity == b[k].multiplicity);
      }
    }
  }
}
