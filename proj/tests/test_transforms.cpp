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
#include "nipr/analysis.hpp"
#include "nipr/error.hpp"
#include "nipr/transforms.hpp"
#include "oracles.hpp"

using namespace nipr;
using namespace nipr::testing;

namespace {

const Domain CT = Domain::CT;
const Domain DT = Domain::DT;

RationalMatrix sc(Polynomial n, Polynomial d, Domain dom) {
  return RationalMatrix::scalar(RationalScalar(std::move(n), std::move(d)), dom);
}

Mat m1(double v) { return Mat::Constant(1, 1, v); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

bool has_pole_near(const RationalMatrix& g, cplx p, double tol = 1e-6) {
  for (const MatrixPole& q : poles(g))
    if (std::abs(q.location - p) < tol) return true;
  return false;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("NI to PR in continuous time") {
    CHECK(coefficient_distance(ct_ni_to_pr(sc({1}, {0, 1}, CT)), RationalMatrix::identity(1, CT)) < 1e-12);
    const RationalMatrix f = ct_ni_to_pr(sc({1, 2}, {1, 2, 1}, CT));
    CHECK(coefficient_distance(f, sc({0, 1, 2}, {1, 2, 1}, CT)) < 1e-12);
    CHECK(classify_cpr(f).verdict);
    CHECK(ct_ni_to_pr(RationalMatrix::constant(Mat::Ones(2, 2), CT)).is_zero());
    CHECK(kind_of([] { ct_ni_to_pr(sc({0, 1}, {1}, CT)); }) == ErrorKind::ImproperInput);
  }

  TEST_CASE("PR to NI in continuous time") {
    const RationalMatrix a = ct_pr_to_ni(RationalMatrix::identity(1, CT), m1(0));
    CHECK(coefficient_distance(a, sc({1}, {0, 1}, CT)) < 1e-12);
    CHECK(classify_cni(a).verdict);
    const RationalMatrix b = ct_pr_to_ni(sc({1}, {0, 1}, CT), m1(0));
    CHECK(coefficient_distance(b, sc({1}, {0, 0, 1}, CT)) < 1e-12);
    CHECK(classify_cni(ct_pr_to_ni(sc({1}, {1, 1}, CT), m1(1))).verdict);
    Mat asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK(kind_of([&] { ct_pr_to_ni(RationalMatrix::identity(2, CT), asym); }) == ErrorKind::AsymmetricD);
    std::string warning;
    ct_pr_to_ni(sc({-1}, {1, 1}, CT), m1(0), &warning);
    CHECK_FALSE(warning.empty());
    warning.clear();
    ct_pr_to_ni(sc({1}, {1, 1}, CT), m1(0), &warning);
    CHECK(warning.empty());
  }

  TEST_CASE("strict PR and strict NI with a certified epsilon") {
    const EpsilonResult r = csspr_to_cssni(sc({1}, {1, 1}, CT), m1(0));
    CHECK(r.epsilon > 0.0);
    CHECK(r.epsilon <= r.epsilon_max);
    CHECK(r.epsilon_max == doctest::Approx(0.5));
    CHECK(coefficient_distance(r.system, sc({1}, Polynomial::from_roots({-1.0, -r.epsilon}), CT)) < 1e-10);
    CHECK(classify_cssni(r.system).verdict);

    const EpsilonResult s = cssni_to_csspr(sc({1, -1}, {1, 1}, CT));
    CHECK(coefficient_distance(s.system, sc({2 * s.epsilon, 2}, {1, 1}, CT)) < 1e-10);
    CHECK(classify_csspr(s.system).verdict);

    const EpsilonResult c = csspr_to_cssni(RationalMatrix::identity(2, CT), Mat::Identity(2, 2));
    CHECK(classify_cssni(c.system).verdict);
    const RationalMatrix expect =
        RationalMatrix::scaled(RationalScalar(Polynomial{1}, Polynomial{c.epsilon, 1}), Mat::Identity(2, 2), CT) +
        RationalMatrix::identity(2, CT);
    CHECK(coefficient_distance(c.system, expect) < 1e-10);

    CHECK(kind_of([] { csspr_to_cssni(sc({1}, {1, 2, 1}, CT), m1(0)); }) == ErrorKind::PreconditionViolated);
  }

  TEST_CASE("NI to PR in discrete time") {
    const RationalMatrix f = dt_ni_to_pr(sc({1}, {-0.5, 1}, DT));
    CHECK(coefficient_distance(f, sc({-2.0 / 3, 2.0 / 3}, {-0.5, 1}, DT)) < 1e-10);
    CHECK(classify_dpr(f).verdict);
    CHECK(dt_ni_to_pr(RationalMatrix::constant(Mat::Ones(2, 2), DT)).is_zero());
    const RationalMatrix h = dt_ni_to_pr(sc({1}, {-1, 1}, DT));
    CHECK(poles(h).empty());
    CHECK(eval(h, 1.0)(0, 0).real() == doctest::Approx(0.5));
    CHECK(kind_of([] { dt_ni_to_pr(sc({1}, {1, 1}, DT)); }) == ErrorKind::PoleAtMinusOne);
    CHECK(kind_of([] { dt_ni_to_pr(sc({0, 0, 1}, {1, 1}, DT)); }) == ErrorKind::ImproperInput);
  }

  TEST_CASE("PR to NI in discrete time") {
    const RationalMatrix g = dt_pr_to_ni(RationalMatrix::constant(m1(0.7), DT), m1(0));
    CHECK(coefficient_distance(g, sc({0.7, 0.7}, {-1, 1}, DT)) < 1e-12);
    CHECK(residues_at(g, 1.0).residue_A1(0, 0).real() == doctest::Approx(1.4));
    CHECK(classify_dni(g).verdict);
    const RationalMatrix z = dt_pr_to_ni(RationalMatrix(2, DT), Mat::Ones(2, 2));
    CHECK(coefficient_distance(z, RationalMatrix::constant(Mat::Ones(2, 2), DT)) < 1e-12);
    Mat asym(2, 2);
    asym << 0, 1, 0, 0;
    CHECK(kind_of([&] { dt_pr_to_ni(RationalMatrix(2, DT), asym); }) == ErrorKind::AsymmetricOffset);
  }

  TEST_CASE("state-space NI to PR") {
    StateSpace ss;
    ss.domain = DT;
    ss.A = m1(0.5);
    ss.B = m1(1);
    ss.C = m1(1);
    ss.D = m1(0);
    const SsTransform t = dt_ni_to_pr_ss(ss);
    CHECK(t.ss.C(0, 0) == doctest::Approx(-1.0 / 3));
    CHECK(t.ss.D(0, 0) == doctest::Approx(2.0 / 3));
    CHECK(t.minimal);
    const SsTransform st = dt_ni_to_pr_ss(StateSpace::static_gain(Mat::Ones(2, 2), DT));
    CHECK(st.ss.n() == 0);
    CHECK(st.ss.D.isZero());
    ss.A = m1(1.0);
    CHECK_FALSE(dt_ni_to_pr_ss(ss).minimal);
    ss.A = m1(-1.0);
    CHECK(kind_of([&] { dt_ni_to_pr_ss(ss); }) == ErrorKind::EigenvalueAtMinusOne);
  }

  TEST_CASE("property: NI to PR forward and converse in continuous time") {
    Rng rng(51);
    for (int k = 0; k < 30; ++k) {
      const RationalMatrix g = ct_ni_boundary(rng, uniform_int(rng, 1, 2), 2);
      if (g.is_proper() && classify_cni(g).verdict) CHECK(classify_cpr(ct_ni_to_pr(g)).verdict);
      const RationalMatrix f = ct_pr(rng, uniform_int(rng, 1, 2), 2);
      if (!classify_cpr(f).verdict) continue;
      const RationalMatrix n = ct_pr_to_ni(f, random_symmetric(rng, f.size()));
      CHECK(classify_cni(n).verdict);
      CHECK(is_symmetric(n));
    }
  }

  TEST_CASE("property: discrete NI iff the PR image is D-PR") {
    Rng rng(52);
    int yes = 0, no = 0;
    for (int k = 0; k < 40; ++k) {
      const RationalMatrix g = k % 2 ? dt_ni_boundary(rng, uniform_int(rng, 1, 2), 2) : dt_symmetric_arbitrary(rng, 1, 2);
      if (has_pole_near(g, -1.0)) continue;
      const bool ni = classify_dni(g).verdict;
      const RationalMatrix f = dt_ni_to_pr(g);
      CHECK(ni == (classify_dpr(f).verdict && is_symmetric(RationalMatrix::constant(g.at_infinity(), DT))));
      (ni ? yes : no)++;
    }
    CHECK(yes > 5);
    CHECK(no > 5);
  }

  TEST_CASE("property: round trip through the discrete maps") {
    Rng rng(53);
    for (int k = 0; k < 100; ++k) {
      const RationalMatrix g = dt_ni_stable(rng, uniform_int(rng, 1, 2), uniform_int(rng, 1, 2));
      if (has_pole_near(g, 1.0, 1e-3) || has_pole_near(g, -1.0, 1e-3)) continue;
      const Mat gm = eval(g, -1.0).real();
      const RationalMatrix back = dt_pr_to_ni(dt_ni_to_pr(g), gm);
      CHECK(coefficient_distance(back, g) < 1e-7);
    }
  }

  TEST_CASE("property: state-space and transfer-function maps agree") {
    Rng rng(54);
    for (int k = 0; k < 100; ++k) {
      const StateSpace ss = random_stable_ss(rng, uniform_int(rng, 1, 4), uniform_int(rng, 1, 2), DT);
      const RationalMatrix a = tf_of(dt_ni_to_pr_ss(ss).ss);
      const RationalMatrix b = dt_ni_to_pr(tf_of(ss));
      CHECK(evaluation_distance(a, b, {cplx(1.5, 0.5), cplx(-0.2, 2.0), cplx(3.0, -1.0)}) < 1e-8);
    }
  }

  TEST_CASE("property: maps preserve symmetry") {
    Rng rng(55);
    for (int k = 0; k < 20; ++k) {
      const RationalMatrix c = ct_symmetric_arbitrary(rng, 2, 2);
      CHECK(is_symmetric(ct_ni_to_pr(c)));
      CHECK(is_symmetric(ct_pr_to_ni(c, Mat::Identity(2, 2))));
      const RationalMatrix d = dt_symmetric_arbitrary(rng, 2, 2);
      if (has_pole_near(d, -1.0)) continue;
      CHECK(is_symmetric(dt_ni_to_pr(d)));
      CHECK(is_symmetric(dt_pr_to_ni(d, Mat::Identity(2, 2))));
    }
  }
}
