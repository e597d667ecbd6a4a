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
#include "oracles.hpp"

using namespace nipr;
using namespace nipr::testing;

namespace {

const Domain CT = Domain::CT;

RationalMatrix sc(Polynomial n, Polynomial d) { return RationalMatrix::scalar(RationalScalar(std::move(n), std::move(d)), CT); }

bool failed(const ClassificationReport& r, const char* id) {
  const Condition* c = r.find(id);
  return c && !c->pass;
}

CMat ni_at(const RationalMatrix& g, cplx s) {
  const CMat v = eval(g, s);
  return cplx(0, 1) * (v - v.adjoint());
}

}  // namespace

TEST_SUITE("analysis-ct") {
  TEST_CASE("C-PR verdicts") {
    CHECK(classify_cpr(sc({3, 1}, {2, 3, 1})).verdict);
    CHECK(classify_cpr(sc({1}, {0, 1})).verdict);
    const ClassificationReport neg = classify_cpr(sc({-1}, {1, 1}));
    CHECK_FALSE(neg.verdict);
    const Condition* f = neg.first_failure();
    REQUIRE(f != nullptr);
    CHECK(f->id == "boundary_sign");
    REQUIRE(f->witness.frequency.has_value());
    CHECK(*f->witness.frequency == doctest::Approx(0.0));
    CHECK(*f->witness.value < 0.0);
  }

  TEST_CASE("C-SSPR and C-WSPR") {
    CHECK(classify_csspr(sc({1}, {1, 1})).verdict);
    const RationalMatrix f = sc({3, 1}, {2, 3, 1});
    CHECK(classify_cwspr(f).verdict);
    const ClassificationReport r = classify_csspr(f);
    CHECK_FALSE(r.verdict);
    CHECK(failed(r, "asymptotic"));
    REQUIRE(r.limits.w2_limit.has_value());
    CHECK(std::abs((*r.limits.w2_limit)(0, 0)) < 1e-6);
    const ClassificationReport ones =
        classify_csspr(RationalMatrix::scaled(RationalScalar(Polynomial{1}, Polynomial{1, 1}), Mat::Ones(2, 2), CT));
    CHECK_FALSE(ones.verdict);
    CHECK(failed(ones, "normal_rank"));
    CHECK_THROWS_AS(classify_csspr(sc({0, 0, 1}, {1, 1})), Error);
  }

  TEST_CASE("C-NI verdicts") {
    CHECK(classify_cni(sc({1}, {0, 1})).verdict);
    CHECK(classify_cni(sc({1}, {0, 0, 1})).verdict);
    CHECK_FALSE(classify_cni(sc({-1}, {0, 0, 1})).verdict);
    CHECK(classify_cni(sc({1, 2}, {1, 2, 1})).verdict);
    CHECK(classify_cni(RationalMatrix::constant(Mat::Ones(2, 2), CT)).verdict);
    // -s^2 has a double pole at infinity with coefficient -1 <= 0.
    CHECK(classify_cni(sc({0, 0, -1}, {1})).verdict);
    CHECK_FALSE(classify_cni(sc({0, 0, 1}, {1})).verdict);
  }

  TEST_CASE("C-SSNI and C-WSNI with limits") {
    const RationalMatrix g2 = sc({1, 2}, {1, 2, 1});
    CHECK(classify_cwsni(g2).verdict);
    const ClassificationReport r2 = classify_cssni(g2);
    CHECK_FALSE(r2.verdict);
    CHECK(failed(r2, "q_limit"));
    REQUIRE(r2.limits.Q.has_value());
    CHECK(std::abs((*r2.limits.Q)(0, 0)) < 1e-6);

    const RationalMatrix g3 = sc({3, 1}, {1, 3, 3, 1});
    const ClassificationReport w3 = classify_cwsni(g3);
    CHECK(w3.verdict);
    const ClassificationReport r3 = classify_cssni(g3);
    CHECK_FALSE(r3.verdict);
    CHECK(failed(r3, "decay"));
    CHECK_FALSE(failed(r3, "q_limit"));
    REQUIRE(r3.limits.Q.has_value());
    CHECK((*r3.limits.Q)(0, 0) == doctest::Approx(16.0).epsilon(1e-9));

    const ClassificationReport ap = classify_cssni(sc({1, -1}, {1, 1}));
    CHECK(ap.verdict);
    CHECK((*ap.limits.Q)(0, 0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(classify_cssni(sc({0, 1}, {1})), Error);
  }

  TEST_CASE("verdict is the conjunction of conditions and failures carry evidence") {
    Rng rng(31);
    for (int k = 0; k < 20; ++k) {
      const RationalMatrix g = ct_symmetric_arbitrary(rng, 2, 2);
      for (const std::string& cls : {"cpr", "cwspr", "csspr", "cni", "cwsni", "cssni"}) {
        const ClassificationReport r = classify(g, cls);
        bool all = true;
        for (const Condition& c : r.conditions) {
          all = all && c.pass;
          if (!c.pass) CHECK_FALSE(c.detail.empty());
        }
        CHECK(all == r.verdict);
      }
    }
  }

  TEST_CASE("scalar structure checks") {
    const ScalarStructureReport a = scalar_ni_structure_checks(RationalScalar(Polynomial{1, 2}, Polynomial{1, 2, 1}));
    CHECK(a.relative_degree == 1);
    REQUIRE(a.zeros.size() == 1);
    CHECK(a.zeros[0].value.real() == doctest::Approx(-0.5));
    CHECK(a.ni_candidate);
    const ScalarStructureReport b = scalar_ni_structure_checks(RationalScalar(Polynomial{0, 1}, Polynomial{1, 2, 1}));
    CHECK(b.origin_zero_multiplicity == 1);
    CHECK(b.ssni_candidate);
    const ScalarStructureReport c = scalar_ni_structure_checks(RationalScalar(Polynomial{1}, Polynomial{1, 3, 3, 1}));
    CHECK(c.relative_degree == 3);
    CHECK_FALSE(c.ni_candidate);
    CHECK_FALSE(classify_cni(sc({1}, {1, 3, 3, 1})).verdict);
  }

  TEST_CASE("property: containment SSNI => WSNI => NI") {
    Rng rng(32);
    int ssni = 0, wsni = 0;
    for (int k = 0; k < 60; ++k) {
      // Every third draw is c (s + 3)/(s + 1)^3, weakly but not strongly strict.
      const RationalMatrix g = k % 3 == 0 ? sc({3 * (k + 1.0), k + 1.0}, {1, 3, 3, 1})
                               : k % 2   ? ct_ni_stable(rng, uniform_int(rng, 1, 2), 2)
                                         : ct_symmetric_arbitrary(rng, 1, 2);
      const bool s = classify_cssni(g).verdict, w = classify_cwsni(g).verdict, n = classify_cni(g).verdict;
      if (s) CHECK(w);
      if (w) CHECK(n);
      ssni += s;
      wsni += w;
    }
    CHECK(ssni > 0);
    CHECK(wsni > ssni);
  }

  TEST_CASE("property: strict verdicts hold off the boundary") {
    Rng rng(33);
    int tested = 0;
    for (int k = 0; k < 40; ++k) {
      const RationalMatrix g = ct_ni_stable(rng, uniform_int(rng, 1, 2), 2);
      const bool s = classify_cssni(g).verdict, w = classify_cwsni(g).verdict;
      if (!w) continue;
      ++tested;
      for (cplx p : region_points(rng, CT, 200, !s)) CHECK(min_eig(ni_at(g, p)) > -1e-9);
    }
    CHECK(tested > 10);
  }

  TEST_CASE("property: boundary sign agrees with a dense direct evaluation") {
    Rng rng(34);
    for (int k = 0; k < 30; ++k) {
      const RationalMatrix g = k % 2 ? ct_ni_stable(rng, 2, 2) : ct_symmetric_arbitrary(rng, 2, 2);
      const ClassificationReport r = classify_cni(g);
      double worst = 1e300;
      for (int j = 0; j < 3000; ++j) {
        const double w = std::pow(10.0, -5.0 + 10.0 * j / 2999.0);
        worst = std::min(worst, min_eig(boundary_hermitian(g, Kind::NegativeImaginary, w)));
      }
      if (worst < -1e-6) CHECK_FALSE(r.find("boundary_sign")->pass);
      if (r.verdict) CHECK(worst > -1e-7);
    }
  }

  TEST_CASE("property: scalar validators never contradict the classifiers") {
    Rng rng(35);
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
      RationalMatrix g = k % 2 ? ct_ni_stable(rng, 1, uniform_int(rng, 1, 2)) : ct_symmetric_arbitrary(rng, 1, 2);
      g = g - RationalMatrix::constant(g.at_infinity(), CT);
      const ScalarStructureReport s = scalar_ni_structure_checks(g(0, 0));
      if (s.strictly_proper && classify_cni(g).verdict) {
        CHECK(s.ni_candidate);
        ++checked;
      }
      if (classify_cssni(g).verdict && std::abs(g(0, 0).num()[0]) < 1e-12) CHECK(s.ssni_candidate);
    }
    CHECK(checked > 20);
  }

  TEST_CASE("property: conjugate symmetry of the NI defect") {
    Rng rng(36);
    for (int k = 0; k < 10; ++k) {
      const RationalMatrix g = ct_symmetric_arbitrary(rng, 2, 2);
      for (cplx s : region_points(rng, CT, 20)) {
        const CMat a = ni_at(g, std::conj(s));
        const CMat b = ni_at(g, s);
        CHECK((a + b.conjugate()).norm() < 1e-9 * (1 + b.norm()));
      }
    }
  }

  TEST_CASE("non-symmetric input") {
    RationalMatrix g(2, CT);
    g(0, 1) = RationalScalar(Polynomial{1}, Polynomial{1, 1});
    const ClassificationReport r = classify_cni(g);
    CHECK_FALSE(r.verdict);
    CHECK(failed(r, "symmetric"));
    Config relaxed;
    relaxed.require_symmetric = false;
    CHECK(classify_cni(g, relaxed).find("symmetric") == nullptr);
  }

  TEST_CASE("domain mismatch") {
    CHECK_THROWS_AS(classify_cni(RationalMatrix::identity(1, Domain::DT)), Error);
    CHECK_THROWS_AS(classify(sc({1}, {1, 1}), "nope"), Error);
  }
}
