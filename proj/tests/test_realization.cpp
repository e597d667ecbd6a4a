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
#include "nipr/statespace.hpp"
#include "oracles.hpp"

using namespace nipr;
using namespace nipr::testing;

namespace {

const Domain CT = Domain::CT;
const Domain DT = Domain::DT;

StateSpace make_ss(Mat A, Mat B, Mat C, Mat D, Domain d) {
  StateSpace ss;
  ss.A = std::move(A);
  ss.B = std::move(B);
  ss.C = std::move(C);
  ss.D = std::move(D);
  ss.domain = d;
  return ss;
}

Mat m1(double v) { return Mat::Constant(1, 1, v); }

// McMillan degree as the rank of the block Hankel matrix of Markov parameters.
int hankel_degree(const RationalMatrix& g, int blocks) {
  const StateSpace ss = minimal_realization(g);
  const int m = g.size();
  // Markov parameters from the expansion at infinity of the proper part.
  std::vector<Mat> h;
  Mat ak = Mat::Identity(ss.n(), ss.n());
  for (int k = 0; k < 2 * blocks; ++k) {
    h.push_back(ss.n() ? Mat(ss.C * ak * ss.B) : Mat::Zero(m, m));
    if (ss.n()) ak = ak * ss.A;
  }
  Mat H(blocks * m, blocks * m);
  for (int i = 0; i < blocks; ++i)
    for (int k = 0; k < blocks; ++k) H.block(i * m, k * m, m, m) = h[i + k];
  Eigen::JacobiSVD<Mat> svd(H);
  int r = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-8 * svd.singularValues()(0)) ++r;
  return r;
}

// Degree from residues: rank(A1) at simple poles, rank [A1 A2; A2 0] at double poles.
int residue_degree(const RationalMatrix& g) {
  int deg = 0;
  for (const MatrixPole& p : poles(g)) {
    const PoleDatum d = residues_at(g, p.location);
    if (p.multiplicity == 1) {
      Eigen::JacobiSVD<CMat> svd(d.residue_A1);
      for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-8 * (1 + svd.singularValues()(0))) ++deg;
    } else {
      const int m = g.size();
      CMat T = CMat::Zero(2 * m, 2 * m);
      T.topLeftCorner(m, m) = d.residue_A1;
      T.topRightCorner(m, m) = d.quad_residue_A2;
      T.bottomLeftCorner(m, m) = d.quad_residue_A2;
      Eigen::JacobiSVD<CMat> svd(T);
      for (int i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()(i) > 1e-8 * (1 + svd.singularValues()(0))) ++deg;
    }
  }
  return deg;
}

}  // namespace

TEST_SUITE("realization") {
  TEST_CASE("tf_of examples") {
    const RationalMatrix g = tf_of(make_ss(m1(-1), m1(1), m1(1), m1(0), CT));
    CHECK(coefficient_distance(g, RationalMatrix::scalar(RationalScalar(Polynomial{1}, Polynomial{1, 1}), CT)) < 1e-12);
    const RationalMatrix s = tf_of(StateSpace::static_gain(Mat::Ones(2, 2), CT));
    CHECK(coefficient_distance(s, RationalMatrix::constant(Mat::Ones(2, 2), CT)) < 1e-15);
    Mat A(2, 2);
    A << -2, 0, 0, -1;
    const StateSpace two = make_ss(A, Mat::Ones(2, 1), Mat::Ones(1, 2), m1(0), CT);
    const RationalMatrix t = tf_of(two);
    const RationalMatrix expect =
        RationalMatrix::scalar(RationalScalar(Polynomial{3, 2}, Polynomial::from_roots({-1.0, -2.0})), CT);
    CHECK(coefficient_distance(t, expect) < 1e-12);
    CHECK(eval(t, 0.0)(0, 0).real() == doctest::Approx(1.5));
    Rng rng(21);
    for (int k = 0; k < 20; ++k) {
      const cplx p(uniform(rng, -3, 3), uniform(rng, 0.1, 3));
      CHECK(rel_err(eval(t, p), eval(two, p)) < 1e-12);
    }
  }

  TEST_CASE("minimal realization orders") {
    auto first = RationalMatrix::scalar(RationalScalar(Polynomial{1}, Polynomial{1, 1}), CT);
    StateSpace a = minimal_realization(first);
    CHECK(a.n() == 1);
    CHECK(coefficient_distance(tf_of(a), first) < 1e-12);
    CHECK(minimal_realization(RationalMatrix::scaled(RationalScalar(Polynomial{1}, Polynomial{1, 1}), Mat::Ones(2, 2), CT))
              .n() == 1);
    CHECK(minimal_realization(RationalMatrix::scalar(RationalScalar(Polynomial{1, 2}, Polynomial{1, 2, 1}), CT)).n() == 2);
    CHECK_THROWS_AS(minimal_realization(RationalMatrix::scalar(RationalScalar(Polynomial{0, 1}, Polynomial{1}), CT)),
                    Error);
  }

  TEST_CASE("minimality and spectrum") {
    StateSpace a = minimal_realization(RationalMatrix::scalar(RationalScalar(Polynomial{1}, Polynomial{1, 1}), CT));
    CHECK(is_minimal(a));
    REQUIRE(spectrum(a).size() == 1);
    CHECK(spectrum(a)[0].real() == doctest::Approx(-1.0));
    // Mode at z = 1 that B does not reach.
    Mat A(2, 2);
    A << 0.5, 0, 0, 1.0;
    Mat B(2, 1);
    B << 1, 0;
    CHECK_FALSE(is_minimal(make_ss(A, B, Mat::Ones(1, 2), m1(0), DT)));
    // Padded copy with an unobservable mode.
    Mat B2(2, 1);
    B2 << 1, 1;
    Mat C2(1, 2);
    C2 << 1, 0;
    Mat A2(2, 2);
    A2 << -1, 0, 0, -3;
    CHECK_FALSE(is_minimal(make_ss(A2, B2, C2, m1(0), CT)));
    CHECK(reduce_to_minimal(make_ss(A2, B2, C2, m1(0), CT)).n() == 1);
  }

  TEST_CASE("state-space Cayley map") {
    const StateSpace d = make_ss(m1(1), m1(1), m1(1), m1(0), DT);
    const RationalMatrix c = tf_of(cayley_ss(d));
    CHECK(c.domain() == CT);
    CHECK(coefficient_distance(c, RationalMatrix::scalar(RationalScalar(Polynomial{1, -1}, Polynomial{0, 2}), CT)) < 1e-10);
    const StateSpace st = cayley_ss(StateSpace::static_gain(Mat::Ones(2, 2), DT));
    CHECK(st.D.isApprox(Mat::Ones(2, 2)));
    CHECK_THROWS_AS(cayley_ss(make_ss(m1(-1), m1(1), m1(1), m1(0), DT)), Error);
    CHECK_THROWS_AS(cayley_ss(make_ss(m1(1), m1(1), m1(1), m1(0), CT)), Error);
  }

  TEST_CASE("property: Cayley round trip on random Schur systems") {
    Rng rng(22);
    for (int trial = 0; trial < 50; ++trial) {
      const StateSpace ss = random_stable_ss(rng, uniform_int(rng, 1, 4), uniform_int(rng, 1, 2), DT);
      const StateSpace back = cayley_ss(cayley_ss(ss));
      CHECK(back.domain == DT);
      for (int k = 0; k < 5; ++k) {
        const cplx z = std::polar(uniform(rng, 1.1, 3), uniform(rng, 0, 6.28));
        CHECK(rel_err(eval(back, z), eval(ss, z)) < 1e-8);
      }
      // tf of the state-space map equals the substituted transfer function.
      CHECK(evaluation_distance(tf_of(cayley_ss(ss)), cayley_dt_to_ct(tf_of(ss)),
                                {cplx(0.3, 1.0), cplx(2.0, -0.5), cplx(0.1, 4.0)}) < 1e-8);
      // Spectral mapping.
      std::vector<cplx> mapped;
      for (cplx l : spectrum(ss)) mapped.push_back((l - 1.0) / (l + 1.0));
      for (cplx l : spectrum(cayley_ss(ss))) {
        double best = 1e300;
        for (cplx m : mapped) best = std::min(best, std::abs(l - m));
        CHECK(best < 1e-8);
      }
    }
  }

  TEST_CASE("property: tf_of inverts minimal_realization") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const int m = uniform_int(rng, 1, 2);
      const RationalMatrix g = trial % 3 == 0   ? ct_ni_stable(rng, m, 2)
                               : trial % 3 == 1 ? dt_symmetric_arbitrary(rng, m, 2)
                                                : cayley_ct_to_dt(ct_ni_boundary(rng, m, 2));
      const StateSpace ss = minimal_realization(g);
      CHECK(is_minimal(ss));
      CHECK(coefficient_distance(tf_of(ss), g) < 1e-7);
    }
  }

  TEST_CASE("property: realization order equals McMillan degree") {
    Rng rng(24);
    for (int trial = 0; trial < 30; ++trial) {
      const RationalMatrix g = trial % 2 ? ct_ni_stable(rng, 2, 2) : ct_symmetric_arbitrary(rng, 2, 2);
      const int n = minimal_realization(g).n();
      CHECK(n == residue_degree(g));
      CHECK(n == hankel_degree(g, n + 2));
    }
    // Double pole: (2s+1)/(s+1)^2 has degree 2; a repeated pole in a diagonal matrix has degree 2 as well.
    RationalMatrix d(2, CT);
    d(0, 0) = d(1, 1) = RationalScalar(Polynomial{1}, Polynomial{1, 1});
    CHECK(minimal_realization(d).n() == 2);
    CHECK(residue_degree(d) == 2);
  }
}
