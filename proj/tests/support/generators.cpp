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


#include "generators.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace nipr::testing {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Mat random_matrix(Rng& rng, int rows, int cols) {
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) m(i, k) = uniform(rng, -1.0, 1.0);
  return m;
}

Mat random_symmetric(Rng& rng, int m) {
  const Mat a = random_matrix(rng, m, m);
  return (a + a.transpose()) / 2.0;
}

Mat random_psd(Rng& rng, int m, int rank) {
  Mat out = Mat::Zero(m, m);
  for (int k = 0; k < rank; ++k) {
    const Mat v = random_matrix(rng, m, 1);
    out += v * v.transpose();
  }
  return out;
}

Mat random_pd(Rng& rng, int m) { return random_psd(rng, m, m) + 0.1 * Mat::Identity(m, m); }

RationalScalar first_order(double a, double num0) { return RationalScalar(Polynomial{num0}, Polynomial{-a, 1.0}); }

RationalScalar second_order(double zeta, double w) {
  return RationalScalar(Polynomial{1.0}, Polynomial{w * w, 2.0 * zeta * w, 1.0});
}

namespace {

RationalMatrix add_term(const RationalMatrix& g, const RationalScalar& s, const Mat& r) {
  return g + RationalMatrix::scaled(s, r, g.domain());
}

Mat rank_weight(Rng& rng, int m) { return random_psd(rng, m, uniform_int(rng, 1, m)); }

}  // namespace

RationalMatrix ct_ni_stable(Rng& rng, int m, int modes) {
  RationalMatrix g = RationalMatrix::constant(random_symmetric(rng, m), Domain::CT);
  for (int k = 0; k < modes; ++k) {
    if (uniform(rng, 0, 1) < 0.5) {
      g = add_term(g, first_order(-uniform(rng, 0.2, 3.0)), rank_weight(rng, m));
    } else {
      g = add_term(g, second_order(uniform(rng, 0.05, 0.9), uniform(rng, 0.3, 3.0)), rank_weight(rng, m));
    }
  }
  return g;
}

RationalMatrix ct_ni_boundary(Rng& rng, int m, int modes) {
  RationalMatrix g = ct_ni_stable(rng, m, modes);
  const double r = uniform(rng, 0, 1);
  if (r < 0.3) {
    g = add_term(g, RationalScalar(Polynomial{1.0}, Polynomial{0.0, 1.0}), rank_weight(rng, m));
  } else if (r < 0.5) {
    g = add_term(g, RationalScalar(Polynomial{1.0}, Polynomial{0.0, 0.0, 1.0}), rank_weight(rng, m));
  } else if (r < 0.8) {
    const double w = uniform(rng, 0.3, 3.0);
    g = add_term(g, RationalScalar(Polynomial{1.0}, Polynomial{w * w, 0.0, 1.0}), rank_weight(rng, m));
  }
  return g;
}

RationalMatrix ct_pr(Rng& rng, int m, int modes) {
  RationalMatrix g = RationalMatrix::constant(random_psd(rng, m, uniform_int(rng, 0, m)), Domain::CT);
  for (int k = 0; k < modes; ++k) {
    const double r = uniform(rng, 0, 1);
    RationalScalar s;
    if (r < 0.35) {
      s = first_order(-uniform(rng, 0.2, 3.0));
    } else if (r < 0.6) {
      const double zeta = uniform(rng, 0.05, 0.9), w = uniform(rng, 0.3, 3.0);
      s = RationalScalar(Polynomial{0.0, 1.0}, Polynomial{w * w, 2.0 * zeta * w, 1.0});
    } else if (r < 0.85) {
      s = RationalScalar(Polynomial{uniform(rng, 0.1, 3.0), 1.0}, Polynomial{uniform(rng, 0.1, 3.0), 1.0});
    } else {
      s = RationalScalar(Polynomial{1.0}, Polynomial{0.0, 1.0});
    }
    g = add_term(g, s, rank_weight(rng, m));
  }
  return g;
}

RationalMatrix ct_symmetric_arbitrary(Rng& rng, int m, int modes) {
  RationalMatrix g = RationalMatrix::constant(random_symmetric(rng, m), Domain::CT);
  for (int k = 0; k < modes; ++k) {
    RationalScalar s;
    if (uniform(rng, 0, 1) < 0.5) {
      s = RationalScalar(Polynomial{uniform(rng, -1, 1), uniform(rng, -1, 1)}, Polynomial{uniform(rng, 0.2, 3.0), 1.0});
    } else {
      const double zeta = uniform(rng, 0.05, 0.9), w = uniform(rng, 0.3, 3.0);
      s = RationalScalar(Polynomial{uniform(rng, -1, 1), uniform(rng, -1, 1)}, Polynomial{w * w, 2.0 * zeta * w, 1.0});
    }
    g = add_term(g, s, random_symmetric(rng, m));
  }
  return g;
}

RationalMatrix dt_ni_stable(Rng& rng, int m, int modes) { return cayley_ct_to_dt(ct_ni_stable(rng, m, modes)); }

RationalMatrix dt_ni_boundary(Rng& rng, int m, int modes) { return cayley_ct_to_dt(ct_ni_boundary(rng, m, modes)); }

RationalMatrix dt_symmetric_arbitrary(Rng& rng, int m, int modes) {
  RationalMatrix g = RationalMatrix::constant(random_symmetric(rng, m), Domain::DT);
  for (int k = 0; k < modes; ++k) {
    RationalScalar s;
    if (uniform(rng, 0, 1) < 0.5) {
      s = RationalScalar(Polynomial{uniform(rng, -1, 1), uniform(rng, -1, 1)},
                         Polynomial{-uniform(rng, -0.9, 0.9), 1.0});
    } else {
      const double rho = uniform(rng, 0.2, 0.92), th = uniform(rng, 0.2, 2.9);
      s = RationalScalar(Polynomial{uniform(rng, -1, 1), uniform(rng, -1, 1)},
                         Polynomial{rho * rho, -2.0 * rho * std::cos(th), 1.0});
    }
    g = add_term(g, s, random_symmetric(rng, m));
  }
  return g;
}

StateSpace dt_lemma_system(Rng& rng, int max_n, int m, bool ni, double margin) {
  for (;;) {
    const int modes = uniform_int(rng, 1, std::max(1, max_n / 2 + 1));
    const RationalMatrix g = ni ? dt_ni_stable(rng, m, modes) : dt_symmetric_arbitrary(rng, m, modes);
    const StateSpace ss = minimal_realization(g);
    if (ss.n() == 0 || ss.n() > max_n) continue;
    bool ok = true;
    for (cplx l : spectrum(ss))
      if (std::abs(l - 1.0) < margin || std::abs(l + 1.0) < margin || std::abs(l) >= 1.0 - 1e-6) ok = false;
    if (ok && is_minimal(ss)) return ss;
  }
}

StateSpace random_stable_ss(Rng& rng, int n, int m, Domain d) {
  StateSpace ss;
  ss.domain = d;
  Mat a = random_matrix(rng, n, n);
  if (n > 0) {
    Eigen::EigenSolver<Mat> es(a, false);
    double rho = 0.0, re = -1e300;
    for (int i = 0; i < n; ++i) {
      rho = std::max(rho, std::abs(es.eigenvalues()(i)));
      re = std::max(re, es.eigenvalues()(i).real());
    }
    if (d == Domain::DT) {
      a *= uniform(rng, 0.3, 0.9) / std::max(rho, 1e-12);
    } else {
      a -= (re + uniform(rng, 0.2, 1.5)) * Mat::Identity(n, n);
    }
  }
  ss.A = a;
  ss.B = random_matrix(rng, n, m);
  ss.C = random_matrix(rng, m, n);
  ss.D = random_matrix(rng, m, m);
  return ss;
}

std::vector<cplx> region_points(Rng& rng, Domain d, int count, bool closed) {
  std::vector<cplx> out;
  for (int k = 0; k < count; ++k) {
    if (d == Domain::CT) {
      const double re = closed && k % 4 == 0 ? 0.0 : std::exp(uniform(rng, -4, 3));
      out.emplace_back(re, std::exp(uniform(rng, -4, 3)));
    } else {
      const double r = closed && k % 4 == 0 ? 1.0 : 1.0 + std::exp(uniform(rng, -6, 2));
      out.push_back(std::polar(r, uniform(rng, 1e-3, M_PI - 1e-3)));
    }
  }
  return out;
}

}  // namespace nipr::testing
