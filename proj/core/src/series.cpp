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

#include "nipr/series.hpp"

#include <algorithm>
#include <cmath>

#include "nipr/error.hpp"

namespace nipr {

std::vector<cplx> series_divide(const std::vector<cplx>& a, const std::vector<cplx>& b, int n) {
  std::vector<cplx> q(n, 0.0);
  for (int k = 0; k < n; ++k) {
    cplx acc = k < static_cast<int>(a.size()) ? a[k] : cplx(0.0);
    for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) acc -= b[j] * q[k - j];
    q[k] = acc / b[0];
  }
  return q;
}

int pole_order_at(const RationalScalar& g, cplx p) {
  if (g.den().degree() <= 0) return 0;
  for (const Root& r : clustered_roots(g.den())) {
    const double rad = cluster_radius(std::max(2, r.multiplicity));
    if (std::abs(r.value - p) <= rad * (1.0 + std::abs(p))) return r.multiplicity;
  }
  return 0;
}

Laurent laurent_at(const RationalScalar& g, cplx p, int pole_order, int nterms) {
  CPoly q = to_complex(g.den());
  for (int k = 0; k < pole_order; ++k) q = deflate(q, p);
  const CPoly ns = taylor_shift(to_complex(g.num()), p);
  const CPoly qs = taylor_shift(q, p);
  Laurent out;
  out.order = -pole_order;
  out.c = ns.empty() ? std::vector<cplx>(nterms, 0.0) : series_divide(ns, qs, nterms);
  return out;
}

Laurent laurent_at_infinity(const RationalScalar& g, int nterms) {
  Laurent out;
  if (g.is_zero()) {
    out.c.assign(nterms, 0.0);
    return out;
  }
  const int dn = g.num().degree();
  const int dd = g.den().degree();
  // g(1/t) = t^(dd - dn) * rev(num)(t) / rev(den)(t)
  std::vector<cplx> rn(g.num().coeffs().rbegin(), g.num().coeffs().rend());
  std::vector<cplx> rd(g.den().coeffs().rbegin(), g.den().coeffs().rend());
  out.order = dd - dn;
  out.c = series_divide(rn, rd, nterms);
  return out;
}

std::vector<CMat> taylor_matrix(const RationalMatrix& r, cplx p, int nterms) {
  const int m = r.size();
  std::vector<CMat> out(nterms, CMat::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const RationalScalar& g = r(i, j);
      if (g.is_zero()) continue;
      if (pole_order_at(g, p) > 0)
        throw Error(ErrorKind::PoleProximity, "Taylor expansion requested at a pole");
      Laurent l = laurent_at(g, p, 0, nterms);
      for (int k = 0; k < nterms; ++k) out[k](i, j) = l.c[k];
    }
  }
  return out;
}

std::vector<CMat> infinity_matrix(const RationalMatrix& r, int nterms) {
  const int m = r.size();
  std::vector<CMat> out(nterms, CMat::Zero(m, m));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const RationalScalar& g = r(i, j);
      if (g.is_zero()) continue;
      if (!g.is_proper()) throw Error(ErrorKind::ImproperInput, "expansion at infinity of an improper entry");
      Laurent l = laurent_at_infinity(g, nterms);
      for (int k = 0; k < nterms; ++k) {
        const int idx = l.order + k;
        if (idx < nterms) out[idx](i, j) = l.c[k];
      }
    }
  }
  return out;
}

}  // namespace nipr
