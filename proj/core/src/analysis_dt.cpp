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

#include "checks.hpp"
#include "nipr/analysis.hpp"
#include "nipr/error.hpp"
#include "nipr/series.hpp"

namespace nipr {

using detail::Strictness;

namespace {

void require_dt(const RationalMatrix& g) {
  if (g.domain() != Domain::DT) throw Error(ErrorKind::DomainMismatch, "expected a discrete-time matrix");
}

void require_proper(const RationalMatrix& g, const char* what) {
  if (!g.is_proper()) throw Error(ErrorKind::ImproperInput, std::string(what) + " requires a proper matrix");
}

ClassificationReport start(const char* cls, const RationalMatrix& g, const Config& cfg) {
  ClassificationReport r;
  r.cls = cls;
  r.domain = g.domain();
  r.config = cfg;
  return r;
}

Condition outside_disc(const detail::PoleLayout& pl) {
  Condition c{"no_exterior_poles", "no poles in |z| > 1", true, "", {}};
  if (!pl.unstable.empty()) {
    c.pass = false;
    c.witness.location = pl.unstable.front();
    c.detail = "pole at " + detail::fmt(pl.unstable.front());
  }
  return c;
}

Condition schur(const std::vector<MatrixPole>& ps, double band) {
  Condition c{"schur", "all poles in |z| < 1", true, "", {}};
  for (const MatrixPole& mp : ps) {
    if (std::abs(mp.location) >= 1.0 - band) {
      c.pass = false;
      c.witness.location = mp.location;
      c.detail = "pole at " + detail::fmt(mp.location) + " with |p| = " + detail::fmt(std::abs(mp.location));
      return c;
    }
  }
  return c;
}

// -(D1 + D1^T) where D1 is the first Taylor coefficient at z0 = +-1.
Mat circle_limit(const RationalMatrix& g, double z0) {
  const std::vector<CMat> t = taylor_matrix(g, cplx(z0, 0.0), 2);
  const Mat d1 = t[1].real();
  return -(d1 + d1.transpose());
}

Condition pd_limit(const char* id, const char* desc, const Mat& q, const Config& cfg) {
  Condition c{id, desc, true, "", {}};
  const CMat qc = q.cast<cplx>();
  c.witness.matrix = qc;
  c.witness.value = detail::min_eig(qc);
  c.pass = detail::is_pd(qc, cfg.psd_tol);
  c.detail = "minimum eigenvalue " + detail::fmt(*c.witness.value);
  return c;
}

}  // namespace

ClassificationReport classify_dpr(const RationalMatrix& F, const Config& cfg) {
  require_dt(F);
  require_proper(F, "discrete positive realness");
  ClassificationReport r = start("dpr", F, cfg);
  const std::vector<MatrixPole> ps = poles(F);
  const detail::PoleLayout pl = detail::layout(ps, Domain::DT, cfg.pole_band);
  r.add(outside_disc(pl));
  // Real coefficients make the Hermitian part even in theta, so [0, pi] covers the circle.
  r.add(detail::boundary_sign(F, Kind::PositiveReal, Strictness::NonNegative, cfg, dt_grid(cfg, true),
                              pl.boundary_freqs, nullptr, "boundary_sign",
                              "F(e^{it}) + F(e^{it})^* >= 0 on the unit circle", r));
  Condition c{"circle_poles", "unit-circle poles simple with (1/z0) A1 Hermitian PSD", true, "", {}};
  std::vector<detail::BoundaryPole> circ = pl.upper;
  if (pl.at_zero) circ.insert(circ.begin(), *pl.at_zero);
  if (pl.at_minus) circ.push_back(*pl.at_minus);
  for (const detail::BoundaryPole& bp : circ) {
    if (bp.multiplicity > 1) {
      c.pass = false;
      c.witness.location = bp.location;
      c.detail = "pole at " + detail::fmt(bp.location) + " has multiplicity " + std::to_string(bp.multiplicity);
      break;
    }
    PoleDatum pd = residues_at(F, bp.location);
    pd.normalized_K0 = pd.residue_A1 / bp.location;
    r.boundary_poles.push_back(pd);
    if (!detail::is_psd(pd.normalized_K0, cfg.psd_tol)) {
      c.pass = false;
      c.witness.location = bp.location;
      c.witness.matrix = pd.normalized_K0;
      c.witness.value = detail::min_eig(pd.normalized_K0);
      c.detail = "normalized residue at " + detail::fmt(bp.location) + " is not Hermitian PSD";
      break;
    }
  }
  r.add(c);
  return r;
}

ClassificationReport classify_dsspr(const RationalMatrix& F, const Config& cfg) {
  require_dt(F);
  require_proper(F, "discrete strict positive realness");
  ClassificationReport r = start("dsspr", F, cfg);
  const std::vector<MatrixPole> ps = poles(F);
  r.add(schur(ps, cfg.pole_band));
  r.add(detail::boundary_sign(F, Kind::PositiveReal, Strictness::Positive, cfg, dt_grid(cfg, true), {}, nullptr,
                              "boundary_sign", "F(e^{it}) + F(e^{it})^* > 0 on the unit circle", r));
  r.add(detail::full_rank_condition(BoundaryForm(F, Kind::PositiveReal).para(),
                                    "F(z) + F(1/z)^T has full normal rank"));
  r.notes.push_back("normal rank decided on the determinant as a rational function");
  return r;
}

ClassificationReport classify_dni(const RationalMatrix& G, const Config& cfg) {
  require_dt(G);
  ClassificationReport r = start("dni", G, cfg);
  if (cfg.require_symmetric) r.add(detail::symmetry_condition(G));
  if (!G.is_proper()) {
    r.add(Condition{"no_exterior_poles", "no poles in |z| > 1", false, "improper: pole at infinity",
                    Witness{std::nullopt, std::nullopt, std::nullopt, std::nullopt}});
    return r;
  }
  const std::vector<MatrixPole> ps = poles(G);
  const detail::PoleLayout pl = detail::layout(ps, Domain::DT, cfg.pole_band);
  r.add(outside_disc(pl));
  const RationalMatrix gc = cayley_dt_to_ct(G);
  r.add(detail::boundary_sign(G, Kind::NegativeImaginary, Strictness::NonNegative, cfg, dt_grid(cfg, false),
                              pl.boundary_freqs, &gc, "boundary_sign",
                              "i[G(e^{it}) - G(e^{it})^*] >= 0 for t in (0, pi)", r));

  Condition c3{"circle_poles", "poles at e^{it0}, t0 in (0, pi), simple with (i/z0) A1 Hermitian PSD", true, "", {}};
  for (const detail::BoundaryPole& bp : pl.upper) {
    if (bp.multiplicity > 1) {
      c3.pass = false;
      c3.witness.location = bp.location;
      c3.detail = "pole at " + detail::fmt(bp.location) + " has multiplicity " + std::to_string(bp.multiplicity);
      break;
    }
    PoleDatum pd = residues_at(G, bp.location);
    r.boundary_poles.push_back(pd);
    if (!detail::is_psd(pd.normalized_K0, cfg.psd_tol)) {
      c3.pass = false;
      c3.witness.location = bp.location;
      c3.witness.matrix = pd.normalized_K0;
      c3.witness.value = detail::min_eig(pd.normalized_K0);
      c3.detail = "K0 at " + detail::fmt(bp.location) + " is not Hermitian PSD";
      break;
    }
  }
  r.add(c3);

  // At z = 1 the conditions are A2 >= 0, A1 - A2 >= 0; at z = -1 they are
  // A2 <= 0, A1 + A2 >= 0.
  auto real_axis = [&](const std::optional<detail::BoundaryPole>& bp, double z0, const char* id) {
    const std::string at = z0 > 0 ? "z = 1" : "z = -1";
    Condition c{id,
                z0 > 0 ? "pole at z = 1 at most double with A2 >= 0 and A1 >= A2"
                       : "pole at z = -1 at most double with A2 <= 0 and A1 >= -A2",
                true, "", {}};
    if (!bp) return c;
    c.witness.location = z0;
    if (bp->multiplicity > 2) {
      c.pass = false;
      c.witness.value = bp->multiplicity;
      c.detail = "pole at " + at + " has multiplicity " + std::to_string(bp->multiplicity);
      return c;
    }
    const PoleDatum pd = residues_at(G, z0);
    r.boundary_poles.push_back(pd);
    const CMat a2 = z0 > 0 ? pd.quad_residue_A2 : CMat(-pd.quad_residue_A2);
    const CMat a12 = z0 > 0 ? CMat(pd.residue_A1 - pd.quad_residue_A2) : CMat(pd.residue_A1 + pd.quad_residue_A2);
    if (!detail::is_psd(a2, cfg.psd_tol)) {
      c.pass = false;
      c.witness.matrix = pd.quad_residue_A2;
      c.witness.value = detail::min_eig(a2);
      c.detail = "quadratic residue at " + at + " has the wrong sign";
    } else if (!detail::is_psd(a12, cfg.psd_tol)) {
      c.pass = false;
      c.witness.matrix = a12;
      c.witness.value = detail::min_eig(a12);
      c.detail = std::string(z0 > 0 ? "A1 - A2" : "A1 + A2") + " at " + at + " is not Hermitian PSD";
    }
    return c;
  };
  r.add(real_axis(pl.at_zero, 1.0, "pole_at_one"));
  r.add(real_axis(pl.at_minus, -1.0, "pole_at_minus_one"));
  r.notes.push_back("matrix pole multiplicity is the largest multiplicity over entries");
  return r;
}

namespace {

ClassificationReport strict_dni(const RationalMatrix& G, const Config& cfg, bool strong) {
  require_dt(G);
  require_proper(G, "strict discrete negative imaginary classes");
  ClassificationReport r = start(strong ? "dssni" : "dwsni", G, cfg);
  if (cfg.require_symmetric) r.add(detail::symmetry_condition(G));
  const std::vector<MatrixPole> ps = poles(G);
  r.add(schur(ps, cfg.pole_band));
  if (!r.find("schur")->pass) {
    // A circle pole makes the boundary form undefined; report the remaining
    // condition from the grid alone.
    const detail::PoleLayout pl = detail::layout(ps, Domain::DT, cfg.pole_band);
    r.add(detail::boundary_sign(G, Kind::NegativeImaginary, Strictness::Positive, cfg, dt_grid(cfg, false),
                                pl.boundary_freqs, nullptr, "boundary_sign",
                                "i[G(e^{it}) - G(e^{it})^*] > 0 for t in (0, pi)", r));
    return r;
  }
  const RationalMatrix gc = cayley_dt_to_ct(G);
  r.add(detail::boundary_sign(G, Kind::NegativeImaginary, Strictness::Positive, cfg, dt_grid(cfg, false), {}, &gc,
                              "boundary_sign", "i[G(e^{it}) - G(e^{it})^*] > 0 for t in (0, pi)", r));
  r.circle.Q0 = circle_limit(G, 1.0);
  r.circle.Qpi = circle_limit(G, -1.0);
  if (!strong) return r;
  r.add(pd_limit("q0_limit", "Q0 = lim (1/sin t) i[G - G^*] as t -> 0+ is positive definite", *r.circle.Q0, cfg));
  r.add(pd_limit("qpi_limit", "Qpi = lim (1/sin t) i[G - G^*] as t -> pi- is positive definite", *r.circle.Qpi, cfg));
  r.add(detail::full_rank_condition(BoundaryForm(G, Kind::NegativeImaginary).para(),
                                    "i[G(z) - G(1/z)^T] has full normal rank"));
  return r;
}

}  // namespace

ClassificationReport classify_dssni(const RationalMatrix& G, const Config& cfg) { return strict_dni(G, cfg, true); }
ClassificationReport classify_dwsni(const RationalMatrix& G, const Config& cfg) { return strict_dni(G, cfg, false); }

GainOrder gain_order_check(const RationalMatrix& G, const Config& cfg) {
  require_dt(G);
  auto g1 = G.try_eval(1.0);
  auto gm = G.try_eval(-1.0);
  if (!g1 || !gm) throw Error(ErrorKind::PoleAtPlusMinusOne, "G has a pole at z = 1 or z = -1");
  GainOrder out;
  out.difference = (*g1 - *gm).real();
  const CMat d = out.difference.cast<cplx>();
  const CMat sym = (d + d.adjoint()) / 2.0;
  out.psd = detail::is_psd(sym, cfg.psd_tol);
  out.pd = detail::is_pd(sym, cfg.psd_tol);
  return out;
}

}  // namespace nipr
