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

#include <algorithm>
#include <cmath>

#include "checks.hpp"
#include "nipr/analysis.hpp"
#include "nipr/error.hpp"
#include "nipr/series.hpp"

namespace nipr {

using detail::Strictness;

namespace {

const cplx kI(0.0, 1.0);

void require_ct(const RationalMatrix& g) {
  if (g.domain() != Domain::CT) throw Error(ErrorKind::DomainMismatch, "expected a continuous-time matrix");
}

ClassificationReport start(const char* cls, const RationalMatrix& g, const Config& cfg) {
  ClassificationReport r;
  r.cls = cls;
  r.domain = g.domain();
  r.config = cfg;
  return r;
}

Condition no_rhp_poles(const detail::PoleLayout& pl) {
  Condition c{"no_rhp_poles", "no poles in Re{s} > 0", true, "", {}};
  if (!pl.unstable.empty()) {
    c.pass = false;
    c.witness.location = pl.unstable.front();
    c.detail = "pole at " + detail::fmt(pl.unstable.front());
  }
  return c;
}

Condition hurwitz(const std::vector<MatrixPole>& ps, double band) {
  Condition c{"hurwitz", "all poles in Re{s} < 0", true, "", {}};
  for (const MatrixPole& mp : ps) {
    if (mp.location.real() >= -band * (1.0 + std::abs(mp.location))) {
      c.pass = false;
      c.witness.location = mp.location;
      c.detail = "pole at " + detail::fmt(mp.location);
      return c;
    }
  }
  return c;
}

void note_multiplicity(ClassificationReport& r, const std::vector<MatrixPole>& ps) {
  (void)ps;
  r.notes.push_back("matrix pole multiplicity is the largest multiplicity over entries");
}

// Q = lim (1/w) i[G(iw) - G(iw)^*] from the Taylor expansion at 0.
std::optional<Mat> q_limit(const RationalMatrix& g) {
  const MatrixLaurent h = hermitian_series_at_zero(g, Kind::NegativeImaginary, 3);
  if (h.order != 0) return std::nullopt;
  return Mat(h.c[1].real());
}

// Branch test at infinity: every eigenvalue of the Hermitian boundary matrix
// decays no faster than w^-order with a positive coefficient.
struct DecayCheck {
  bool pass = false;
  double sigma0 = 0.0;  // +inf when all branches decay slower
  BranchAnalysis ba;
};

DecayCheck decay_check(const RationalMatrix& g, Kind kind, int order) {
  DecayCheck d;
  d.ba = endpoint_branches(g, kind, Endpoint::Infinity);
  d.pass = d.ba.all_positive() && (d.ba.branches.empty() || d.ba.max_order() <= order);
  d.sigma0 = d.pass ? d.ba.min_lead(order) : 0.0;
  return d;
}

// Smallest grid frequency beyond which w^order * lambda_min stays above sigma/2.
std::optional<double> decay_delta(const RationalMatrix& g, Kind kind, int order, double sigma, const Config& cfg) {
  if (!std::isfinite(sigma) || sigma <= 0.0) return std::nullopt;
  const BoundaryForm bf(g, kind);
  const std::vector<double> grid = ct_grid(cfg, false);
  std::optional<double> delta;
  for (auto it = grid.rbegin(); it != grid.rend(); ++it) {
    auto h = bf.at(*it);
    if (!h) break;
    if (std::pow(*it, order) * hermitian_eigs(*h).min < sigma / 2.0) break;
    delta = *it;
  }
  return delta;
}

}  // namespace

ClassificationReport classify_cpr(const RationalMatrix& F, const Config& cfg) {
  require_ct(F);
  ClassificationReport r = start("cpr", F, cfg);
  const std::vector<MatrixPole> ps = poles(F);
  const detail::PoleLayout pl = detail::layout(ps, Domain::CT, cfg.pole_band);
  r.add(no_rhp_poles(pl));
  r.add(detail::boundary_sign(F, Kind::PositiveReal, Strictness::NonNegative, cfg, ct_grid(cfg, true),
                              pl.boundary_freqs, &F, "boundary_sign",
                              "F(iw) + F(iw)^* >= 0 for all w", r));
  Condition c{"axis_poles", "imaginary-axis poles simple with Hermitian PSD residue", true, "", {}};
  std::vector<detail::BoundaryPole> axis = pl.upper;
  if (pl.at_zero) axis.insert(axis.begin(), *pl.at_zero);
  for (const detail::BoundaryPole& bp : axis) {
    if (bp.multiplicity > 1) {
      c.pass = false;
      c.witness.location = bp.location;
      c.detail = "pole at " + detail::fmt(bp.location) + " has multiplicity " + std::to_string(bp.multiplicity);
      break;
    }
    PoleDatum pd = residues_at(F, bp.location);
    pd.normalized_K0 = pd.residue_A1;
    r.boundary_poles.push_back(pd);
    if (!detail::is_psd(pd.normalized_K0, cfg.psd_tol)) {
      c.pass = false;
      c.witness.location = bp.location;
      c.witness.matrix = pd.normalized_K0;
      c.witness.value = detail::min_eig(pd.normalized_K0);
      c.detail = "residue at " + detail::fmt(bp.location) + " is not Hermitian PSD";
      break;
    }
  }
  r.add(c);
  Condition ci{"infinity_pole", "pole at infinity simple with Hermitian PSD K_inf", true, "", {}};
  const InfinityExpansion ie = infinity_expansion(F);
  if (ie.poly_coeffs.size() > 1) {
    ci.pass = false;
    ci.detail = "pole at infinity of order " + std::to_string(ie.poly_coeffs.size());
    ci.witness.value = static_cast<double>(ie.poly_coeffs.size());
  } else if (ie.poly_coeffs.size() == 1) {
    r.limits.K_inf = ie.poly_coeffs[0];
    if (!detail::is_psd(ie.poly_coeffs[0].cast<cplx>(), cfg.psd_tol)) {
      ci.pass = false;
      ci.witness.matrix = ie.poly_coeffs[0].cast<cplx>();
      ci.witness.value = detail::min_eig(ie.poly_coeffs[0].cast<cplx>());
      ci.detail = "K_inf is not Hermitian PSD";
    }
  }
  r.add(ci);
  note_multiplicity(r, ps);
  return r;
}

namespace {

ClassificationReport strict_pr(const RationalMatrix& F, const Config& cfg, bool strong) {
  require_ct(F);
  if (!F.is_proper()) throw Error(ErrorKind::ImproperInput, "strict positive realness requires a proper matrix");
  ClassificationReport r = start(strong ? "csspr" : "cwspr", F, cfg);
  const std::vector<MatrixPole> ps = poles(F);
  const detail::PoleLayout pl = detail::layout(ps, Domain::CT, cfg.pole_band);
  r.add(hurwitz(ps, cfg.pole_band));
  r.add(detail::boundary_sign(F, Kind::PositiveReal, Strictness::Positive, cfg, ct_grid(cfg, true),
                              pl.boundary_freqs, &F, "boundary_sign",
                              "F(iw) + F(-iw)^T > 0 for all real w", r));
  if (!strong) return r;

  const Mat finf = F.at_infinity();
  const Mat sym = finf + finf.transpose();
  r.limits.value_at_inf = sym;
  const MatrixLaurent ser = hermitian_series_at_infinity(F, Kind::PositiveReal, 4);
  if (ser.order <= 2) r.limits.w2_limit = Mat(ser.c[2 - ser.order].real());
  else r.limits.w2_limit = Mat::Zero(F.size(), F.size());
  Condition c{"asymptotic", "smallest eigenvalue of F(iw) + F(-iw)^T decays no faster than 1/w^2", true, "", {}};
  DecayCheck d = decay_check(F, Kind::PositiveReal, 2);
  const double scale = 1.0 + sym.norm();
  std::string bullet;
  if (detail::is_pd(sym.cast<cplx>(), cfg.psd_tol)) bullet = "F(inf) + F(inf)^T > 0";
  else if (sym.norm() <= cfg.psd_tol * scale) bullet = "F(inf) + F(inf)^T = 0, limit of w^2 [F(iw) + F(-iw)^T]";
  else bullet = "F(inf) + F(inf)^T singular, coercivity of w^2 [F(iw) + F(-iw)^T]";
  if (d.pass) {
    r.limits.sigma0_margin = d.sigma0;
    r.limits.delta = decay_delta(F, Kind::PositiveReal, 2, d.sigma0, cfg);
    c.detail = bullet + " holds";
    if (!std::isfinite(d.sigma0)) c.detail += "; no branch decays as fast as 1/w^2";
  } else {
    c.pass = false;
    r.limits.sigma0_margin = 0.0;
    c.witness.frequency = std::numeric_limits<double>::infinity();
    c.witness.matrix = r.limits.w2_limit->cast<cplx>();
    c.witness.value = detail::min_eig(c.witness.matrix->cast<cplx>());
    c.detail = bullet + " fails: lim w^2 [F(iw) + F(-iw)^T] has minimum eigenvalue " + detail::fmt(*c.witness.value);
  }
  r.add(c);
  r.add(detail::full_rank_condition(BoundaryForm(F, Kind::PositiveReal).para(), "F(s) + F(-s)^T has full normal rank"));
  r.notes.push_back("sigma and sigma0 in the coercivity condition are treated as the same constant");
  return r;
}

}  // namespace

ClassificationReport classify_csspr(const RationalMatrix& F, const Config& cfg) { return strict_pr(F, cfg, true); }
ClassificationReport classify_cwspr(const RationalMatrix& F, const Config& cfg) { return strict_pr(F, cfg, false); }

ClassificationReport classify_cni(const RationalMatrix& G, const Config& cfg) {
  require_ct(G);
  ClassificationReport r = start("cni", G, cfg);
  if (cfg.require_symmetric) r.add(detail::symmetry_condition(G));
  const std::vector<MatrixPole> ps = poles(G);
  const detail::PoleLayout pl = detail::layout(ps, Domain::CT, cfg.pole_band);
  r.add(no_rhp_poles(pl));
  r.add(detail::boundary_sign(G, Kind::NegativeImaginary, Strictness::NonNegative, cfg, ct_grid(cfg, false),
                              pl.boundary_freqs, &G, "boundary_sign",
                              "i[G(iw) - G(iw)^*] >= 0 for w in (0, inf)", r));

  Condition c3{"axis_poles", "poles at i*w0, w0 > 0, simple with K0 = i*A1 Hermitian PSD", true, "", {}};
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

  Condition c4{"origin_pole", "pole at s = 0 at most double with A1, A2 Hermitian PSD", true, "", {}};
  if (pl.at_zero) {
    if (pl.at_zero->multiplicity > 2) {
      c4.pass = false;
      c4.witness.location = 0.0;
      c4.witness.value = pl.at_zero->multiplicity;
      c4.detail = "pole at 0 has multiplicity " + std::to_string(pl.at_zero->multiplicity);
    } else {
      PoleDatum pd = residues_at(G, 0.0);
      r.boundary_poles.push_back(pd);
      if (!detail::is_psd(pd.quad_residue_A2, cfg.psd_tol)) {
        c4.pass = false;
        c4.witness.matrix = pd.quad_residue_A2;
        c4.witness.value = detail::min_eig(pd.quad_residue_A2);
        c4.detail = "quadratic residue A2 at 0 is not Hermitian PSD";
      } else if (!detail::is_psd(pd.residue_A1, cfg.psd_tol)) {
        c4.pass = false;
        c4.witness.matrix = pd.residue_A1;
        c4.witness.value = detail::min_eig(pd.residue_A1);
        c4.detail = "residue A1 at 0 is not Hermitian PSD";
      }
      if (!c4.pass) c4.witness.location = 0.0;
    }
  }
  r.add(c4);

  Condition c5{"infinity_pole", "pole at infinity at most double with Hermitian NSD coefficients", true, "", {}};
  const InfinityExpansion ie = infinity_expansion(G);
  if (ie.poly_coeffs.size() > 2) {
    c5.pass = false;
    c5.witness.value = static_cast<double>(ie.poly_coeffs.size());
    c5.detail = "pole at infinity of order " + std::to_string(ie.poly_coeffs.size());
  } else {
    for (size_t k = 0; k < ie.poly_coeffs.size(); ++k) {
      const CMat a = ie.poly_coeffs[k].cast<cplx>();
      if (!detail::is_nsd(a, cfg.psd_tol)) {
        c5.pass = false;
        c5.witness.matrix = a;
        c5.witness.value = hermitian_eigs(a).max;
        c5.detail = "coefficient of s^" + std::to_string(k + 1) + " is not Hermitian NSD";
        break;
      }
    }
  }
  r.add(c5);
  note_multiplicity(r, ps);
  return r;
}

namespace {

ClassificationReport strict_ni(const RationalMatrix& G, const Config& cfg, bool strong) {
  require_ct(G);
  if (!G.is_proper()) throw Error(ErrorKind::ImproperInput, "strict negative imaginary classes require a proper matrix");
  ClassificationReport r = start(strong ? "cssni" : "cwsni", G, cfg);
  if (cfg.require_symmetric) r.add(detail::symmetry_condition(G));
  const std::vector<MatrixPole> ps = poles(G);
  const detail::PoleLayout pl = detail::layout(ps, Domain::CT, cfg.pole_band);
  r.add(hurwitz(ps, cfg.pole_band));
  r.add(detail::boundary_sign(G, Kind::NegativeImaginary, Strictness::Positive, cfg, ct_grid(cfg, false),
                              pl.boundary_freqs, &G, "boundary_sign",
                              "i[G(iw) - G(iw)^*] > 0 for w in (0, inf)", r));
  if (!pl.at_zero) r.limits.Q = q_limit(G);
  if (!strong) return r;

  Condition c3{"decay", "min eigenvalue of w^3 i[G(iw) - G(iw)^*] bounded below by sigma0 > 0 for large w", true, "", {}};
  DecayCheck d = decay_check(G, Kind::NegativeImaginary, 3);
  if (d.pass) {
    r.limits.sigma0_margin = d.sigma0;
    r.limits.delta = decay_delta(G, Kind::NegativeImaginary, 3, d.sigma0, cfg);
    c3.detail = std::isfinite(d.sigma0) ? "sigma0 margin " + detail::fmt(d.sigma0)
                                        : "all branches decay slower than 1/w^3";
  } else {
    c3.pass = false;
    r.limits.sigma0_margin = 0.0;
    c3.witness.frequency = std::numeric_limits<double>::infinity();
    c3.witness.value = 0.0;
    if (d.ba.degenerate > 0) {
      c3.detail = "an eigenvalue branch vanishes faster than any resolved order";
    } else {
      const auto it = std::max_element(d.ba.branches.begin(), d.ba.branches.end(),
                                       [](const Branch& a, const Branch& b) { return a.order < b.order; });
      c3.detail = "eigenvalue branch decays as " + detail::fmt(it->lead) + "/w^" + std::to_string(it->order) +
                  ", faster than 1/w^3";
    }
  }
  r.add(c3);

  Condition c4{"q_limit", "Q = lim (1/w) i[G(iw) - G(iw)^*] as w -> 0+ is positive definite", true, "", {}};
  if (!r.limits.Q) {
    c4.pass = false;
    c4.detail = "G has a pole at the origin";
  } else {
    const CMat q = r.limits.Q->cast<cplx>();
    c4.witness.matrix = q;
    c4.witness.value = detail::min_eig(q);
    if (!detail::is_pd(q, cfg.psd_tol)) {
      c4.pass = false;
      c4.detail = "Q has minimum eigenvalue " + detail::fmt(*c4.witness.value);
    } else {
      c4.detail = "Q minimum eigenvalue " + detail::fmt(*c4.witness.value);
    }
  }
  r.add(c4);
  r.add(detail::full_rank_condition(BoundaryForm(G, Kind::NegativeImaginary).para(),
                                    "i[G(s) - G(-s)^T] has full normal rank"));
  return r;
}

}  // namespace

ClassificationReport classify_cssni(const RationalMatrix& G, const Config& cfg) { return strict_ni(G, cfg, true); }
ClassificationReport classify_cwsni(const RationalMatrix& G, const Config& cfg) { return strict_ni(G, cfg, false); }

ScalarStructureReport scalar_ni_structure_checks(const RationalScalar& g) {
  ScalarStructureReport r;
  if (g.is_zero()) {
    r.strictly_proper = true;
    r.relative_degree = 0;
    return r;
  }
  r.relative_degree = g.relative_degree();
  r.strictly_proper = r.relative_degree > 0;
  if (g.num().degree() > 0) r.zeros = clustered_roots(g.num());
  for (const Root& z : r.zeros) {
    if (std::abs(z.value) <= kClusterTol) r.origin_zero_multiplicity += z.multiplicity;
    const double band = 1e-7 * (1.0 + std::abs(z.value));
    if (z.value.real() > band) r.zeros_in_closed_lhp = false;
    if (z.value.real() >= -band) r.zeros_in_open_lhp = false;
  }
  r.ni_candidate = !r.strictly_proper || (r.relative_degree <= 2 && r.zeros_in_closed_lhp);
  r.ssni_candidate = r.origin_zero_multiplicity <= 1;
  return r;
}

const std::vector<std::string>& class_names() {
  static const std::vector<std::string> names = {"cpr", "csspr", "cwspr", "cni", "cssni", "cwsni",
                                                 "dpr", "dsspr", "dni", "dssni", "dwsni"};
  return names;
}

ClassificationReport classify(const RationalMatrix& g, std::string_view cls, const Config& cfg) {
  if (cls == "cpr") return classify_cpr(g, cfg);
  if (cls == "csspr") return classify_csspr(g, cfg);
  if (cls == "cwspr") return classify_cwspr(g, cfg);
  if (cls == "cni") return classify_cni(g, cfg);
  if (cls == "cssni") return classify_cssni(g, cfg);
  if (cls == "cwsni") return classify_cwsni(g, cfg);
  if (cls == "dpr") return classify_dpr(g, cfg);
  if (cls == "dsspr") return classify_dsspr(g, cfg);
  if (cls == "dni") return classify_dni(g, cfg);
  if (cls == "dssni") return classify_dssni(g, cfg);
  if (cls == "dwsni") return classify_dwsni(g, cfg);
  throw Error(ErrorKind::PreconditionViolated, "unknown class '" + std::string(cls) + "'");
}

}  // namespace nipr
