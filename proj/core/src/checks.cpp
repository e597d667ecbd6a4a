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

#include "checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include <Eigen/Eigenvalues>

#include "nipr/error.hpp"

namespace nipr {

std::vector<double> ct_grid(const Config& cfg, bool include_zero) {
  std::vector<double> g;
  if (include_zero) g.push_back(0.0);
  const int n = std::max(2, cfg.ct_grid);
  const double a = std::log10(cfg.omega_min), b = std::log10(cfg.omega_max);
  for (int k = 0; k < n; ++k) g.push_back(std::pow(10.0, a + (b - a) * k / (n - 1)));
  return g;
}

std::vector<double> dt_grid(const Config& cfg, bool closed) {
  std::vector<double> g;
  const int n = std::max(2, cfg.dt_grid);
  if (closed) {
    for (int k = 0; k < n; ++k) g.push_back(M_PI * k / (n - 1));
  } else {
    for (int k = 1; k <= n; ++k) g.push_back(M_PI * k / (n + 1));
  }
  return g;
}

std::vector<SweepRow> sweep(const RationalMatrix& g, Kind kind, const std::vector<double>& grid) {
  const BoundaryForm bf(g, kind);
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double w : grid) {
    SweepRow row;
    row.freq = w;
    const cplx p = g.domain() == Domain::CT ? cplx(0.0, w) : std::polar(1.0, w);
    auto h = bf.at(w);
    auto v = g.try_eval(p);
    if (!h || !v) {
      row.defined = false;
      rows.push_back(row);
      continue;
    }
    const EigenSummary es = hermitian_eigs(*h);
    row.min_eig = es.min;
    row.max_eig = es.max;
    row.value = *v;
    if (kind == Kind::NegativeImaginary) {
      const double d = g.domain() == Domain::CT ? w : std::sin(w);
      if (d != 0.0) row.scaled = es.min / d;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace detail {

namespace {

struct Sample {
  double w;
  double min;
  double norm;
  double margin;
};

// The non-strict slack also scales with |G|: near a boundary pole the
// Hermitian part is a difference of large values and cannot be resolved
// below tol * |G|.
std::optional<Sample> sample(const BoundaryForm& bf, double w, Strictness st, double tol) {
  auto h = bf.at(w);
  if (!h) return std::nullopt;
  const EigenSummary es = hermitian_eigs(*h);
  if (!std::isfinite(es.min) || !std::isfinite(es.norm)) return std::nullopt;
  const double margin = st == Strictness::NonNegative
                            ? es.min + tol * (1.0 + std::max(es.norm, bf.value_norm(w)))
                            : es.min - tol * es.norm;
  return Sample{w, es.min, es.norm, margin};
}

bool near_any(double w, const std::vector<double>& skip) {
  return std::any_of(skip.begin(), skip.end(),
                     [w](double f) { return std::abs(w - f) <= 1e-6 * (1.0 + std::abs(f)); });
}

}  // namespace

ScanResult scan(const BoundaryForm& bf, const std::vector<double>& grid, Strictness st, double tol,
                const std::vector<double>& skip, bool log_space) {
  ScanResult out;
  std::vector<Sample> s;
  s.reserve(grid.size());
  for (double w : grid) {
    if (near_any(w, skip)) continue;
    if (auto v = sample(bf, w, st, tol)) s.push_back(*v);
  }
  auto consider = [&](const Sample& v) {
    ++out.evaluated;
    if (v.margin < out.worst_margin) {
      out.worst_margin = v.margin;
      out.worst_freq = v.w;
      out.worst_min = v.min;
    }
  };
  for (const Sample& v : s) consider(v);
  // Golden-section refinement of interior dips.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (size_t k = 1; k + 1 < s.size(); ++k) {
    if (s[k].margin > s[k - 1].margin || s[k].margin > s[k + 1].margin) continue;
    if (s[k].min >= 10.0 * tol * (1.0 + s[k].norm)) continue;
    const bool lg = log_space && s[k - 1].w > 0.0;
    auto to_x = [lg](double w) { return lg ? std::log(w) : w; };
    auto to_w = [lg](double x) { return lg ? std::exp(x) : x; };
    double a = to_x(s[k - 1].w), b = to_x(s[k + 1].w);
    auto f = [&](double x) -> double {
      const double w = to_w(x);
      if (near_any(w, skip)) return std::numeric_limits<double>::infinity();
      auto v = sample(bf, w, st, tol);
      return v ? v->margin : std::numeric_limits<double>::infinity();
    };
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int it = 0; it < 60 && std::abs(b - a) > 1e-14 * (1.0 + std::abs(a)); ++it) {
      if (fc < fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - gr * (b - a);
        fc = f(c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + gr * (b - a);
        fd = f(d);
      }
    }
    const double x = fc < fd ? c : d;
    if (auto v = sample(bf, to_w(x), st, tol); v && !near_any(v->w, skip)) consider(*v);
  }
  if (out.evaluated == 0) return out;
  out.pass = st == Strictness::NonNegative ? out.worst_margin >= 0.0 : out.worst_margin > 0.0;
  return out;
}

PoleLayout layout(const std::vector<MatrixPole>& ps, Domain d, double band) {
  PoleLayout out;
  for (const MatrixPole& mp : ps) {
    const cplx p = mp.location;
    if (d == Domain::CT) {
      const double rb = band * (1.0 + std::abs(p));
      if (p.real() > rb) {
        out.unstable.push_back(p);
        out.strictly_stable = false;
      } else if (p.real() >= -rb) {
        out.strictly_stable = false;
        if (std::abs(p.imag()) <= rb) {
          if (!out.at_zero) out.at_zero = BoundaryPole{0.0, mp.multiplicity, 0.0};
          out.boundary_freqs.push_back(0.0);
        } else if (p.imag() > 0.0) {
          out.upper.push_back({cplx(0.0, p.imag()), mp.multiplicity, p.imag()});
          out.boundary_freqs.push_back(p.imag());
        }
      }
    } else {
      const double r = std::abs(p);
      if (r > 1.0 + band) {
        out.unstable.push_back(p);
        out.strictly_stable = false;
      } else if (r >= 1.0 - band) {
        out.strictly_stable = false;
        const double th = std::arg(p);
        if (std::abs(th) <= band) {
          if (!out.at_zero) out.at_zero = BoundaryPole{1.0, mp.multiplicity, 0.0};
          out.boundary_freqs.push_back(0.0);
        } else if (M_PI - std::abs(th) <= band) {
          if (!out.at_minus) out.at_minus = BoundaryPole{-1.0, mp.multiplicity, M_PI};
          out.boundary_freqs.push_back(M_PI);
        } else if (th > 0.0) {
          out.upper.push_back({std::polar(1.0, th), mp.multiplicity, th});
          out.boundary_freqs.push_back(th);
        }
      }
    }
  }
  return out;
}

double rel_hermitian_defect(const CMat& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).norm() / (1.0 + m.norm());
}

double min_eig(const CMat& m) {
  if (m.size() == 0) return 0.0;
  return hermitian_eigs(m).min;
}

bool is_psd(const CMat& m, double tol) {
  if (m.size() == 0) return true;
  if (rel_hermitian_defect(m) > 1e-6) return false;
  const EigenSummary es = hermitian_eigs(m);
  return es.min >= -tol * (1.0 + es.norm);
}

bool is_nsd(const CMat& m, double tol) { return is_psd(CMat(-m), tol); }

bool is_pd(const CMat& m, double tol) {
  if (m.size() == 0) return true;
  if (rel_hermitian_defect(m) > 1e-6) return false;
  const EigenSummary es = hermitian_eigs(m);
  return es.min > tol * (1.0 + es.norm);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt(cplx v) {
  if (v.imag() == 0.0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? "-" : "+") + fmt(std::abs(v.imag())) + "i";
}

Condition symmetry_condition(const RationalMatrix& g) {
  Condition c{"symmetric", "G = G^T as a rational identity", true, "", {}};
  const RationalMatrix d = g - g.transpose();
  if (!is_symmetric(g)) {
    c.pass = false;
    double worst = 0.0;
    cplx at = 0.0;
    for (cplx p : {cplx(0.3, 0.7), cplx(1.1, -0.4), cplx(-0.2, 2.0)}) {
      if (auto v = d.try_eval(p); v && v->norm() > worst) {
        worst = v->norm();
        at = p;
      }
    }
    c.detail = "G - G^T is not identically zero; |G - G^T| = " + fmt(worst) + " at " + fmt(at);
    c.witness.value = worst;
    c.witness.location = at;
  }
  return c;
}

Condition boundary_sign(const RationalMatrix& g, Kind kind, Strictness st, const Config& cfg,
                        const std::vector<double>& grid, const std::vector<double>& skip,
                        const RationalMatrix* endpoint_ct, std::string id, std::string desc,
                        ClassificationReport& rep) {
  Condition c{std::move(id), std::move(desc), true, "", {}};
  const BoundaryForm bf(g, kind);
  const bool log_space = g.domain() == Domain::CT;
  const ScanResult sr = scan(bf, grid, st, cfg.psd_tol, skip, log_space);
  if (sr.evaluated > 0) rep.grid_min_eig = sr.worst_min;
  if (!sr.pass) {
    c.pass = false;
    c.detail = "minimum eigenvalue " + fmt(sr.worst_min) + " at " + (log_space ? "omega = " : "theta = ") +
               fmt(sr.worst_freq);
    c.witness.frequency = sr.worst_freq;
    c.witness.value = sr.worst_min;
    return c;
  }
  if (endpoint_ct) {
    const bool dt = g.domain() == Domain::DT;
    for (Endpoint e : {Endpoint::Zero, Endpoint::Infinity}) {
      BranchAnalysis ba;
      try {
        ba = endpoint_branches(*endpoint_ct, kind, e);
      } catch (const Error& err) {
        rep.notes.push_back(std::string("endpoint expansion skipped: ") + err.what());
        continue;
      }
      const bool ok = st == Strictness::Positive ? ba.all_positive() : ba.none_negative();
      if (ok) continue;
      const double f = e == Endpoint::Zero ? 0.0 : (dt ? M_PI : std::numeric_limits<double>::infinity());
      const std::string where = e == Endpoint::Zero ? (dt ? "theta -> 0+" : "omega -> 0+")
                                                    : (dt ? "theta -> pi-" : "omega -> infinity");
      c.pass = false;
      c.witness.frequency = f;
      if (ba.degenerate > 0 && st == Strictness::Positive) {
        c.detail = std::to_string(ba.degenerate) + " eigenvalue branch(es) vanish identically as " + where;
        c.witness.value = 0.0;
      } else {
        const auto it = std::min_element(ba.branches.begin(), ba.branches.end(),
                                         [](const Branch& a, const Branch& b) { return a.lead < b.lead; });
        c.detail = "eigenvalue branch of order " + std::to_string(it->order) + " with leading coefficient " +
                   fmt(it->lead) + " as " + where;
        c.witness.value = it->lead;
      }
      return c;
    }
  }
  c.detail = "minimum eigenvalue on grid " + (sr.evaluated ? fmt(sr.worst_min) : std::string("n/a")) + " (" +
             std::to_string(sr.evaluated) + " points)";
  return c;
}

Condition full_rank_condition(const RationalMatrix& para, std::string desc) {
  Condition c{"normal_rank", std::move(desc), true, "", {}};
  if (!full_normal_rank(para)) {
    c.pass = false;
    c.detail = "determinant vanishes identically";
    c.witness.value = 0.0;
  } else {
    c.detail = "determinant not identically zero";
  }
  return c;
}

}  // namespace detail
}  // namespace nipr
