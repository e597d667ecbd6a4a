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

#include "nipr/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "json_util.hpp"
#include "nipr/interconnect.hpp"
#include "nipr/ni_lemma.hpp"

namespace nipr {

void ClassificationReport::add(Condition c) {
  verdict = verdict && c.pass;
  conditions.push_back(std::move(c));
}

const Condition* ClassificationReport::find(std::string_view id) const {
  for (const Condition& c : conditions)
    if (c.id == id) return &c;
  return nullptr;
}

const Condition* ClassificationReport::first_failure() const {
  for (const Condition& c : conditions)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

using nlohmann::json;
using detail::jnum;
using detail::jcplx;
using detail::jmat;
using detail::jcmat;

json config_json(const Config& c) {
  return json{{"psd_tol", c.psd_tol},     {"pole_band", c.pole_band},
              {"ct_grid", c.ct_grid},     {"omega_min", c.omega_min},
              {"omega_max", c.omega_max}, {"dt_grid", c.dt_grid},
              {"require_symmetric", c.require_symmetric},
              {"lemma_max_iter", c.lemma_max_iter},
              {"eps_steps", c.eps_steps}};
}

template <class T, class F>
json opt(const std::optional<T>& v, F f) {
  return v ? f(*v) : json(nullptr);
}

}  // namespace

std::string to_json(const Config& c, int indent) { return config_json(c).dump(indent); }

namespace {

json report_json(const ClassificationReport& r);

json spectrum_json(const std::vector<cplx>& v) {
  json a = json::array();
  for (cplx c : v) a.push_back(jcplx(c));
  return a;
}

}  // namespace

std::string to_json(const ClassificationReport& r, int indent) { return report_json(r).dump(indent); }

std::string to_json(const FeasibilityCertificate& c, const CertificateCheck* check, int indent) {
  json j;
  j["status"] = to_string(c.status);
  j["X"] = jmat(c.X);
  j["residual_affine"] = jnum(c.residual_affine);
  j["lambda_min_X"] = jnum(c.lambda_min_X);
  j["lambda_min_lyap"] = jnum(c.lambda_min_lyap);
  j["iterations"] = c.iterations;
  j["L"] = opt(c.L, jmat);
  j["W"] = opt(c.W, jmat);
  j["note"] = c.note;
  if (check) {
    j["verification"] = json{{"valid", check->valid},
                             {"residual_affine", jnum(check->residual_affine)},
                             {"lambda_min_X", jnum(check->lambda_min_X)},
                             {"lambda_min_lyap", jnum(check->lambda_min_lyap)}};
  }
  return j.dump(indent);
}

std::string to_json(const InterconnectResult& r, int indent) {
  return json{{"well_posed", r.well_posed},
              {"internally_stable", r.internally_stable},
              {"closed_loop_spectrum", spectrum_json(r.closed_loop_spectrum)}}
      .dump(indent);
}

std::string to_json(const NiStabilityReport& r, int indent) {
  return json{{"P1Q1", jmat(r.P1Q1)},
              {"eigenvalues", spectrum_json(r.eigenvalues)},
              {"lambda_bar", jnum(r.lambda_bar)},
              {"stable_by_lambda", r.stable_by_lambda},
              {"stable_by_state_space", r.stable_by_state_space},
              {"agree", r.agree},
              {"closed_loop_spectrum", spectrum_json(r.closed_loop_spectrum)}}
      .dump(indent);
}

std::string to_json(const StarClassReport& r, int indent) {
  return json{{"class", r.cls},
              {"s1_in_class", r.s1_in_class},
              {"s2_in_class", r.s2_in_class},
              {"internally_stable", r.internally_stable},
              {"preserved", r.preserved},
              {"message", r.message},
              {"star_report", report_json(r.star_report)}}
      .dump(indent);
}

namespace {

json report_json(const ClassificationReport& r) {
  json j;
  j["class"] = r.cls;
  j["domain"] = to_string(r.domain);
  j["verdict"] = r.verdict;
  json conds = json::array();
  for (const Condition& c : r.conditions) {
    json w;
    w["frequency"] = opt(c.witness.frequency, jnum);
    w["value"] = opt(c.witness.value, jnum);
    w["location"] = opt(c.witness.location, jcplx);
    w["matrix"] = opt(c.witness.matrix, jcmat);
    conds.push_back(json{{"id", c.id},
                         {"description", c.description},
                         {"pass", c.pass},
                         {"detail", c.detail},
                         {"witness", w}});
  }
  j["conditions"] = conds;
  const Condition* f = r.first_failure();
  j["first_failure"] = f ? json(f->id) : json(nullptr);
  json poles = json::array();
  for (const PoleDatum& p : r.boundary_poles) {
    poles.push_back(json{{"location", jcplx(p.location)},
                         {"multiplicity", p.multiplicity},
                         {"A1", jcmat(p.residue_A1)},
                         {"A2", jcmat(p.quad_residue_A2)},
                         {"K0", jcmat(p.normalized_K0)}});
  }
  j["boundary_poles"] = poles;
  j["limits"] = json{{"Q", opt(r.limits.Q, jmat)},
                     {"sigma0_margin", opt(r.limits.sigma0_margin, jnum)},
                     {"delta", opt(r.limits.delta, jnum)},
                     {"K_inf", opt(r.limits.K_inf, jmat)},
                     {"value_at_inf", opt(r.limits.value_at_inf, jmat)},
                     {"w2_limit", opt(r.limits.w2_limit, jmat)}};
  j["circle"] = json{{"Q0", opt(r.circle.Q0, jmat)}, {"Qpi", opt(r.circle.Qpi, jmat)}};
  j["grid_min_eig"] = opt(r.grid_min_eig, jnum);
  j["notes"] = r.notes;
  j["config"] = config_json(r.config);
  return j;
}

}  // namespace

namespace {

std::string num(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string mat_text(const Mat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (int k = 0; k < m.cols(); ++k) os << (k ? " " : "") << num(m(i, k));
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << r.cls << " (" << to_string(r.domain) << "): " << (r.verdict ? "true" : "false") << "\n";
  for (const Condition& c : r.conditions) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.id << ": " << c.description;
    if (!c.detail.empty()) os << "\n         " << c.detail;
    os << "\n";
  }
  if (r.limits.Q) os << "  Q = " << mat_text(*r.limits.Q) << "\n";
  if (r.limits.sigma0_margin) os << "  sigma0 margin = " << num(*r.limits.sigma0_margin) << "\n";
  if (r.limits.delta) os << "  delta = " << num(*r.limits.delta) << "\n";
  if (r.limits.K_inf) os << "  K_inf = " << mat_text(*r.limits.K_inf) << "\n";
  if (r.limits.value_at_inf) os << "  F(inf) + F(inf)^T = " << mat_text(*r.limits.value_at_inf) << "\n";
  if (r.limits.w2_limit) os << "  lim w^2 [F + F^*] = " << mat_text(*r.limits.w2_limit) << "\n";
  if (r.circle.Q0) os << "  Q0 = " << mat_text(*r.circle.Q0) << "\n";
  if (r.circle.Qpi) os << "  Qpi = " << mat_text(*r.circle.Qpi) << "\n";
  if (r.grid_min_eig) os << "  grid minimum eigenvalue = " << num(*r.grid_min_eig) << "\n";
  for (const std::string& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

}  // namespace nipr
