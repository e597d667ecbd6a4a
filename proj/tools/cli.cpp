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


#include "cli.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nipr/analysis.hpp"
#include "nipr/document.hpp"
#include "nipr/error.hpp"
#include "nipr/interconnect.hpp"
#include "nipr/ni_lemma.hpp"
#include "nipr/statespace.hpp"
#include "nipr/transforms.hpp"

namespace nipr::cli {

namespace {

using nlohmann::json;

struct Common {
  std::string config_path;
  std::optional<double> tol;
  bool allow_asymmetric = false;
  bool json = false;
  std::string out_path;

  Config config() const {
    Config c = config_path.empty() ? Config{} : load_config(config_path);
    if (tol) {
      if (!(*tol > 0.0)) throw Error(ErrorKind::PreconditionViolated, "--tol must be positive");
      c.psd_tol = *tol;
    }
    if (allow_asymmetric) c.require_symmetric = false;
    return c;
  }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--config", c.config_path, "JSON config file (tolerances, grid sizes)");
  app->add_option("--tol", c.tol, "PSD tolerance");
  app->add_flag("--allow-asymmetric", c.allow_asymmetric, "do not require G = G^T");
  app->add_flag("--json", c.json, "machine-readable output");
  app->add_option("--out", c.out_path, "write the result to this file");
}

// Writes to --out when given, otherwise to the console stream.
void emit(const Common& c, std::ostream& out, const std::string& text) {
  if (c.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::PreconditionViolated, "cannot write '" + c.out_path + "'");
  f << text;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt(cplx v) {
  if (v.imag() == 0.0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

std::string mat_text(const Mat& m, const std::string& indent) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << indent;
    for (int k = 0; k < m.cols(); ++k) os << (k ? "  " : "") << fmt(m(i, k));
    os << "\n";
  }
  return os.str();
}

std::string spectrum_text(const std::vector<cplx>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s.empty() ? "(none)" : s;
}

bool unstable(cplx l, Domain d) {
  return d == Domain::CT ? !(l.real() < -1e-10 * (1.0 + std::abs(l))) : !(std::abs(l) < 1.0 - 1e-10);
}

// ---- classify

struct ClassifyArgs {
  Common common;
  std::string file;
  std::string cls = "all";
  std::optional<int> grid;
};

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  Config cfg = a.common.config();
  if (a.grid) {
    if (*a.grid < 2) throw Error(ErrorKind::PreconditionViolated, "--grid must be at least 2");
    cfg.ct_grid = cfg.dt_grid = *a.grid;
  }
  const SystemDocument doc = load_document(a.file);
  const RationalMatrix g = doc.to_rational();

  std::vector<std::string> classes;
  if (a.cls == "all") {
    const char prefix = g.domain() == Domain::CT ? 'c' : 'd';
    for (const std::string& c : class_names())
      if (c[0] == prefix) classes.push_back(c);
  } else {
    classes.push_back(a.cls);
  }

  json results = json::array();
  std::string text;
  bool any_true = false;
  for (const std::string& c : classes) {
    try {
      const ClassificationReport r = classify(g, c, cfg);
      any_true = any_true || r.verdict;
      results.push_back(json::parse(to_json(r)));
      text += to_text(r);
    } catch (const Error& e) {
      if (classes.size() == 1) throw;
      results.push_back(json{{"class", c}, {"error", e.what()}});
      text += c + ": error: " + e.what() + "\n";
    }
  }
  if (a.common.json) {
    json j{{"system", doc.name}, {"results", results}};
    emit(a.common, out, j.dump(2) + "\n");
  } else {
    emit(a.common, out, (doc.name.empty() ? "" : doc.name + "\n") + text);
  }
  (void)err;
  return any_true ? kTrue : kFalse;
}

// ---- sweep

struct SweepArgs {
  Common common;
  std::string file;
  std::string mode = "ni";
  std::string grid;
  bool entries = false;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const Config cfg = a.common.config();
  const RationalMatrix g = load_document(a.file).to_rational();
  const Kind kind = a.mode == "pr" ? Kind::PositiveReal : Kind::NegativeImaginary;
  std::vector<double> grid;
  if (a.grid.empty()) {
    grid = g.domain() == Domain::CT ? ct_grid(cfg, true) : dt_grid(cfg, true);
  } else {
    grid = parse_grid(a.grid, g.domain());
  }
  emit(a.common, out, sweep_csv(g, kind, grid, a.entries));
  return kTrue;
}

// ---- transform

struct TransformArgs {
  Common common;
  std::string file;
  std::string map;
  std::string offset;
};

int cmd_transform(const TransformArgs& a, std::ostream& out, std::ostream& err) {
  const Config cfg = a.common.config();
  const SystemDocument in = load_document(a.file);
  SystemDocument res;
  std::map<std::string, std::string> meta;
  auto offset = [&](int m) { return a.offset.empty() ? Mat(Mat::Zero(m, m)) : parse_matrix(a.offset, m); };

  if (a.map == "prni") {
    res = make_document(ct_ni_to_pr(in.to_rational()));
  } else if (a.map == "prni-inv") {
    const RationalMatrix f = in.to_rational();
    std::string warning;
    res = make_document(ct_pr_to_ni(f, offset(f.size()), &warning));
    if (!warning.empty()) {
      err << "warning: " << warning << "\n";
      meta["warning"] = warning;
    }
  } else if (a.map == "sspr-ssni" || a.map == "ssni-sspr") {
    const RationalMatrix f = in.to_rational();
    const EpsilonResult r = a.map == "sspr-ssni" ? csspr_to_cssni(f, offset(f.size()), cfg) : cssni_to_csspr(f, cfg);
    res = make_document(r.system);
    meta["epsilon"] = format_number(r.epsilon);
    meta["epsilon_max"] = format_number(r.epsilon_max);
    meta["attempts"] = std::to_string(r.attempts);
  } else if (a.map == "lem3") {
    res = make_document(dt_ni_to_pr(in.to_rational()));
  } else if (a.map == "lem3-inv") {
    const RationalMatrix f = in.to_rational();
    res = make_document(dt_pr_to_ni(f, offset(f.size())));
  } else if (a.map == "lem2") {
    const SsTransform t = dt_ni_to_pr_ss(in.to_state_space());
    res = make_document(t.ss);
    meta["minimal"] = t.minimal ? "true" : "false";
  } else if (a.map == "cayley") {
    if (in.form == SystemDocument::Form::Ss) {
      res = make_document(cayley_ss(in.to_state_space()));
    } else {
      const RationalMatrix g = in.to_rational();
      res = make_document(g.domain() == Domain::DT ? cayley_dt_to_ct(g) : cayley_ct_to_dt(g));
    }
  } else {
    throw Error(ErrorKind::PreconditionViolated, "unknown map '" + a.map + "'");
  }
  res.name = in.name.empty() ? a.map : in.name + " [" + a.map + "]";
  res.meta = std::move(meta);
  res.meta["transform"] = a.map;
  emit(a.common, out, serialize(res));
  return kTrue;
}

// ---- lemma

struct LemmaArgs {
  Common common;
  std::string file;
  std::string form = "primal";
};

int cmd_lemma(const LemmaArgs& a, std::ostream& out) {
  const Config cfg = a.common.config();
  const StateSpace ss = load_document(a.file).to_state_space();
  FeasibilityCertificate c;
  if (a.form == "primal") {
    c = dni_lemma_check(ss, cfg);
  } else if (a.form == "dual") {
    c = dual_dni_lemma_check(ss, cfg);
  } else if (a.form == "pr") {
    c = dpr_lemma_check(ss, cfg);
  } else {
    throw Error(ErrorKind::PreconditionViolated, "unknown lemma form '" + a.form + "'");
  }
  std::optional<CertificateCheck> check;
  if (c.status == FeasibilityStatus::Feasible) {
    check = a.form == "primal" ? verify_dni_certificate(ss, c.X)
            : a.form == "dual" ? verify_dual_dni_certificate(ss, c.X)
                               : verify_dpr_certificate(ss, c.X);
  }
  if (a.common.json) {
    json j = json::parse(to_json(c, check ? &*check : nullptr));
    j["form"] = a.form;
    j["config"] = json::parse(to_json(cfg));
    emit(a.common, out, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "status: " << to_string(c.status) << "\n";
    os << (a.form == "dual" ? "Y" : "X") << " =\n" << mat_text(c.X, "  ");
    os << "residual (affine): " << fmt(c.residual_affine) << "\n";
    os << "lambda_min(" << (a.form == "dual" ? "Y" : "X") << "): " << fmt(c.lambda_min_X) << "\n";
    os << "lambda_min(inequality): " << fmt(c.lambda_min_lyap) << "\n";
    os << "iterations: " << c.iterations << "\n";
    if (check) os << "verification: " << (check->valid ? "valid" : "INVALID") << "\n";
    if (!c.note.empty()) os << "note: " << c.note << "\n";
    emit(a.common, out, os.str());
  }
  switch (c.status) {
    case FeasibilityStatus::Feasible: return kTrue;
    case FeasibilityStatus::Infeasible: return kFalse;
    default: return kError;
  }
}

// ---- interconnect

struct InterconnectArgs {
  Common common;
  std::string p_file, q_file;
  std::string mode = "feedback";
};

int cmd_interconnect(const InterconnectArgs& a, std::ostream& out) {
  const Config cfg = a.common.config();
  const SystemDocument pd = load_document(a.p_file), qd = load_document(a.q_file);
  if (a.mode == "feedback") {
    const InterconnectResult r = internal_stability(pd.to_state_space(), qd.to_state_space());
    if (a.common.json) {
      json j = json::parse(to_json(r));
      j["mode"] = a.mode;
      emit(a.common, out, j.dump(2) + "\n");
    } else {
      std::vector<cplx> bad;
      for (cplx l : r.closed_loop_spectrum)
        if (unstable(l, pd.domain)) bad.push_back(l);
      std::string line = r.internally_stable ? "stable" : "unstable, pole" + std::string(bad.size() > 1 ? "s " : " ");
      if (!r.internally_stable) line += spectrum_text(bad);
      emit(a.common, out, line + "\nclosed-loop spectrum: " + spectrum_text(r.closed_loop_spectrum) + "\n");
    }
    return r.internally_stable ? kTrue : kFalse;
  }
  if (a.mode == "lambda") {
    const NiStabilityReport r = ni_stability_test(pd.to_rational(), qd.to_rational(), cfg);
    if (a.common.json) {
      json j = json::parse(to_json(r));
      j["mode"] = a.mode;
      j["config"] = json::parse(to_json(cfg));
      emit(a.common, out, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "lambda_bar(P(1)Q(1)) = " << fmt(r.lambda_bar) << "\n";
      os << "stable by lambda test: " << (r.stable_by_lambda ? "yes" : "no") << "\n";
      os << "stable by closed-loop spectrum: " << (r.stable_by_state_space ? "yes" : "no") << "\n";
      os << "closed-loop spectrum: " << spectrum_text(r.closed_loop_spectrum) << "\n";
      if (!r.agree) os << "warning: the two tests disagree\n";
      emit(a.common, out, os.str());
    }
    return r.stable_by_state_space ? kTrue : kFalse;
  }
  throw Error(ErrorKind::PreconditionViolated, "unknown mode '" + a.mode + "'");
}

// ---- star

struct StarArgs {
  Common common;
  std::string s1_file, s2_file;
  int a = 1, b = 1;
  std::string cls;
};

int cmd_star(const StarArgs& a, std::ostream& out) {
  const Config cfg = a.common.config();
  const SystemDocument d1 = load_document(a.s1_file), d2 = load_document(a.s2_file);
  if (!a.cls.empty()) {
    const StarClassReport r = star_class_preservation(d1.to_rational(), d2.to_rational(), a.a, a.b, a.cls, cfg);
    if (a.common.json) {
      json j = json::parse(to_json(r));
      j["star"] = json::parse(serialize(make_document(r.star, "star")));
      emit(a.common, out, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << r.message << "\n";
      os << "S1 in " << r.cls << ": " << (r.s1_in_class ? "yes" : "no") << "\n";
      os << "S2 in " << r.cls << ": " << (r.s2_in_class ? "yes" : "no") << "\n";
      os << "internally stable: " << (r.internally_stable ? "yes" : "no") << "\n";
      os << to_text(r.star_report);
      emit(a.common, out, os.str());
    }
    return r.preserved ? kTrue : kFalse;
  }
  const InterconnectResult r = redheffer_star(d1.to_state_space(), d2.to_state_space(), a.a, a.b);
  SystemDocument sd = make_document(tf_of(r.system), "star");
  sd.meta["internally_stable"] = r.internally_stable ? "true" : "false";
  if (a.common.json || !a.common.out_path.empty()) {
    emit(a.common, out, serialize(sd));
  } else {
    out << "internally stable: " << (r.internally_stable ? "yes" : "no") << "\n";
    out << "closed-loop spectrum: " << spectrum_text(r.closed_loop_spectrum) << "\n";
    out << serialize(sd);
  }
  return r.internally_stable ? kTrue : kFalse;
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec, Domain domain) {
  auto bad = [&]() -> Error {
    return Error(ErrorKind::PreconditionViolated, "bad grid spec '" + spec + "' (use N, lin:a:b:N or log:a:b:N)");
  };
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  auto to_d = [&](const std::string& s) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != s.size() || !std::isfinite(v)) throw bad();
    return v;
  };
  auto to_n = [&](const std::string& s) {
    const double v = to_d(s);
    if (v < 1 || v != std::floor(v) || v > 1e7) throw bad();
    return static_cast<int>(v);
  };
  if (parts.size() == 1) {
    // N points in total; for CT that is omega = 0 plus N - 1 log-spaced points.
    const int n = to_n(parts[0]);
    if (n < (domain == Domain::CT ? 3 : 2)) throw bad();
    Config c;
    c.ct_grid = n - 1;
    c.dt_grid = n;
    return domain == Domain::CT ? ct_grid(c, true) : dt_grid(c, true);
  }
  if (parts.size() != 4 || (parts[0] != "lin" && parts[0] != "log")) throw bad();
  const double lo = to_d(parts[1]), hi = to_d(parts[2]);
  const int n = to_n(parts[3]);
  if (hi < lo) throw bad();
  std::vector<double> g;
  if (parts[0] == "lin") {
    for (int k = 0; k < n; ++k) g.push_back(n == 1 ? lo : lo + (hi - lo) * k / (n - 1));
  } else {
    if (!(lo > 0.0)) throw bad();
    const double a = std::log10(lo), b = std::log10(hi);
    for (int k = 0; k < n; ++k) g.push_back(n == 1 ? lo : std::pow(10.0, a + (b - a) * k / (n - 1)));
  }
  return g;
}

std::string sweep_csv(const RationalMatrix& g, Kind kind, const std::vector<double>& grid, bool entries) {
  const int m = g.size();
  std::ostringstream os;
  os << (g.domain() == Domain::CT ? "omega" : "theta") << ",min_eig,max_eig,min_eig_over_freq";
  if (entries)
    for (int i = 0; i < m; ++i)
      for (int k = 0; k < m; ++k) os << ",re_" << i + 1 << '_' << k + 1 << ",im_" << i + 1 << '_' << k + 1;
  os << '\n';
  const std::string nan = "nan";
  for (const SweepRow& r : sweep(g, kind, grid)) {
    os << format_number(r.freq);
    if (!r.defined) {
      os << ',' << nan << ',' << nan << ',' << nan;
      if (entries)
        for (int i = 0; i < 2 * m * m; ++i) os << ',' << nan;
    } else {
      os << ',' << format_number(r.min_eig) << ',' << format_number(r.max_eig) << ','
         << (r.scaled ? format_number(*r.scaled) : nan);
      if (entries)
        for (int i = 0; i < m; ++i)
          for (int k = 0; k < m; ++k)
            os << ',' << format_number(r.value(i, k).real()) << ',' << format_number(r.value(i, k).imag());
    }
    os << '\n';
  }
  return os.str();
}

Mat parse_matrix(const std::string& text, int m) {
  auto bad = [&]() -> Error {
    return Error(ErrorKind::PreconditionViolated,
                 "bad matrix '" + text + "': expected " + std::to_string(m) + "x" + std::to_string(m) +
                     " rows like \"1,0;0,1\" or a scalar");
  };
  std::vector<std::vector<double>> rows;
  std::stringstream rs(text);
  for (std::string row; std::getline(rs, row, ';');) {
    std::vector<double> r;
    std::stringstream cs(row);
    for (std::string cell; std::getline(cs, cell, ',');) {
      size_t pos = 0;
      try {
        r.push_back(std::stod(cell, &pos));
      } catch (const std::exception&) {
        throw bad();
      }
      while (pos < cell.size() && std::isspace(static_cast<unsigned char>(cell[pos]))) ++pos;
      if (pos != cell.size()) throw bad();
    }
    rows.push_back(r);
  }
  if (rows.size() == 1 && rows[0].size() == 1) return rows[0][0] * Mat::Identity(m, m);
  if (static_cast<int>(rows.size()) != m) throw bad();
  Mat out(m, m);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(rows[i].size()) != m) throw bad();
    for (int k = 0; k < m; ++k) out(i, k) = rows[i][k];
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Positive-real and negative-imaginary analysis of LTI systems", "nipr"};
  app.require_subcommand(1);

  ClassifyArgs ca;
  CLI::App* classify_cmd = app.add_subcommand("classify", "classify a system against one or all classes");
  classify_cmd->add_option("file", ca.file, "system document")->required();
  std::vector<std::string> names = class_names();
  names.push_back("all");
  classify_cmd->add_option("--class", ca.cls, "class name or 'all'")->check(CLI::IsMember(names));
  classify_cmd->add_option("--grid", ca.grid, "frequency grid size");
  add_common(classify_cmd, ca.common);

  SweepArgs sa;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "CSV of the boundary Hermitian form over a frequency grid");
  sweep_cmd->add_option("file", sa.file, "system document")->required();
  sweep_cmd->add_option("--mode", sa.mode, "pr or ni")->check(CLI::IsMember({"pr", "ni"}));
  sweep_cmd->add_option("--grid", sa.grid, "N, lin:a:b:N or log:a:b:N");
  sweep_cmd->add_flag("--entries", sa.entries, "append re/im columns of every entry");
  add_common(sweep_cmd, sa.common);

  TransformArgs ta;
  CLI::App* transform_cmd = app.add_subcommand("transform", "map a system between the PR and NI classes");
  transform_cmd->add_option("file", ta.file, "system document")->required();
  transform_cmd
      ->add_option("--map", ta.map, "prni, prni-inv, sspr-ssni, ssni-sspr, lem3, lem3-inv, lem2, cayley")
      ->required()
      ->check(CLI::IsMember({"prni", "prni-inv", "sspr-ssni", "ssni-sspr", "lem3", "lem3-inv", "lem2", "cayley"}));
  transform_cmd->add_option("--offset", ta.offset, "constant term D, e.g. \"1,0;0,1\" (default 0)");
  add_common(transform_cmd, ta.common);

  LemmaArgs la;
  CLI::App* lemma_cmd = app.add_subcommand("lemma", "state-space LMI test with a certificate");
  lemma_cmd->add_option("file", la.file, "system document (tfm documents are realized minimally)")->required();
  lemma_cmd->add_option("--form", la.form, "primal, dual (NI) or pr")->check(CLI::IsMember({"primal", "dual", "pr"}));
  add_common(lemma_cmd, la.common);

  InterconnectArgs ia;
  CLI::App* ic_cmd = app.add_subcommand("interconnect", "positive feedback of P and Q");
  ic_cmd->add_option("P", ia.p_file, "plant document")->required();
  ic_cmd->add_option("Q", ia.q_file, "controller document")->required();
  ic_cmd->add_option("--mode", ia.mode, "feedback or lambda")->check(CLI::IsMember({"feedback", "lambda"}));
  add_common(ic_cmd, ia.common);

  StarArgs st;
  CLI::App* star_cmd = app.add_subcommand("star", "Redheffer star product of two partitioned systems");
  star_cmd->add_option("S1", st.s1_file, "first system")->required();
  star_cmd->add_option("S2", st.s2_file, "second system")->required();
  star_cmd->add_option("--a", st.a, "size of the S1 -> S2 channel")->check(CLI::PositiveNumber);
  star_cmd->add_option("--b", st.b, "size of the S2 -> S1 channel")->check(CLI::PositiveNumber);
  star_cmd->add_option("--class", st.cls, "NI class to test for preservation")
      ->check(CLI::IsMember({"dni", "dwsni", "dssni", "cni", "cwsni", "cssni"}));
  add_common(star_cmd, st.common);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  if (!rev.empty()) rev.pop_back();  // program name
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kTrue;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kError;
  }

  try {
    if (*classify_cmd) return cmd_classify(ca, out, err);
    if (*sweep_cmd) return cmd_sweep(sa, out);
    if (*transform_cmd) return cmd_transform(ta, out, err);
    if (*lemma_cmd) return cmd_lemma(la, out);
    if (*ic_cmd) return cmd_interconnect(ia, out);
    if (*star_cmd) return cmd_star(st, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace nipr::cli
