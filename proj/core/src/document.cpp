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


#include "nipr/document.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nipr/error.hpp"

namespace nipr {

namespace {

using nlohmann::json;

[[noreturn]] void fail_at(const std::string& ptr, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (ptr.empty() ? std::string("/") : ptr) + ": " + what);
}

std::string line_col(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    // Strip the library prefix "[json.exception.parse_error.101] parse error at line L, column C: ".
    if (const size_t p = msg.find(": "); p != std::string::npos) msg = msg.substr(p + 2);
    throw Error(ErrorKind::ParseError, line_col(text, e.byte) + ": " + msg);
  }
}

const json& member(const json& obj, const std::string& key, const std::string& ptr) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail_at(ptr, "missing key '" + key + "'");
  return *it;
}

double number(const json& v, const std::string& ptr) {
  if (!v.is_number()) fail_at(ptr, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) fail_at(ptr, "number is not finite");
  return d;
}

std::vector<double> coeffs(const json& v, const std::string& ptr) {
  if (!v.is_array()) fail_at(ptr, "expected an array of coefficients");
  std::vector<double> out;
  for (size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], ptr + "/" + std::to_string(i)));
  return out;
}

Mat matrix(const json& v, const std::string& ptr, int rows, int cols) {
  if (!v.is_array()) fail_at(ptr, "expected an array of rows");
  if (static_cast<int>(v.size()) != rows)
    fail_at(ptr, "expected " + std::to_string(rows) + " rows, got " + std::to_string(v.size()));
  Mat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const std::string rp = ptr + "/" + std::to_string(i);
    if (!v[i].is_array()) fail_at(rp, "expected a row array");
    if (static_cast<int>(v[i].size()) != cols)
      fail_at(rp, "expected " + std::to_string(cols) + " columns, got " + std::to_string(v[i].size()));
    for (int j = 0; j < cols; ++j) m(i, j) = number(v[i][j], rp + "/" + std::to_string(j));
  }
  return m;
}

// Row count of a nested array; -1 if it is not an array.
int rows_of(const json& v) { return v.is_array() ? static_cast<int>(v.size()) : -1; }
int cols_of(const json& v) { return v.is_array() && !v.empty() && v[0].is_array() ? static_cast<int>(v[0].size()) : 0; }

bool all_zero(const std::vector<double>& c) {
  for (double x : c)
    if (x != 0.0) return false;
  return true;
}

void put_vector(std::ostream& os, const std::vector<double>& v) {
  os << '[';
  for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << format_number(v[i]);
  os << ']';
}

void put_matrix(std::ostream& os, const Mat& m, const std::string& indent) {
  if (m.rows() == 0) {
    os << "[]";
    return;
  }
  os << "[\n";
  for (int i = 0; i < m.rows(); ++i) {
    os << indent << "  [";
    for (int j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << format_number(m(i, j));
    os << ']' << (i + 1 < m.rows() ? "," : "") << '\n';
  }
  os << indent << ']';
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_number(double v) {
  if (!std::isfinite(v)) throw Error(ErrorKind::PreconditionViolated, "cannot serialize a non-finite number");
  if (v == 0.0) return std::signbit(v) ? "-0" : "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

RationalMatrix SystemDocument::to_rational() const {
  if (form == Form::Ss) return tf_of(to_state_space());
  const int m = static_cast<int>(entries.size());
  std::vector<RationalScalar> e;
  e.reserve(m * m);
  for (const auto& row : entries)
    for (const TfEntry& t : row) e.emplace_back(Polynomial(t.num), Polynomial(t.den));
  return RationalMatrix(m, domain, std::move(e));
}

StateSpace SystemDocument::to_state_space() const {
  if (form == Form::Tfm) return minimal_realization(to_rational());
  StateSpace ss;
  ss.A = A;
  ss.B = B;
  ss.C = C;
  ss.D = D;
  ss.domain = domain;
  ss.validate();
  return ss;
}

bool SystemDocument::operator==(const SystemDocument& o) const {
  auto same = [](const Mat& x, const Mat& y) {
    return x.rows() == y.rows() && x.cols() == y.cols() && (x.size() == 0 || x == y);
  };
  return name == o.name && domain == o.domain && form == o.form && entries == o.entries && same(A, o.A) &&
         same(B, o.B) && same(C, o.C) && same(D, o.D) && meta == o.meta;
}

SystemDocument parse_document(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) fail_at("", "document must be an object");
  SystemDocument doc;
  for (const auto& [key, _] : j.items())
    if (key != "name" && key != "domain" && key != "form" && key != "entries" && key != "A" && key != "B" &&
        key != "C" && key != "D" && key != "meta")
      fail_at("/" + key, "unknown key");

  if (const auto it = j.find("name"); it != j.end()) {
    if (!it->is_string()) fail_at("/name", "expected a string");
    doc.name = it->get<std::string>();
  }
  const json& dom = member(j, "domain", "");
  if (dom == "ct") {
    doc.domain = Domain::CT;
  } else if (dom == "dt") {
    doc.domain = Domain::DT;
  } else {
    fail_at("/domain", "expected \"ct\" or \"dt\"");
  }
  const json& form = member(j, "form", "");
  if (form == "tfm") {
    doc.form = SystemDocument::Form::Tfm;
  } else if (form == "ss") {
    doc.form = SystemDocument::Form::Ss;
  } else {
    fail_at("/form", "expected \"tfm\" or \"ss\"");
  }

  if (doc.form == SystemDocument::Form::Tfm) {
    for (const char* k : {"A", "B", "C", "D"})
      if (j.contains(k)) fail_at(std::string("/") + k, "state-space block in a tfm document");
    const json& ent = member(j, "entries", "");
    if (!ent.is_array() || ent.empty()) fail_at("/entries", "expected a non-empty array of rows");
    const size_t m = ent.size();
    for (size_t i = 0; i < m; ++i) {
      const std::string rp = "/entries/" + std::to_string(i);
      if (!ent[i].is_array() || ent[i].size() != m) fail_at(rp, "expected a row of " + std::to_string(m) + " entries");
      std::vector<TfEntry> row;
      for (size_t k = 0; k < m; ++k) {
        const std::string ep = rp + "/" + std::to_string(k);
        const json& e = ent[i][k];
        if (!e.is_object()) fail_at(ep, "expected {\"num\": [...], \"den\": [...]}");
        for (const auto& [key, _] : e.items())
          if (key != "num" && key != "den") fail_at(ep + "/" + key, "unknown key");
        TfEntry t{coeffs(member(e, "num", ep), ep + "/num"), coeffs(member(e, "den", ep), ep + "/den")};
        if (t.den.empty() || all_zero(t.den)) fail_at(ep + "/den", "denominator is zero");
        row.push_back(std::move(t));
      }
      doc.entries.push_back(std::move(row));
    }
  } else {
    if (j.contains("entries")) fail_at("/entries", "entries in an ss document");
    const json& d = member(j, "D", "");
    const int m = rows_of(d);
    if (m <= 0) fail_at("/D", "expected a non-empty square matrix");
    doc.D = matrix(d, "/D", m, m);
    const int n = j.contains("A") ? rows_of(j["A"]) : 0;
    if (n < 0) fail_at("/A", "expected an array of rows");
    doc.A = n ? matrix(j["A"], "/A", n, n) : Mat(0, 0);
    doc.B = n ? matrix(member(j, "B", ""), "/B", n, m) : Mat(0, m);
    doc.C = n ? matrix(member(j, "C", ""), "/C", m, n) : Mat(m, 0);
    if (!n) {
      for (const char* k : {"B", "C"})
        if (j.contains(k) && (rows_of(j[k]) > 0 && cols_of(j[k]) > 0))
          fail_at(std::string("/") + k, "nonempty block with an empty A");
    }
  }

  if (const auto it = j.find("meta"); it != j.end()) {
    if (!it->is_object()) fail_at("/meta", "expected an object of strings");
    for (const auto& [k, v] : it->items()) {
      if (!v.is_string()) fail_at("/meta/" + k, "expected a string");
      doc.meta[k] = v.get<std::string>();
    }
  }
  return doc;
}

SystemDocument load_document(const std::string& path) { return parse_document(slurp(path)); }

std::string serialize(const SystemDocument& doc) {
  std::ostringstream os;
  os << "{\n";
  os << "  \"name\": " << quoted(doc.name) << ",\n";
  os << "  \"domain\": \"" << (doc.domain == Domain::CT ? "ct" : "dt") << "\",\n";
  if (doc.form == SystemDocument::Form::Tfm) {
    os << "  \"form\": \"tfm\",\n";
    os << "  \"entries\": [\n";
    for (size_t i = 0; i < doc.entries.size(); ++i) {
      os << "    [";
      for (size_t k = 0; k < doc.entries[i].size(); ++k) {
        os << (k ? ",\n     " : "") << "{\"num\": ";
        put_vector(os, doc.entries[i][k].num);
        os << ", \"den\": ";
        put_vector(os, doc.entries[i][k].den);
        os << '}';
      }
      os << ']' << (i + 1 < doc.entries.size() ? "," : "") << '\n';
    }
    os << "  ]";
  } else {
    os << "  \"form\": \"ss\",\n";
    const std::pair<const char*, const Mat*> blocks[] = {{"A", &doc.A}, {"B", &doc.B}, {"C", &doc.C}, {"D", &doc.D}};
    for (size_t b = 0; b < 4; ++b) {
      os << "  \"" << blocks[b].first << "\": ";
      put_matrix(os, *blocks[b].second, "  ");
      os << (b < 3 ? ",\n" : "");
    }
  }
  if (!doc.meta.empty()) {
    os << ",\n  \"meta\": {";
    size_t k = 0;
    for (const auto& [key, v] : doc.meta) os << (k++ ? ", " : "") << quoted(key) << ": " << quoted(v);
    os << '}';
  }
  os << "\n}\n";
  return os.str();
}

void save_document(const SystemDocument& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::PreconditionViolated, "cannot write '" + path + "'");
  out << serialize(doc);
}

SystemDocument make_document(const RationalMatrix& g, const std::string& name) {
  SystemDocument doc;
  doc.name = name;
  doc.domain = g.domain();
  doc.form = SystemDocument::Form::Tfm;
  for (int i = 0; i < g.size(); ++i) {
    std::vector<TfEntry> row;
    for (int k = 0; k < g.size(); ++k) {
      TfEntry t{g(i, k).num().coeffs(), g(i, k).den().coeffs()};
      if (t.num.empty()) t.num = {0.0};
      row.push_back(std::move(t));
    }
    doc.entries.push_back(std::move(row));
  }
  return doc;
}

SystemDocument make_document(const StateSpace& ss, const std::string& name) {
  ss.validate();
  SystemDocument doc;
  doc.name = name;
  doc.domain = ss.domain;
  doc.form = SystemDocument::Form::Ss;
  doc.A = ss.A;
  doc.B = ss.B;
  doc.C = ss.C;
  doc.D = ss.D;
  return doc;
}

Config parse_config(const std::string& text, const Config& base) {
  const json j = parse_json(text);
  if (!j.is_object()) fail_at("", "config must be an object");
  Config c = base;
  for (const auto& [key, v] : j.items()) {
    const std::string ptr = "/" + key;
    auto positive_int = [&]() {
      if (!v.is_number_integer() || v.get<long long>() <= 0) fail_at(ptr, "expected a positive integer");
      return v.get<int>();
    };
    auto positive = [&]() {
      const double d = number(v, ptr);
      if (!(d > 0.0)) fail_at(ptr, "expected a positive number");
      return d;
    };
    if (key == "psd_tol") {
      c.psd_tol = positive();
    } else if (key == "pole_band") {
      c.pole_band = positive();
    } else if (key == "ct_grid") {
      c.ct_grid = positive_int();
    } else if (key == "omega_min") {
      c.omega_min = positive();
    } else if (key == "omega_max") {
      c.omega_max = positive();
    } else if (key == "dt_grid") {
      c.dt_grid = positive_int();
    } else if (key == "require_symmetric") {
      if (!v.is_boolean()) fail_at(ptr, "expected true or false");
      c.require_symmetric = v.get<bool>();
    } else if (key == "lemma_max_iter") {
      c.lemma_max_iter = positive_int();
    } else if (key == "eps_steps") {
      c.eps_steps = positive_int();
    } else {
      fail_at(ptr, "unknown config key");
    }
  }
  if (c.omega_min >= c.omega_max) fail_at("/omega_min", "omega_min must be below omega_max");
  return c;
}

Config load_config(const std::string& path, const Config& base) { return parse_config(slurp(path), base); }

}  // namespace nipr
