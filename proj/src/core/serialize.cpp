/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "core/serialize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include <json.hpp>

#include "core/numeric.hpp"

namespace planar_ar {

namespace {

using nlohmann::json;

json params_json(const ParamSet& p) {
  return json{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"sigma2", p.sigma2}};
}

json report_json(const ConditionReport& r) {
  return json{{"f1", r.f1},
              {"f2", r.f2},
              {"f3", r.f3},
              {"f4", r.f4},
              {"D", r.d},
              {"stationary", r.stationary},
              {"causal", r.causal},
              {"pnd_sufficient", r.pnd_sufficient},
              {"near_boundary", r.near_boundary},
              {"symmetry", to_string(r.symmetry)}};
}

json class_json(const EquivalenceClass& c) {
  json members = json::array();
  for (const auto& m : c.members)
    members.push_back(json{{"transform", m.transform_id},
                           {"params", params_json(m.params)},
                           {"causal", check_conditions(m.params).causal}});
  return json{{"class_size", c.members.size()},
              {"members", members},
              {"causal_member_index", c.causal_member_index}};
}

json metadata_json(const SimMetadata& m) {
  return json{{"params", params_json(m.params)},
              {"canonical_params", params_json(m.canonical)},
              {"transform", m.transform_id},
              {"flip", to_string(m.flip)},
              {"seed", m.seed},
              {"method", to_string(m.method)},
              {"noise", to_string(m.noise)},
              {"tol", m.tol},
              {"kernel_rows", m.kernel_rows},
              {"kernel_cols", m.kernel_cols},
              {"margin", m.margin},
              {"generator", m.generator}};
}

// line-oriented CSV reader for "<int>,<int>,<double>" triplet files
struct TripletCsv {
  long c0, c1;
  double value;
};

std::vector<TripletCsv> parse_triplets(std::string_view text, const char* header,
                                       const char* what) {
  std::vector<TripletCsv> out;
  std::size_t pos = 0;
  long lineno = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : eol - pos);
    pos = eol == std::string_view::npos ? text.size() : eol + 1;
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != header)
        fail(ErrorCode::Parse, std::string(what) + ": expected header '" + header + "'");
      saw_header = true;
      continue;
    }
    std::string buf(line);
    char* cur = buf.data();
    char* end = nullptr;
    long c0 = std::strtol(cur, &end, 10);
    if (end == cur || *end != ',') fail(ErrorCode::Parse, std::string(what) + ": bad row " +
                                                              std::to_string(lineno));
    cur = end + 1;
    long c1 = std::strtol(cur, &end, 10);
    if (end == cur || *end != ',') fail(ErrorCode::Parse, std::string(what) + ": bad row " +
                                                              std::to_string(lineno));
    cur = end + 1;
    double v = std::strtod(cur, &end);
    if (end == cur || *end != '\0' || !std::isfinite(v))
      fail(ErrorCode::Parse, std::string(what) + ": bad value in row " + std::to_string(lineno));
    out.push_back({c0, c1, v});
  }
  if (!saw_header || out.empty())
    fail(ErrorCode::Parse, std::string(what) + ": no data rows");
  return out;
}

}  // namespace

std::string to_csv(const AcfGrid& g) {
  std::string s = "h1,h2,gamma\n";
  for (long h1 = g.h1_min(); h1 <= g.h1_max(); ++h1)
    for (long h2 = g.h2_min(); h2 <= g.h2_max(); ++h2) {
      s += std::to_string(h1);
      s += ',';
      s += std::to_string(h2);
      s += ',';
      s += fmt_double(g.at(h1, h2));
      s += '\n';
    }
  return s;
}

std::string to_json(const AcfGrid& g) {
  json j{{"h1_min", g.h1_min()},
         {"h1_max", g.h1_max()},
         {"h2_min", g.h2_min()},
         {"h2_max", g.h2_max()},
         {"values", std::vector<double>(g.values().begin(), g.values().end())}};
  return j.dump();
}

std::string to_csv(const PsiTable& t) {
  std::string s = "k,l,psi\n";
  for (long k = 0; k <= t.kmax(); ++k)
    for (long l = 0; l <= t.lmax(); ++l) {
      s += std::to_string(k);
      s += ',';
      s += std::to_string(l);
      s += ',';
      s += fmt_double(t.at(k, l));
      s += '\n';
    }
  return s;
}

std::string to_json(const PsiTable& t) {
  json j{{"kmax", t.kmax()},
         {"lmax", t.lmax()},
         {"tail_bound_estimated", t.tail_bound()},
         {"values", std::vector<double>(t.values().begin(), t.values().end())}};
  return j.dump();
}

std::string to_csv(const FieldGrid& g) {
  std::string s = "i,j,value\n";
  for (long i = 0; i < g.n_rows(); ++i) {
    const double* row = g.row(i);
    for (long j = 0; j < g.n_cols(); ++j) {
      s += std::to_string(i);
      s += ',';
      s += std::to_string(j);
      s += ',';
      s += fmt_double(row[j]);
      s += '\n';
    }
  }
  return s;
}

std::string to_json(const FieldGrid& g) {
  json j{{"n_rows", g.n_rows()},
         {"n_cols", g.n_cols()},
         {"provenance", to_string(g.provenance())},
         {"values", std::vector<double>(g.values().begin(), g.values().end())}};
  if (g.sim_metadata()) j["metadata"] = metadata_json(*g.sim_metadata());
  return j.dump();
}

std::string to_pgm(const FieldGrid& g) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (double v : g.values()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  json meta{{"min", lo}, {"max", hi}};
  if (g.sim_metadata()) meta["metadata"] = metadata_json(*g.sim_metadata());

  std::string s = "P2\n# ";
  s += meta.dump();
  s += '\n';
  s += std::to_string(g.n_cols());
  s += ' ';
  s += std::to_string(g.n_rows());
  s += "\n255\n";
  const double span = hi - lo;
  int on_line = 0;
  for (long i = 0; i < g.n_rows(); ++i) {
    const double* row = g.row(i);
    for (long j = 0; j < g.n_cols(); ++j) {
      int pix = span > 0.0 ? static_cast<int>(std::lround((row[j] - lo) / span * 255.0)) : 0;
      s += std::to_string(pix);
      if (++on_line == 17) {
        s += '\n';
        on_line = 0;
      } else {
        s += ' ';
      }
    }
  }
  if (on_line != 0) s += '\n';
  return s;
}

std::string to_json(const ParamSet& p, const ConditionReport& r) {
  json j = report_json(r);
  j["params"] = params_json(p);
  return j.dump();
}

std::string to_json(const EquivalenceClass& c) { return class_json(c).dump(); }

std::string to_json(const MomentEstimate& e) {
  json j{{"estimate", params_json(e.params)},
         {"source", to_string(e.source)},
         {"orientation", to_string(e.orientation)},
         {"condition_report", report_json(e.condition_report)},
         {"equivalence_class", class_json(e.equivalence)}};
  if (!e.flip_candidates.empty()) {
    json cands = json::array();
    for (const auto& m : e.flip_candidates)
      cands.push_back(json{{"transform", m.transform_id}, {"params", params_json(m.params)}});
    j["flip_candidates"] = cands;
  }
  if (!e.diagnostics.empty()) {
    json diag = json::array();
    for (const auto& d : e.diagnostics)
      diag.push_back(json{{"h1", d.h1}, {"h2", d.h2}, {"abs_residual", d.abs_residual}});
    j["yw_diagnostics"] = diag;
  }
  return j.dump();
}

AcfGrid acf_grid_from_csv(std::string_view text) {
  auto rows = parse_triplets(text, "h1,h2,gamma", "ACF CSV");
  long h1_min = rows[0].c0, h1_max = rows[0].c0;
  long h2_min = rows[0].c1, h2_max = rows[0].c1;
  for (const auto& r : rows) {
    h1_min = std::min(h1_min, r.c0);
    h1_max = std::max(h1_max, r.c0);
    h2_min = std::min(h2_min, r.c1);
    h2_max = std::max(h2_max, r.c1);
  }
  AcfGrid g(h1_min, h1_max, h2_min, h2_max);
  std::vector<char> seen(static_cast<std::size_t>(g.rows()) * g.cols(), 0);
  for (const auto& r : rows) {
    auto idx = static_cast<std::size_t>(r.c0 - h1_min) * g.cols() + (r.c1 - h2_min);
    if (seen[idx]) fail(ErrorCode::Parse, "ACF CSV: duplicate lag entry");
    seen[idx] = 1;
    g.set(r.c0, r.c1, r.value);
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    fail(ErrorCode::Parse, "ACF CSV: window is not a complete rectangle");
  return g;
}

FieldGrid field_from_csv(std::string_view text) {
  auto rows = parse_triplets(text, "i,j,value", "field CSV");
  long nr = 0, nc = 0;
  for (const auto& r : rows) {
    if (r.c0 < 0 || r.c1 < 0) fail(ErrorCode::Parse, "field CSV: negative cell index");
    nr = std::max(nr, r.c0 + 1);
    nc = std::max(nc, r.c1 + 1);
  }
  if (static_cast<std::size_t>(nr) * nc != rows.size())
    fail(ErrorCode::Parse, "field CSV: cell count does not form a complete rectangle");
  FieldGrid g(nr, nc, FieldProvenance::External);
  std::vector<char> seen(rows.size(), 0);
  for (const auto& r : rows) {
    auto idx = static_cast<std::size_t>(r.c0) * nc + r.c1;
    if (seen[idx]) fail(ErrorCode::Parse, "field CSV: duplicate cell entry");
    seen[idx] = 1;
    g.set(r.c0, r.c1, r.value);
  }
  return g;
}

}  // namespace planar_ar
