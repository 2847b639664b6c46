/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line front end over the planar-ar C API.
//
// Exit codes: 0 success, 1 usage or input-parsing error, 2 domain error
// (nonstationary parameters, inconsistent data, ...).

#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "planar_ar/planar_ar.h"

namespace {

struct CliError {
  int exit_code;
  std::string message;
};

[[noreturn]] void bail(par_status st) {
  int code = (st == PAR_EINVAL || st == PAR_EPARSE) ? 1 : 2;
  throw CliError{code, par_last_error_message()};
}

void check(par_status st) {
  if (st != PAR_OK) bail(st);
}

std::string take_string(char* s) {
  std::string out(s);
  par_string_free(s);
  return out;
}

std::string fmt(double v) {
  char buf[40];
  check(par_format_double(v, buf, sizeof(buf)));
  return buf;
}

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// temp file + rename so a crash never leaves a partial file behind
void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  namespace fs = std::filesystem;
  fs::path target(out_path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw CliError{1, "cannot open output file " + tmp.string()};
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw CliError{1, "cannot write output file " + tmp.string()};
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) throw CliError{1, "cannot move output into place: " + ec.message()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw CliError{1, "cannot open input file " + path};
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

using ModelPtr = std::unique_ptr<par_model, decltype(&par_model_free)>;
using GridPtr = std::unique_ptr<par_acf_grid, decltype(&par_acf_grid_free)>;
using FieldPtr = std::unique_ptr<par_field, decltype(&par_field_free)>;
using TablePtr = std::unique_ptr<par_psi_table, decltype(&par_psi_table_free)>;
using EstimatePtr = std::unique_ptr<par_estimate, decltype(&par_estimate_free)>;

struct ModelFlags {
  double a = 0.0, b = 0.0, c = 0.0, sigma2 = 1.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-a", a, "coefficient of X[i-1][j]")->required();
    cmd->add_option("-b", b, "coefficient of X[i][j-1]")->required();
    cmd->add_option("-c", c, "coefficient of X[i-1][j-1]")->required();
    cmd->add_option("--sigma2", sigma2, "noise variance (default 1)");
  }

  ModelPtr make() const {
    par_model* m = nullptr;
    check(par_model_create(a, b, c, sigma2, &m));
    return ModelPtr(m, par_model_free);
  }
};

const char* symmetry_name(par_symmetry s) {
  switch (s) {
    case PAR_SYM_GENERIC: return "generic";
    case PAR_SYM_SYMMETRIC_ABC: return "symmetric_abc";
    case PAR_SYM_TRANSECT_UNCORRELATED: return "transect_uncorrelated";
    case PAR_SYM_DEGENERATE: return "degenerate";
  }
  return "?";
}

// ---------- check ----------

int run_check(const ModelFlags& mf, const std::string& format, const std::string& out) {
  ModelPtr m = mf.make();
  par_condition_report r;
  check(par_model_check(m.get(), &r));

  std::string text;
  if (format == "json") {
    char* s = nullptr;
    check(par_model_check_json(m.get(), &s));
    text = take_string(s) + "\n";
  } else if (format == "table") {
    std::ostringstream ss;
    ss << "f1 = " << fmt6(r.f1) << "\nf2 = " << fmt6(r.f2) << "\nf3 = " << fmt6(r.f3)
       << "\nf4 = " << fmt6(r.f4) << "\nD  = " << fmt6(r.d)
       << "\nstationary     = " << (r.stationary ? "yes" : "no")
       << "\ncausal         = " << (r.causal ? "yes" : "no")
       << "\npnd_sufficient = " << (r.pnd_sufficient ? "yes" : "no")
       << "\nnear_boundary  = " << (r.near_boundary ? "yes" : "no")
       << "\nsymmetry       = " << symmetry_name(r.symmetry) << "\n";
    text = ss.str();
  } else {
    throw CliError{1, "check supports --format json|table"};
  }
  emit(text, out);
  return r.stationary ? 0 : 2;
}

// ---------- acf ----------

std::string grid_table(const par_acf_grid* g) {
  long h1_min, h1_max, h2_min, h2_max;
  check(par_acf_grid_bounds(g, &h1_min, &h1_max, &h2_min, &h2_max));
  std::ostringstream ss;
  ss << "h2\\h1";
  for (long h1 = h1_min; h1 <= h1_max; ++h1) ss << '\t' << h1;
  ss << '\n';
  for (long h2 = h2_max; h2 >= h2_min; --h2) {
    ss << h2;
    for (long h1 = h1_min; h1 <= h1_max; ++h1) {
      double v;
      check(par_acf_grid_get(g, h1, h2, &v));
      ss << '\t' << fmt6(v);
    }
    ss << '\n';
  }
  return ss.str();
}

int run_acf(const ModelFlags& mf, long h1_min, long h1_max, long h2_min, long h2_max,
            bool oracle, int nodes, const std::string& format, const std::string& out) {
  ModelPtr m = mf.make();
  par_acf_grid* graw = nullptr;
  check(par_acf_grid_compute(m.get(), h1_min, h1_max, h2_min, h2_max, &graw));
  GridPtr g(graw, par_acf_grid_free);

  GridPtr q(nullptr, par_acf_grid_free);
  if (oracle) {
    par_acf_grid* qraw = nullptr;
    check(par_acf_grid_quadrature(m.get(), h1_min, h1_max, h2_min, h2_max, nodes,
                                  PAR_QUAD_TRAPEZOID, &qraw));
    q.reset(qraw);
  }

  std::string text;
  if (format == "csv") {
    if (!oracle) {
      char* s = nullptr;
      check(par_acf_grid_to_csv(g.get(), &s));
      text = take_string(s);
    } else {
      std::ostringstream ss;
      ss << "h1,h2,gamma,oracle,abs_diff\n";
      for (long h1 = h1_min; h1 <= h1_max; ++h1)
        for (long h2 = h2_min; h2 <= h2_max; ++h2) {
          double ve, vq;
          check(par_acf_grid_get(g.get(), h1, h2, &ve));
          check(par_acf_grid_get(q.get(), h1, h2, &vq));
          ss << h1 << ',' << h2 << ',' << fmt(ve) << ',' << fmt(vq) << ','
             << fmt(std::abs(ve - vq)) << '\n';
        }
      text = ss.str();
    }
  } else if (format == "json") {
    char* s = nullptr;
    check(par_acf_grid_to_json(g.get(), &s));
    text = take_string(s);
    if (oracle) {
      char* s2 = nullptr;
      check(par_acf_grid_to_json(q.get(), &s2));
      text = "{\"exact\":" + text + ",\"oracle\":" + take_string(s2) + "}";
    }
    text += "\n";
  } else if (format == "table") {
    text = grid_table(g.get());
    if (oracle) {
      double worst = 0.0;
      for (long h1 = h1_min; h1 <= h1_max; ++h1)
        for (long h2 = h2_min; h2 <= h2_max; ++h2) {
          double ve, vq;
          check(par_acf_grid_get(g.get(), h1, h2, &ve));
          check(par_acf_grid_get(q.get(), h1, h2, &vq));
          worst = std::max(worst, std::abs(ve - vq));
        }
      text += "max |exact - oracle| = " + fmt6(worst) + "\n";
    }
  } else {
    throw CliError{1, "acf supports --format csv|json|table"};
  }
  emit(text, out);
  return 0;
}

// ---------- psi ----------

int run_psi(const ModelFlags& mf, long kmax, long lmax, const std::string& format,
            const std::string& out) {
  ModelPtr m = mf.make();
  par_psi_table* traw = nullptr;
  check(par_psi_table_compute(m.get(), kmax, lmax, &traw));
  TablePtr t(traw, par_psi_table_free);

  std::string text;
  if (format == "csv") {
    char* s = nullptr;
    check(par_psi_table_to_csv(t.get(), &s));
    text = take_string(s);
  } else if (format == "json") {
    char* s = nullptr;
    check(par_psi_table_to_json(t.get(), &s));
    text = take_string(s) + "\n";
  } else if (format == "table") {
    std::ostringstream ss;
    ss << "k\\l";
    for (long l = 0; l <= lmax; ++l) ss << '\t' << l;
    ss << '\n';
    for (long k = 0; k <= kmax; ++k) {
      ss << k;
      for (long l = 0; l <= lmax; ++l) {
        double v;
        check(par_psi_table_get(t.get(), k, l, &v));
        ss << '\t' << fmt6(v);
      }
      ss << '\n';
    }
    double tail;
    check(par_psi_table_tail_bound(t.get(), &tail));
    ss << "estimated tail mass = " << fmt6(tail) << "\n";
    text = ss.str();
  } else {
    throw CliError{1, "psi supports --format csv|json|table"};
  }
  emit(text, out);
  return 0;
}

// ---------- simulate ----------

int run_simulate(const ModelFlags& mf, long rows, long cols, std::uint64_t seed,
                 const std::string& method, const std::string& noise, double tol,
                 const std::string& format, const std::string& out) {
  ModelPtr m = mf.make();
  par_sim_method meth;
  if (method == "recursion")
    meth = PAR_SIM_BOUNDARY_RECURSION;
  else if (method == "ma")
    meth = PAR_SIM_CAUSAL_MA;
  else
    throw CliError{1, "simulate supports --method recursion|ma"};
  par_noise nk;
  if (noise == "gaussian")
    nk = PAR_NOISE_GAUSSIAN;
  else if (noise == "uniform")
    nk = PAR_NOISE_UNIFORM;
  else
    throw CliError{1, "simulate supports --noise gaussian|uniform"};

  par_field* fraw = nullptr;
  check(par_simulate(m.get(), rows, cols, seed, meth, nk, tol, &fraw));
  FieldPtr f(fraw, par_field_free);

  char* s = nullptr;
  if (format == "pgm")
    check(par_field_to_pgm(f.get(), &s));
  else if (format == "csv")
    check(par_field_to_csv(f.get(), &s));
  else if (format == "json")
    check(par_field_to_json(f.get(), &s));
  else
    throw CliError{1, "simulate supports --format pgm|csv|json"};
  std::string text = take_string(s);
  if (format == "json") text += "\n";
  emit(text, out);
  return 0;
}

// ---------- estimate ----------

int run_estimate(const std::string& acf_path, const std::string& field_path,
                 bool empirical, const std::string& format, const std::string& out) {
  if (acf_path.empty() == field_path.empty())
    throw CliError{1, "estimate needs exactly one of --acf or --field"};

  GridPtr grid(nullptr, par_acf_grid_free);
  if (!acf_path.empty()) {
    par_acf_grid* graw = nullptr;
    check(par_acf_grid_from_csv(slurp(acf_path).c_str(), &graw));
    grid.reset(graw);
  } else {
    par_field* fraw = nullptr;
    check(par_field_from_csv(slurp(field_path).c_str(), &fraw));
    FieldPtr f(fraw, par_field_free);
    par_acf_grid* graw = nullptr;
    check(par_empirical_acf(f.get(), 2, 2, &graw));
    grid.reset(graw);
    empirical = true;
  }

  par_estimate* eraw = nullptr;
  check(par_recover_from_grid(grid.get(), empirical ? 1 : 0, &eraw));
  EstimatePtr e(eraw, par_estimate_free);

  std::string text;
  if (format == "json") {
    char* s = nullptr;
    check(par_estimate_to_json(e.get(), &s));
    text = take_string(s) + "\n";
  } else if (format == "table") {
    double a, b, c, sigma2;
    check(par_estimate_params(e.get(), &a, &b, &c, &sigma2));
    std::ostringstream ss;
    ss << "a      = " << fmt6(a) << "\nb      = " << fmt6(b) << "\nc      = " << fmt6(c)
       << "\nsigma2 = " << fmt6(sigma2) << "\n";
    text = ss.str();
  } else {
    throw CliError{1, "estimate supports --format json|table"};
  }
  emit(text, out);
  return 0;
}

// ---------- equiv ----------

int run_equiv(const ModelFlags& mf, const std::string& format, const std::string& out) {
  ModelPtr m = mf.make();
  std::string text;
  if (format == "json") {
    char* s = nullptr;
    check(par_model_equivalence_json(m.get(), &s));
    text = take_string(s) + "\n";
  } else if (format == "table") {
    par_equiv_class cls;
    check(par_model_equivalence(m.get(), &cls));
    std::ostringstream ss;
    ss << "class size " << cls.class_size << "\n";
    for (int i = 0; i < cls.class_size; ++i) {
      ss << "T" << cls.transform_id[i] << ": a=" << fmt6(cls.params[i][0])
         << " b=" << fmt6(cls.params[i][1]) << " c=" << fmt6(cls.params[i][2])
         << " sigma2=" << fmt6(cls.params[i][3])
         << (i == cls.causal_member_index ? "  (causal)" : "") << "\n";
    }
    if (cls.causal_member_index < 0)
      ss << "no causal member; the causal orbit element realizes the flipped ACF\n";
    text = ss.str();
  } else {
    throw CliError{1, "equiv supports --format json|table"};
  }
  emit(text, out);
  return 0;
}

// ---------- spectrum ----------

int run_spectrum(const ModelFlags& mf, int resolution, const std::string& format,
                 const std::string& out) {
  if (resolution < 2) throw CliError{1, "--resolution must be >= 2"};
  ModelPtr m = mf.make();
  std::vector<double> nu(resolution);
  for (int k = 0; k < resolution; ++k)
    nu[k] = -0.5 + static_cast<double>(k) / (resolution - 1);

  std::string text;
  if (format == "csv") {
    std::ostringstream ss;
    ss << "nu1,nu2,density\n";
    for (int i = 0; i < resolution; ++i)
      for (int j = 0; j < resolution; ++j) {
        double v;
        check(par_density_at(m.get(), nu[i], nu[j], &v));
        ss << fmt(nu[i]) << ',' << fmt(nu[j]) << ',' << fmt(v) << '\n';
      }
    text = ss.str();
  } else if (format == "json") {
    std::ostringstream ss;
    ss << "{\"resolution\":" << resolution << ",\"values\":[";
    for (int i = 0; i < resolution; ++i)
      for (int j = 0; j < resolution; ++j) {
        double v;
        check(par_density_at(m.get(), nu[i], nu[j], &v));
        if (i != 0 || j != 0) ss << ',';
        ss << fmt(v);
      }
    ss << "]}\n";
    text = ss.str();
  } else {
    throw CliError{1, "spectrum supports --format csv|json"};
  }
  emit(text, out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar autoregressive lattice model toolkit"};
  app.require_subcommand(1);

  std::string format = "table", out_path;
  ModelFlags mf;

  auto* c_check = app.add_subcommand("check", "existence/causality conditions");
  mf.add_to(c_check);
  c_check->add_option("--format", format, "json|table");
  c_check->add_option("--out", out_path, "output path (default stdout)");

  ModelFlags mf_acf;
  long h1_min = -3, h1_max = 3, h2_min = -3, h2_max = 3;
  bool oracle = false;
  int nodes = 2048;
  auto* c_acf = app.add_subcommand("acf", "exact autocovariance window");
  mf_acf.add_to(c_acf);
  c_acf->add_option("--h1-min", h1_min);
  c_acf->add_option("--h1-max", h1_max);
  c_acf->add_option("--h2-min", h2_min);
  c_acf->add_option("--h2-max", h2_max);
  c_acf->add_flag("--oracle", oracle, "verify each entry against the quadrature oracle");
  c_acf->add_option("--nodes", nodes, "oracle nodes per axis (default 2048)");
  std::string acf_format = "csv", acf_out;
  c_acf->add_option("--format", acf_format, "csv|json|table");
  c_acf->add_option("--out", acf_out);

  ModelFlags mf_psi;
  long kmax = 8, lmax = 8;
  auto* c_psi = app.add_subcommand("psi", "MA coefficient table");
  mf_psi.add_to(c_psi);
  c_psi->add_option("--kmax", kmax);
  c_psi->add_option("--lmax", lmax);
  std::string psi_format = "csv", psi_out;
  c_psi->add_option("--format", psi_format, "csv|json|table");
  c_psi->add_option("--out", psi_out);

  ModelFlags mf_sim;
  long rows = 256, cols = 256;
  std::uint64_t seed = 0;
  std::string method = "recursion", noise = "gaussian";
  double tol = 1e-8;
  auto* c_sim = app.add_subcommand("simulate", "seeded stationary field draw");
  mf_sim.add_to(c_sim);
  c_sim->add_option("--rows", rows);
  c_sim->add_option("--cols", cols);
  c_sim->add_option("--seed", seed);
  c_sim->add_option("--method", method, "recursion|ma");
  c_sim->add_option("--noise", noise, "gaussian|uniform");
  c_sim->add_option("--tol", tol, "kernel-tail / burn-in decay target");
  std::string sim_format = "pgm", sim_out;
  c_sim->add_option("--format", sim_format, "pgm|csv|json");
  c_sim->add_option("--out", sim_out);

  std::string est_acf, est_field;
  bool est_empirical = false;
  auto* c_est = app.add_subcommand("estimate", "moment recovery from an ACF or field file");
  c_est->add_option("--acf", est_acf, "ACF CSV (h1,h2,gamma)");
  c_est->add_option("--field", est_field, "field CSV (i,j,value)");
  c_est->add_flag("--empirical", est_empirical, "treat the ACF file as sample data");
  std::string est_format = "json", est_out;
  c_est->add_option("--format", est_format, "json|table");
  c_est->add_option("--out", est_out);

  ModelFlags mf_equiv;
  auto* c_equiv = app.add_subcommand("equiv", "parameter sets sharing the ACF");
  mf_equiv.add_to(c_equiv);
  std::string equiv_format = "table", equiv_out;
  c_equiv->add_option("--format", equiv_format, "json|table");
  c_equiv->add_option("--out", equiv_out);

  ModelFlags mf_spec;
  int resolution = 65;
  auto* c_spec = app.add_subcommand("spectrum", "spectral density on a frequency grid");
  mf_spec.add_to(c_spec);
  c_spec->add_option("--resolution", resolution, "points per axis (default 65)");
  std::string spec_format = "csv", spec_out;
  c_spec->add_option("--format", spec_format, "csv|json");
  c_spec->add_option("--out", spec_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  try {
    if (c_check->parsed()) return run_check(mf, format, out_path);
    if (c_acf->parsed())
      return run_acf(mf_acf, h1_min, h1_max, h2_min, h2_max, oracle, nodes, acf_format, acf_out);
    if (c_psi->parsed()) return run_psi(mf_psi, kmax, lmax, psi_format, psi_out);
    if (c_sim->parsed())
      return run_simulate(mf_sim, rows, cols, seed, method, noise, tol, sim_format, sim_out);
    if (c_est->parsed()) return run_estimate(est_acf, est_field, est_empirical, est_format, est_out);
    if (c_equiv->parsed()) return run_equiv(mf_equiv, equiv_format, equiv_out);
    if (c_spec->parsed()) return run_spectrum(mf_spec, resolution, spec_format, spec_out);
  } catch (const CliError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return e.exit_code;
  }
  return 1;
}
