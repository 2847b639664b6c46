/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "planar_ar/planar_ar.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/estimate.hpp"
#include "core/numeric.hpp"
#include "core/serialize.hpp"
#include "core/sim.hpp"
#include "core/spectral.hpp"

using namespace planar_ar;

struct par_model {
  ParamSet p;
};
struct par_acf_grid {
  AcfGrid g;
};
struct par_psi_table {
  PsiTable t;
};
struct par_field {
  FieldGrid f;
};
struct par_estimate {
  MomentEstimate e;
};

namespace {

thread_local std::string g_last_error;

par_status map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
      return PAR_EINVAL;
    case ErrorCode::Domain:
      return PAR_EDOMAIN;
    case ErrorCode::Nonstationary:
      return PAR_ENONSTATIONARY;
    case ErrorCode::Noncausal:
      return PAR_ENONCAUSAL;
    case ErrorCode::Range:
      return PAR_ERANGE;
    case ErrorCode::IllConditioned:
      return PAR_EILLCOND;
    case ErrorCode::InconsistentAcf:
      return PAR_EINCONSISTENT;
    case ErrorCode::Convergence:
      return PAR_ENOCONV;
    case ErrorCode::Parse:
      return PAR_EPARSE;
    case ErrorCode::Internal:
      return PAR_EINTERNAL;
  }
  return PAR_EINTERNAL;
}

template <typename F>
par_status wrap(F&& f) noexcept {
  try {
    return f();
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PAR_EINTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PAR_EINTERNAL;
  }
}

par_status invalid(const char* msg) {
  g_last_error = msg;
  return PAR_EINVAL;
}

par_status to_c_string(const std::string& s, char** out) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) {
    g_last_error = "out of memory";
    return PAR_EINTERNAL;
  }
  std::memcpy(buf, s.data(), s.size() + 1);
  *out = buf;
  return PAR_OK;
}

QuadratureRule rule_from_c(par_quad_rule rule) {
  if (rule != PAR_QUAD_TRAPEZOID && rule != PAR_QUAD_GAUSS_LEGENDRE)
    fail(ErrorCode::InvalidArgument, "unknown quadrature rule");
  return static_cast<QuadratureRule>(rule);
}

}  // namespace

extern "C" {

const char* par_status_name(par_status s) {
  switch (s) {
    case PAR_OK:
      return "ok";
    case PAR_EINVAL:
      return "invalid_argument";
    case PAR_EDOMAIN:
      return "domain_error";
    case PAR_ENONSTATIONARY:
      return "nonstationary";
    case PAR_ENONCAUSAL:
      return "noncausal";
    case PAR_ERANGE:
      return "range_error";
    case PAR_EILLCOND:
      return "ill_conditioned";
    case PAR_EINCONSISTENT:
      return "inconsistent_acf";
    case PAR_ENOCONV:
      return "no_convergence";
    case PAR_EPARSE:
      return "parse_error";
    case PAR_EINTERNAL:
      return "internal_error";
  }
  return "unknown";
}

const char* par_last_error_message(void) { return g_last_error.c_str(); }

const char* par_version(void) { return "1.0.0"; }

par_status par_format_double(double value, char* buf, size_t buf_size) {
  if (!buf) return invalid("null buffer");
  return wrap([&] {
    std::string s = fmt_double(value);
    if (s.size() + 1 > buf_size) return invalid("buffer too small");
    std::memcpy(buf, s.data(), s.size() + 1);
    return PAR_OK;
  });
}

void par_string_free(char* s) { std::free(s); }

par_status par_model_create(double a, double b, double c, double sigma2, par_model** out) {
  if (!out) return invalid("null out pointer");
  return wrap([&] {
    ParamSet p{a, b, c, sigma2};
    validate(p);
    *out = new par_model{p};
    return PAR_OK;
  });
}

void par_model_free(par_model* m) { delete m; }

par_status par_model_params(const par_model* m, double* a, double* b, double* c,
                            double* sigma2) {
  if (!m) return invalid("null model");
  if (a) *a = m->p.a;
  if (b) *b = m->p.b;
  if (c) *c = m->p.c;
  if (sigma2) *sigma2 = m->p.sigma2;
  return PAR_OK;
}

par_status par_model_check(const par_model* m, par_condition_report* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    ConditionReport r = check_conditions(m->p);
    out->f1 = r.f1;
    out->f2 = r.f2;
    out->f3 = r.f3;
    out->f4 = r.f4;
    out->d = r.d;
    out->stationary = r.stationary;
    out->causal = r.causal;
    out->pnd_sufficient = r.pnd_sufficient;
    out->near_boundary = r.near_boundary;
    out->symmetry = static_cast<par_symmetry>(r.symmetry);
    return PAR_OK;
  });
}

par_status par_model_transform(const par_model* m, int transform, par_model** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_model{planar_ar::transform(m->p, transform)};
    return PAR_OK;
  });
}

par_status par_model_equivalence(const par_model* m, par_equiv_class* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    EquivalenceClass cls = equivalence_class(m->p);
    out->class_size = static_cast<int>(cls.members.size());
    for (std::size_t i = 0; i < cls.members.size(); ++i) {
      out->transform_id[i] = cls.members[i].transform_id;
      out->params[i][0] = cls.members[i].params.a;
      out->params[i][1] = cls.members[i].params.b;
      out->params[i][2] = cls.members[i].params.c;
      out->params[i][3] = cls.members[i].params.sigma2;
    }
    out->causal_member_index = cls.causal_member_index;
    return PAR_OK;
  });
}

par_status par_model_check_json(const par_model* m, char** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_json(m->p, check_conditions(m->p)), out); });
}

par_status par_model_equivalence_json(const par_model* m, char** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_json(equivalence_class(m->p)), out); });
}

par_status par_model_canonical(const par_model* m, par_model** canonical, int* transform,
                               par_flip* flip) {
  if (!m || !canonical) return invalid("null argument");
  return wrap([&] {
    CanonicalCausal cc = canonical_causal(m->p);
    *canonical = new par_model{cc.params};
    if (transform) *transform = cc.transform_id;
    if (flip) *flip = static_cast<par_flip>(cc.flip);
    return PAR_OK;
  });
}

par_status par_model_product_structure(const par_model* m, par_product_structure* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = static_cast<par_product_structure>(classify_product_structure(m->p));
    return PAR_OK;
  });
}

par_status par_density_at(const par_model* m, double nu1, double nu2, double* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = density_at(m->p, nu1, nu2);
    return PAR_OK;
  });
}

par_status par_acf_quadrature(const par_model* m, long h1, long h2, int nodes_per_axis,
                              par_quad_rule rule, double* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    QuadratureSpec spec{nodes_per_axis, rule_from_c(rule)};
    *out = acf_quadrature(m->p, h1, h2, spec);
    return PAR_OK;
  });
}

par_status par_acf_value(const par_model* m, long h1, long h2, double* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    AcfGrid g = acf_grid(m->p, h1, h1, h2, h2);
    *out = g.at(h1, h2);
    return PAR_OK;
  });
}

par_status par_acf_grid_compute(const par_model* m, long h1_min, long h1_max, long h2_min,
                                long h2_max, par_acf_grid** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_acf_grid{acf_grid(m->p, h1_min, h1_max, h2_min, h2_max)};
    return PAR_OK;
  });
}

par_status par_acf_grid_quadrature(const par_model* m, long h1_min, long h1_max,
                                   long h2_min, long h2_max, int nodes_per_axis,
                                   par_quad_rule rule, par_acf_grid** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    QuadratureSpec spec{nodes_per_axis, rule_from_c(rule)};
    AcfQuadratureOracle oracle(m->p, spec);
    AcfGrid g(h1_min, h1_max, h2_min, h2_max);
    for (long h1 = h1_min; h1 <= h1_max; ++h1)
      for (long h2 = h2_min; h2 <= h2_max; ++h2) g.set(h1, h2, oracle.value(h1, h2));
    *out = new par_acf_grid{std::move(g)};
    return PAR_OK;
  });
}

par_status par_acf_grid_create(long h1_min, long h1_max, long h2_min, long h2_max,
                               par_acf_grid** out) {
  if (!out) return invalid("null out pointer");
  return wrap([&] {
    *out = new par_acf_grid{AcfGrid(h1_min, h1_max, h2_min, h2_max)};
    return PAR_OK;
  });
}

par_status par_acf_grid_set(par_acf_grid* g, long h1, long h2, double value) {
  if (!g) return invalid("null grid");
  return wrap([&] {
    g->g.set(h1, h2, value);
    return PAR_OK;
  });
}

par_status par_acf_grid_bounds(const par_acf_grid* g, long* h1_min, long* h1_max,
                               long* h2_min, long* h2_max) {
  if (!g) return invalid("null grid");
  if (h1_min) *h1_min = g->g.h1_min();
  if (h1_max) *h1_max = g->g.h1_max();
  if (h2_min) *h2_min = g->g.h2_min();
  if (h2_max) *h2_max = g->g.h2_max();
  return PAR_OK;
}

par_status par_acf_grid_get(const par_acf_grid* g, long h1, long h2, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] {
    *out = g->g.at(h1, h2);
    return PAR_OK;
  });
}

par_status par_acf_grid_to_csv(const par_acf_grid* g, char** out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_csv(g->g), out); });
}

par_status par_acf_grid_to_json(const par_acf_grid* g, char** out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_json(g->g), out); });
}

par_status par_acf_grid_from_csv(const char* text, par_acf_grid** out) {
  if (!text || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_acf_grid{acf_grid_from_csv(text)};
    return PAR_OK;
  });
}

void par_acf_grid_free(par_acf_grid* g) { delete g; }

par_status par_psi(const par_model* m, long k, long l, double* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = psi(m->p, k, l);
    return PAR_OK;
  });
}

par_status par_psi_table_compute(const par_model* m, long kmax, long lmax,
                                 par_psi_table** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_psi_table{psi_table(m->p, kmax, lmax)};
    return PAR_OK;
  });
}

par_status par_psi_table_dims(const par_psi_table* t, long* kmax, long* lmax) {
  if (!t) return invalid("null table");
  if (kmax) *kmax = t->t.kmax();
  if (lmax) *lmax = t->t.lmax();
  return PAR_OK;
}

par_status par_psi_table_get(const par_psi_table* t, long k, long l, double* out) {
  if (!t || !out) return invalid("null argument");
  *out = t->t.at(k, l);
  return PAR_OK;
}

par_status par_psi_table_tail_bound(const par_psi_table* t, double* out) {
  if (!t || !out) return invalid("null argument");
  *out = t->t.tail_bound();
  return PAR_OK;
}

par_status par_psi_table_to_csv(const par_psi_table* t, char** out) {
  if (!t || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_csv(t->t), out); });
}

par_status par_psi_table_to_json(const par_psi_table* t, char** out) {
  if (!t || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_json(t->t), out); });
}

void par_psi_table_free(par_psi_table* t) { delete t; }

par_status par_cross_covariance(const par_model* m, long h1, long h2, double* out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    *out = cross_covariance(m->p, h1, h2);
    return PAR_OK;
  });
}

par_status par_simulate(const par_model* m, long n_rows, long n_cols, uint64_t seed,
                        par_sim_method method, par_noise noise, double tol,
                        par_field** out) {
  if (!m || !out) return invalid("null argument");
  return wrap([&] {
    SimOptions opts;
    opts.method = method == PAR_SIM_CAUSAL_MA ? SimMethod::CausalMA
                                              : SimMethod::BoundaryRecursion;
    opts.noise = noise == PAR_NOISE_UNIFORM ? NoiseKind::Uniform : NoiseKind::Gaussian;
    if (tol > 0.0) opts.tol = tol;
    *out = new par_field{simulate_stationary(m->p, n_rows, n_cols, seed, opts)};
    return PAR_OK;
  });
}

par_status par_field_dims(const par_field* f, long* n_rows, long* n_cols) {
  if (!f) return invalid("null field");
  if (n_rows) *n_rows = f->f.n_rows();
  if (n_cols) *n_cols = f->f.n_cols();
  return PAR_OK;
}

par_status par_field_get(const par_field* f, long i, long j, double* out) {
  if (!f || !out) return invalid("null argument");
  return wrap([&] {
    *out = f->f.at(i, j);
    return PAR_OK;
  });
}

par_status par_field_to_csv(const par_field* f, char** out) {
  if (!f || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_csv(f->f), out); });
}

par_status par_field_to_json(const par_field* f, char** out) {
  if (!f || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_json(f->f), out); });
}

par_status par_field_to_pgm(const par_field* f, char** out) {
  if (!f || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_pgm(f->f), out); });
}

par_status par_field_from_csv(const char* text, par_field** out) {
  if (!text || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_field{field_from_csv(text)};
    return PAR_OK;
  });
}

void par_field_free(par_field* f) { delete f; }

par_status par_empirical_acf(const par_field* f, long h1_max, long h2_max,
                             par_acf_grid** out) {
  if (!f || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_acf_grid{empirical_acf(f->f, h1_max, h2_max)};
    return PAR_OK;
  });
}

par_status par_recover_params(double g00, double g10, double g01, double g11,
                              par_estimate** out) {
  if (!out) return invalid("null out pointer");
  return wrap([&] {
    *out = new par_estimate{recover_params(g00, g10, g01, g11)};
    return PAR_OK;
  });
}

par_status par_recover_from_grid(const par_acf_grid* g, int empirical, par_estimate** out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] {
    *out = new par_estimate{recover_from_grid(
        g->g, empirical ? EstimateSource::EmpiricalAcf : EstimateSource::ExactAcf)};
    return PAR_OK;
  });
}

par_status par_estimate_params(const par_estimate* e, double* a, double* b, double* c,
                               double* sigma2) {
  if (!e) return invalid("null estimate");
  if (a) *a = e->e.params.a;
  if (b) *b = e->e.params.b;
  if (c) *c = e->e.params.c;
  if (sigma2) *sigma2 = e->e.params.sigma2;
  return PAR_OK;
}

par_status par_estimate_to_json(const par_estimate* e, char** out) {
  if (!e || !out) return invalid("null argument");
  return wrap([&] { return to_c_string(to_json(e->e), out); });
}

void par_estimate_free(par_estimate* e) { delete e; }

}  // extern "C"
