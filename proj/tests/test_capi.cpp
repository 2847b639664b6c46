/*
 * (C) Copyright 2026 planar-ar developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>

#include "planar_ar/planar_ar.h"

namespace {

struct Model {
  par_model* m = nullptr;
  Model(double a, double b, double c, double s2) {
    REQUIRE(par_model_create(a, b, c, s2, &m) == PAR_OK);
  }
  ~Model() { par_model_free(m); }
};

std::string take(char* s) {
  std::string out(s);
  par_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("model lifecycle and condition report") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  par_condition_report r;
  REQUIRE(par_model_check(m.m, &r) == PAR_OK);
  CHECK(r.stationary);
  CHECK(r.causal);
  CHECK(r.d == doctest::Approx(0.5184));
  CHECK(r.symmetry == PAR_SYM_TRANSECT_UNCORRELATED);

  double a, b, c, s2;
  REQUIRE(par_model_params(m.m, &a, &b, &c, &s2) == PAR_OK);
  CHECK(a == -0.1);
  CHECK(s2 == 0.72);
}

TEST_CASE("status codes and last error text") {
  par_model* m = nullptr;
  CHECK(par_model_create(0.1, 0.1, 0.1, -1.0, &m) == PAR_EDOMAIN);
  CHECK(std::strlen(par_last_error_message()) > 0);
  CHECK(par_model_create(0.1, 0.1, 0.1, 1.0, nullptr) == PAR_EINVAL);
  CHECK(std::string(par_status_name(PAR_ENONSTATIONARY)) == "nonstationary");

  Model bad(0.5, 0.5, 0.5, 1.0);
  par_acf_grid* g = nullptr;
  CHECK(par_acf_grid_compute(bad.m, 0, 1, 0, 1, &g) == PAR_ENONSTATIONARY);
  par_field* f = nullptr;
  CHECK(par_simulate(bad.m, 8, 8, 1, PAR_SIM_BOUNDARY_RECURSION, PAR_NOISE_GAUSSIAN, 0,
                     &f) == PAR_ENONSTATIONARY);

  Model noncausal(-2.5, 0.5, 5.0, 18.0);
  par_psi_table* t = nullptr;
  CHECK(par_psi_table_compute(noncausal.m, 4, 4, &t) == PAR_ENONCAUSAL);
}

TEST_CASE("transform, canonical and equivalence") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  par_model* t2 = nullptr;
  REQUIRE(par_model_transform(m.m, 2, &t2) == PAR_OK);
  double a, b, c, s2;
  par_model_params(t2, &a, &b, &c, &s2);
  CHECK(a == doctest::Approx(-2.5));
  CHECK(s2 == doctest::Approx(18.0));

  par_model* canon = nullptr;
  int tr;
  par_flip flip;
  REQUIRE(par_model_canonical(t2, &canon, &tr, &flip) == PAR_OK);
  CHECK(tr == 2);
  CHECK(flip == PAR_FLIP_BOTH_AXES);
  par_model_params(canon, &a, &b, &c, &s2);
  CHECK(a == doctest::Approx(-0.1));
  par_model_free(canon);
  par_model_free(t2);

  par_equiv_class cls;
  REQUIRE(par_model_equivalence(m.m, &cls) == PAR_OK);
  CHECK(cls.class_size == 2);
  CHECK(cls.causal_member_index == 0);
  CHECK(cls.transform_id[1] == 2);
  CHECK(cls.params[1][2] == doctest::Approx(5.0));

  char* json = nullptr;
  REQUIRE(par_model_equivalence_json(m.m, &json) == PAR_OK);
  std::string js = take(json);
  CHECK(js.find("\"class_size\":2") != std::string::npos);

  par_product_structure ps;
  REQUIRE(par_model_product_structure(m.m, &ps) == PAR_OK);
  CHECK(ps == PAR_PROD_OPPOSITE_QUADRANT);
}

TEST_CASE("density and quadrature") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  double v;
  REQUIRE(par_density_at(m.m, 0.0, 0.0, &v) == PAR_OK);
  CHECK(v == doctest::Approx(4.5));
  REQUIRE(par_acf_quadrature(m.m, 1, 1, 512, PAR_QUAD_TRAPEZOID, &v) == PAR_OK);
  CHECK(std::abs(v - 0.15) < 1e-6);
  CHECK(par_acf_quadrature(m.m, 0, 0, 512, (par_quad_rule)7, &v) == PAR_EINVAL);
}

TEST_CASE("acf grids and CSV round trip") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  par_acf_grid* g = nullptr;
  REQUIRE(par_acf_grid_compute(m.m, -2, 3, -3, 3, &g) == PAR_OK);
  double v;
  REQUIRE(par_acf_grid_get(g, 1, 1, &v) == PAR_OK);
  CHECK(v == doctest::Approx(0.15));
  CHECK(par_acf_grid_get(g, 10, 0, &v) == PAR_ERANGE);

  char* csv = nullptr;
  REQUIRE(par_acf_grid_to_csv(g, &csv) == PAR_OK);
  std::string text = take(csv);
  CHECK(text.rfind("h1,h2,gamma\n", 0) == 0);

  par_acf_grid* back = nullptr;
  REQUIRE(par_acf_grid_from_csv(text.c_str(), &back) == PAR_OK);
  long b1, b2, b3, b4;
  par_acf_grid_bounds(back, &b1, &b2, &b3, &b4);
  CHECK(b1 == -2);
  CHECK(b2 == 3);
  CHECK(b3 == -3);
  CHECK(b4 == 3);
  for (long h1 = -2; h1 <= 3; ++h1)
    for (long h2 = -3; h2 <= 3; ++h2) {
      double x, y;
      par_acf_grid_get(g, h1, h2, &x);
      par_acf_grid_get(back, h1, h2, &y);
      CHECK(x == y);  // shortest round-trip formatting is lossless
    }
  par_acf_grid_free(back);
  par_acf_grid_free(g);

  CHECK(par_acf_grid_from_csv("h1,h2,gamma\n0,0,1\n0,2,1\n", &back) == PAR_EPARSE);
  CHECK(par_acf_grid_from_csv("bogus\n", &back) == PAR_EPARSE);
}

TEST_CASE("psi tables") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  double v;
  REQUIRE(par_psi(m.m, 1, 1, &v) == PAR_OK);
  CHECK(v == doctest::Approx(0.1));
  par_psi_table* t = nullptr;
  REQUIRE(par_psi_table_compute(m.m, 8, 8, &t) == PAR_OK);
  REQUIRE(par_psi_table_get(t, 2, 1, &v) == PAR_OK);
  CHECK(v == doctest::Approx(-0.025));
  REQUIRE(par_psi_table_tail_bound(t, &v) == PAR_OK);
  CHECK(v >= 0.0);
  par_psi_table_free(t);

  REQUIRE(par_cross_covariance(m.m, 1, 1, &v) == PAR_OK);
  CHECK(v == doctest::Approx(0.072));
}

TEST_CASE("fields: simulate, serialize, measure") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  par_field* f = nullptr;
  REQUIRE(par_simulate(m.m, 80, 64, 7, PAR_SIM_BOUNDARY_RECURSION, PAR_NOISE_GAUSSIAN,
                       0, &f) == PAR_OK);
  long nr, nc;
  par_field_dims(f, &nr, &nc);
  CHECK(nr == 80);
  CHECK(nc == 64);

  char* pgm = nullptr;
  REQUIRE(par_field_to_pgm(f, &pgm) == PAR_OK);
  std::string img = take(pgm);
  CHECK(img.rfind("P2\n", 0) == 0);
  CHECK(img.find("\"seed\":7") != std::string::npos);

  char* csv = nullptr;
  REQUIRE(par_field_to_csv(f, &csv) == PAR_OK);
  std::string text = take(csv);
  par_field* back = nullptr;
  REQUIRE(par_field_from_csv(text.c_str(), &back) == PAR_OK);
  double x, y;
  par_field_get(f, 13, 27, &x);
  par_field_get(back, 13, 27, &y);
  CHECK(x == y);
  par_field_free(back);

  par_acf_grid* emp = nullptr;
  REQUIRE(par_empirical_acf(f, 2, 2, &emp) == PAR_OK);
  double g01;
  par_acf_grid_get(emp, 0, 1, &g01);
  CHECK(std::abs(g01 - 0.5) < 0.2);
  par_acf_grid_free(emp);
  par_field_free(f);

  CHECK(par_field_from_csv("i,j,value\n0,0,1\n0,1,2\n1,0,3\n", &back) == PAR_EPARSE);
}

TEST_CASE("estimation round trip through the C surface") {
  Model m(-0.1, 0.5, 0.2, 0.72);
  par_acf_grid* g = nullptr;
  REQUIRE(par_acf_grid_compute(m.m, -2, 2, -2, 2, &g) == PAR_OK);
  par_estimate* e = nullptr;
  REQUIRE(par_recover_from_grid(g, 0, &e) == PAR_OK);
  double a, b, c, s2;
  REQUIRE(par_estimate_params(e, &a, &b, &c, &s2) == PAR_OK);
  CHECK(a == doctest::Approx(-0.1));
  CHECK(b == doctest::Approx(0.5));
  CHECK(c == doctest::Approx(0.2));
  CHECK(s2 == doctest::Approx(0.72));

  char* json = nullptr;
  REQUIRE(par_estimate_to_json(e, &json) == PAR_OK);
  std::string js = take(json);
  CHECK(js.find("\"orientation\":\"causal_quadrant\"") != std::string::npos);
  CHECK(js.find("\"equivalence_class\"") != std::string::npos);
  par_estimate_free(e);
  par_acf_grid_free(g);

  REQUIRE(par_recover_params(1.0, 0.0, 0.5, 0.15, &e) == PAR_OK);
  par_estimate_params(e, &a, &b, &c, &s2);
  CHECK(c == doctest::Approx(0.2));
  par_estimate_free(e);

  CHECK(par_recover_params(-1.0, 0.0, 0.0, 0.0, &e) == PAR_EDOMAIN);
}

TEST_CASE("format helper") {
  char buf[40];
  REQUIRE(par_format_double(0.1, buf, sizeof(buf)) == PAR_OK);
  CHECK(std::string(buf) == "0.1");
  CHECK(par_format_double(0.1, buf, 2) == PAR_EINVAL);
}
