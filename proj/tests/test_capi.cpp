#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include "pcd/pcd.h"

namespace {

struct Map {
  pcd_map* m = nullptr;
  ~Map() { pcd_map_free(m); }
};

struct Digraph {
  pcd_digraph* d = nullptr;
  ~Digraph() { pcd_digraph_free(d); }
};

std::string take(char* s) {
  std::string out = s ? s : "";
  pcd_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("triangle helpers") {
  pcd_triangle t;
  pcd_equilateral_triangle(&t);
  CHECK(pcd_triangle_check(&t) == PCD_OK);
  double a = 0;
  CHECK(pcd_triangle_area(&t, &a) == PCD_OK);
  CHECK(a == doctest::Approx(std::sqrt(3.0) / 4));

  int inside = 0;
  CHECK(pcd_triangle_contains(&t, {0.5, 0.2}, &inside) == PCD_OK);
  CHECK(inside == 1);
  CHECK(pcd_triangle_contains(&t, {0.5, -0.2}, &inside) == PCD_OK);
  CHECK(inside == 0);

  pcd_triangle bad{{{0, 0}, {1, 1}, {2, 2}}};
  CHECK(pcd_triangle_check(&bad) == PCD_ERR_DEGENERATE);
  CHECK(std::strlen(pcd_last_error()) > 0);
  CHECK(pcd_triangle_check(nullptr) == PCD_ERR_INVALID);

  pcd_triangle b;
  CHECK(pcd_basic_triangle(0.3, 0.8, &b) == PCD_OK);
  CHECK(b.v[2].x == 0.3);
  CHECK(pcd_basic_triangle(0.3, -1, &b) != PCD_OK);
}

TEST_CASE("maps") {
  pcd_triangle t;
  pcd_equilateral_triangle(&t);
  Map pe;
  REQUIRE(pcd_map_pe(&t, 2.0, nullptr, &pe.m) == PCD_OK);
  int in = 0;
  CHECK(pcd_map_contains(pe.m, {0.5, 0.2}, {0.5, 0.25}, &in) == PCD_OK);
  CHECK(in == 1);
  CHECK(pcd_map_contains(pe.m, {0.5, -1}, {0.5, 0.25}, &in) == PCD_ERR_OUTSIDE);
  CHECK(pcd_map_kappa(pe.m) == 3);

  pcd_point M;
  CHECK(pcd_map_center(pe.m, &M) == PCD_OK);
  CHECK(M.y == doctest::Approx(std::sqrt(3.0) / 6));

  Map inf;
  REQUIRE(pcd_map_pe(&t, INFINITY, nullptr, &inf.m) == PCD_OK);
  CHECK(pcd_map_contains(inf.m, {0.1, 0.05}, {0.9, 0.1}, &in) == PCD_OK);
  CHECK(in == 1);

  Map cs;
  const pcd_center incenter{PCD_CENTER_INCENTER, {0, 0}};
  REQUIRE(pcd_map_cs(&t, 1.0, &incenter, &cs.m) == PCD_OK);
  CHECK(pcd_map_kappa(cs.m) == -1);
  Map bad;
  CHECK(pcd_map_cs(&t, 2.0, nullptr, &bad.m) == PCD_ERR_INVALID);
  CHECK(bad.m == nullptr);
  const pcd_center corner{PCD_CENTER_CUSTOM, {0, 0}};
  CHECK(pcd_map_pe(&t, 2.0, &corner, &bad.m) == PCD_ERR_OUTSIDE);

  Map sph, as, iv;
  CHECK(pcd_map_spherical(&t, &sph.m) == PCD_OK);
  CHECK(pcd_map_kappa(sph.m) == 0);
  CHECK(pcd_map_arcslice(&t, &as.m) == PCD_OK);
  const double ys[] = {1.0, 0.0};
  CHECK(pcd_map_interval(ys, 2, &iv.m) == PCD_OK);
  CHECK(pcd_map_kappa(iv.m) == 2);
  CHECK(pcd_map_contains(iv.m, {0.3, 0}, {0.55, 0}, &in) == PCD_OK);
  CHECK(in == 1);
  CHECK(pcd_map_contains(iv.m, {0.3, 0}, {0.65, 0}, &in) == PCD_OK);
  CHECK(in == 0);
}

TEST_CASE("digraphs") {
  pcd_triangle t;
  pcd_equilateral_triangle(&t);
  Map cs;
  REQUIRE(pcd_map_cs(&t, 1.0, nullptr, &cs.m) == PCD_OK);

  std::vector<pcd_point> pts(6);
  REQUIRE(pcd_cs_construction(cs.m, pts.size(), 0.0, 1, pts.data()) == PCD_OK);
  Digraph d;
  REQUIRE(pcd_digraph_build(cs.m, pts.data(), pts.size(), &d.d) == PCD_OK);
  CHECK(pcd_digraph_order(d.d) == 6);
  CHECK(pcd_digraph_arc_count(d.d) == 0);
  size_t gamma = 0, len = 0;
  int exact = 0;
  std::vector<size_t> witness(6);
  CHECK(pcd_digraph_domination(d.d, 0, &gamma, witness.data(), witness.size(), &len, &exact) == PCD_OK);
  CHECK(gamma == 6);
  CHECK(len == 6);
  CHECK(exact == 1);

  REQUIRE(pcd_cs_construction(cs.m, pts.size(), -1.0, 9, pts.data()) == PCD_OK);
  Digraph e;
  REQUIRE(pcd_digraph_build(cs.m, pts.data(), pts.size(), &e.d) == PCD_OK);
  CHECK(pcd_digraph_domination(e.d, 0, &gamma, nullptr, 0, nullptr, nullptr) == PCD_OK);
  CHECK(gamma == 6);
  double eps = 0;
  CHECK(pcd_cs_construction_default_eps(cs.m, 4, &eps) == PCD_OK);
  // centroid of the unit equilateral triangle: d = h = sqrt(3)/6, R = sqrt(3)/3
  CHECK(eps == doctest::Approx(std::sqrt(3.0) / 6 / (2 * 4 * 4.0)));

  // complete digraph
  Map inf;
  REQUIRE(pcd_map_pe(&t, INFINITY, nullptr, &inf.m) == PCD_OK);
  std::vector<pcd_point> s(20);
  REQUIRE(pcd_sample_uniform(&t, s.size(), 3, s.data()) == PCD_OK);
  Digraph full;
  REQUIRE(pcd_digraph_build(inf.m, s.data(), s.size(), &full.d) == PCD_OK);
  double rho = 0;
  CHECK(pcd_digraph_density(full.d, &rho) == PCD_OK);
  CHECK(rho == 1.0);
  std::vector<size_t> arcs(2 * pcd_digraph_arc_count(full.d));
  CHECK(pcd_digraph_arcs(full.d, arcs.data(), arcs.size() / 2) == PCD_OK);
  CHECK(arcs[0] == 0);
  CHECK(arcs[1] == 1);
  CHECK(pcd_digraph_arcs(full.d, arcs.data(), 1) == PCD_ERR_INVALID);

  std::vector<pcd_point> outside{{0.5, 0.2}, {5, 5}};
  Digraph bad;
  CHECK(pcd_digraph_build(inf.m, outside.data(), outside.size(), &bad.d) == PCD_ERR_OUTSIDE);

  Digraph one;
  REQUIRE(pcd_digraph_build(inf.m, s.data(), 1, &one.d) == PCD_OK);
  CHECK(pcd_digraph_density(one.d, &rho) == PCD_ERR_INVALID);
}

TEST_CASE("json round trip") {
  pcd_triangle t;
  pcd_equilateral_triangle(&t);
  Map pe;
  REQUIRE(pcd_map_pe(&t, 1.5, nullptr, &pe.m) == PCD_OK);
  std::vector<pcd_point> s(15);
  REQUIRE(pcd_sample_uniform(&t, s.size(), 11, s.data()) == PCD_OK);
  Digraph d;
  REQUIRE(pcd_digraph_build(pe.m, s.data(), s.size(), &d.d) == PCD_OK);
  char* raw = nullptr;
  REQUIRE(pcd_digraph_to_json(d.d, pe.m, 11, 1, &raw) == PCD_OK);
  const std::string text = take(raw);
  CHECK(text.find("\"seed\": 11") != std::string::npos);
  CHECK(text.find("\"family\": \"pe\"") != std::string::npos);

  Digraph back;
  REQUIRE(pcd_digraph_from_json(text.c_str(), &back.d) == PCD_OK);
  CHECK(pcd_digraph_arc_count(back.d) == pcd_digraph_arc_count(d.d));
  CHECK(pcd_digraph_kappa(back.d) == 3);
  size_t g1 = 0, g2 = 0;
  pcd_digraph_domination(d.d, 0, &g1, nullptr, 0, nullptr, nullptr);
  pcd_digraph_domination(back.d, 0, &g2, nullptr, 0, nullptr, nullptr);
  CHECK(g1 == g2);
  Digraph junk;
  CHECK(pcd_digraph_from_json("not json", &junk.d) == PCD_ERR_INVALID);
}

TEST_CASE("first-order regions and figures") {
  pcd_triangle t;
  pcd_equilateral_triangle(&t);
  Map pe;
  REQUIRE(pcd_map_pe(&t, 2.0, nullptr, &pe.m) == PCD_OK);
  const pcd_point x{0.4, 0.3};
  pcd_gamma1* g = nullptr;
  REQUIRE(pcd_gamma1_compute(pe.m, &x, 1, &g) == PCD_OK);
  CHECK(pcd_gamma1_kind(g) == PCD_REGION_POLYGON);
  CHECK(pcd_gamma1_hull_size(g) == 6);
  CHECK(pcd_gamma1_area(g) > 0);
  double total = 0;
  for (int c = 0; c < 3; ++c) {
    std::vector<pcd_point> v(pcd_gamma1_piece_size(g, c));
    CHECK(pcd_gamma1_piece(g, c, v.data(), v.size()) == PCD_OK);
    double a = 0;
    for (size_t i = 0; i < v.size(); ++i) {
      const pcd_point p = v[i], q = v[(i + 1) % v.size()];
      a += p.x * q.y - q.x * p.y;
    }
    total += a / 2;
  }
  CHECK(total == doctest::Approx(pcd_gamma1_area(g)));
  pcd_point p;
  CHECK(pcd_gamma1_point(g, &p) == PCD_ERR_INVALID);

  char* svg = nullptr;
  REQUIRE(pcd_svg_render(pe.m, &x, 1, g, &svg) == PCD_OK);
  const std::string s = take(svg);
  CHECK(s.find("<svg") != std::string::npos);
  CHECK(s.find("id=\"gamma1\"") != std::string::npos);
  pcd_gamma1_free(g);

  const pcd_point v1{0, 0};
  REQUIRE(pcd_gamma1_compute(pe.m, &v1, 1, &g) == PCD_OK);
  CHECK(pcd_gamma1_kind(g) == PCD_REGION_POINT);
  CHECK(pcd_gamma1_point(g, &p) == PCD_OK);
  pcd_gamma1_free(g);

  Map sph;
  REQUIRE(pcd_map_spherical(&t, &sph.m) == PCD_OK);
  CHECK(pcd_gamma1_compute(sph.m, &x, 1, &g) == PCD_ERR_INVALID);
}

TEST_CASE("simulation") {
  pcd_triangle t;
  REQUIRE(pcd_basic_triangle(0.3, 0.8, &t) == PCD_OK);
  Map pe;
  REQUIRE(pcd_map_pe(&t, 2.0, nullptr, &pe.m) == PCD_OK);
  const size_t grid[] = {5, 10, 20, 40};
  char* csv = nullptr;
  double rate = 0;
  REQUIRE(pcd_simulate_csv("edge-distance", pe.m, grid, 4, 500, 3, 2, &csv, &rate) == PCD_OK);
  const std::string text = take(csv);
  CHECK(text.rfind("estimator,family,param,center,n,replicates,mean,stderr,seed\n", 0) == 0);
  CHECK(rate < -0.7);
  CHECK(rate > -1.3);

  char* again = nullptr;
  REQUIRE(pcd_simulate_csv("edge-distance", pe.m, grid, 4, 500, 3, 1, &again, nullptr) == PCD_OK);
  CHECK(take(again) == text);

  REQUIRE(pcd_simulate_csv("interval-1d", nullptr, grid, 2, 100, 3, 1, &csv, nullptr) == PCD_OK);
  CHECK(take(csv).find("gamma1_length,interval1d") != std::string::npos);

  CHECK(pcd_simulate_csv("bogus", pe.m, grid, 4, 10, 3, 1, &csv, nullptr) == PCD_ERR_INVALID);

  const double ns[] = {1, 2, 4, 8};
  const double means[] = {1, 0.25, 0.0625, 0.015625};
  double slope = 0;
  CHECK(pcd_fit_rate(ns, means, 4, &slope) == PCD_OK);
  CHECK(slope == doctest::Approx(-2.0));
  CHECK(pcd_fit_rate(ns, means, 3, &slope) == PCD_ERR_INVALID);
}
