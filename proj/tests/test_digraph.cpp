#include <doctest.h>

#include <cmath>
#include <random>

#include "pcd/digraph.hpp"
#include "pcd/error.hpp"
#include "pcd/gamma.hpp"
#include "pcd/sim.hpp"

using namespace pcd;

namespace {

Point2 uniform_in(const Triangle& t, std::mt19937_64& g) {
  std::uniform_real_distribution<double> u(0, 1);
  double a = u(g), b = u(g);
  if (a + b > 1) {
    a = 1 - a;
    b = 1 - b;
  }
  return t.v1 + a * (t.v2 - t.v1) + b * (t.v3 - t.v1);
}

std::vector<Point2> sample_in(const Triangle& t, std::size_t n, std::mt19937_64& g) {
  std::vector<Point2> s(n);
  for (auto& p : s) p = uniform_in(t, g);
  return s;
}

bool dominates(const PcdDigraph& d, const std::vector<std::size_t>& set) {
  for (std::size_t u = 0; u < d.n; ++u) {
    bool hit = false;
    for (std::size_t v : set) hit = hit || v == u || d.has_arc(v, u);
    if (!hit) return false;
  }
  return true;
}

// smallest dominating set size by plain subset enumeration
std::size_t brute_gamma(const PcdDigraph& d) {
  std::size_t best = d.n;
  for (std::uint32_t mask = 1; mask < (1u << d.n); ++mask) {
    std::vector<std::size_t> set;
    for (std::size_t v = 0; v < d.n; ++v)
      if (mask >> v & 1u) set.push_back(v);
    if (set.size() < best && dominates(d, set)) best = set.size();
  }
  return best;
}

PcdDigraph complete(std::size_t n) {
  PcdDigraph d;
  d.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) d.arcs.emplace_back(i, j);
  return d;
}

}  // namespace

TEST_CASE("building digraphs") {
  const Triangle te = equilateral_triangle();
  const std::vector<Point2> one{{0.5, 0.3}};
  CHECK(build_pcd(one, ProximityMapSpec::pe(te, 2)).arcs.empty());

  std::mt19937_64 g(61);
  const auto s = sample_in(te, 12, g);
  const PcdDigraph inf = build_pcd(s, ProximityMapSpec::pe(te, kInfiniteR));
  CHECK(inf.arcs.size() == 12 * 11);
  CHECK(arc_density(inf) == 1.0);

  // points inside the superset region give a complete digraph
  const ProximityMapSpec pe2 = ProximityMapSpec::pe(te, 2);
  const SupersetRegion sr = superset_region(pe2);
  std::vector<Point2> inner;
  while (inner.size() < 10) {
    const Point2 p = uniform_in(te, g);
    if (sr.contains(p, 0)) inner.push_back(p);
  }
  CHECK(arc_density(build_pcd(inner, pe2)) == 1.0);

  const std::vector<Point2> outside{{0.5, 0.3}, {3, 3}};
  CHECK_THROWS_AS(build_pcd(outside, pe2), Error);
}

TEST_CASE("domination number") {
  CHECK(domination_number(complete(7)).gamma == 1);
  PcdDigraph empty;
  empty.n = 6;
  CHECK(domination_number(empty).gamma == 6);
  CHECK(domination_number(PcdDigraph{}).gamma == 0);

  PcdDigraph big;
  big.n = 30;
  CHECK_THROWS_AS(domination_number(big), Error);
  const DominationResult capped = domination_number(big, 3);
  CHECK_FALSE(capped.exact);
  CHECK(capped.gamma == 4);

  std::mt19937_64 g(62);
  std::bernoulli_distribution coin(0.25);
  for (int it = 0; it < 300; ++it) {
    PcdDigraph d;
    d.n = 1 + it % 12;
    for (std::size_t i = 0; i < d.n; ++i)
      for (std::size_t j = 0; j < d.n; ++j)
        if (i != j && coin(g)) d.arcs.emplace_back(i, j);
    const DominationResult r = domination_number(d);
    CHECK(r.exact);
    CHECK(r.gamma == brute_gamma(d));
    CHECK(r.witness.size() == r.gamma);
    CHECK(dominates(d, r.witness));
  }
}

TEST_CASE("arc density") {
  PcdDigraph d;
  d.n = 2;
  CHECK(arc_density(d) == 0.0);
  d.arcs = {{0, 1}};
  CHECK(arc_density(d) == 0.5);
  PcdDigraph one;
  one.n = 1;
  CHECK_THROWS_AS(arc_density(one), Error);

  std::mt19937_64 g(63);
  const Triangle te = equilateral_triangle();
  for (int it = 0; it < 100; ++it) {
    const PcdDigraph pd = build_pcd(sample_in(te, 2 + it % 20, g), ProximityMapSpec::cs(te, 0.7));
    const double rho = arc_density(pd);
    CHECK(rho >= 0);
    CHECK(rho <= 1);
    CHECK((rho == 1.0) == (pd.arcs.size() == pd.n * (pd.n - 1)));
  }
}

TEST_CASE("domination number one iff the sample meets its first-order region") {
  std::mt19937_64 g(64);
  const Triangle t = basic_triangle({0.3, 0.8});
  for (const ProximityMapSpec& spec : {ProximityMapSpec::pe(t, 2.0), ProximityMapSpec::pe(t, 1.4),
                                       ProximityMapSpec::cs(t, 1.0), ProximityMapSpec::cs(t, 0.5)}) {
    for (int it = 0; it < 300; ++it) {
      const auto s = sample_in(t, 2 + it % 20, g);
      const Gamma1Region r = gamma1_via_extrema(s, spec);
      bool meets = false;
      for (const Point2& x : s) meets = meets || gamma1_predicate(x, s, spec);
      bool meets_poly = false;
      for (const Point2& x : s) meets_poly = meets_poly || r.contains(x, 1e-12);
      CHECK(meets == meets_poly);
      CHECK((domination_number(build_pcd(s, spec), 3).gamma == 1) == meets);
    }
  }
}

TEST_CASE("kappa") {
  const Triangle te = equilateral_triangle();
  CHECK(kappa_upper_bound(ProximityMapSpec::pe(te, 2)).value == 3);
  CHECK(kappa_upper_bound(ProximityMapSpec::cs(te, 1)).kind == KappaKind::Unbounded);
  CHECK(kappa_upper_bound(ProximityMapSpec::interval_1d({0, 1})).value == 2);
  CHECK(kappa_upper_bound(ProximityMapSpec::spherical(te)).kind == KappaKind::Unknown);
  CHECK(kappa_upper_bound(ProximityMapSpec::arc_slice(te)).kind == KappaKind::Unknown);
}

TEST_CASE("three-point cover dominates") {
  std::mt19937_64 g(65);
  const Triangle t = make_triangle({0, 0}, {2, 0.3}, {0.5, 1.2});
  for (const ProximityMapSpec& spec : {ProximityMapSpec::pe(t, 1.0), ProximityMapSpec::pe(t, 1.5),
                                       ProximityMapSpec::pe(t, 2.5, CenterSelector::incenter())}) {
    for (int it = 0; it < 400; ++it) {
      const auto s = sample_in(t, 1 + it % 40, g);
      const auto w = pe_three_point_cover(s, spec);
      CHECK(w.size() <= 3);
      CHECK(dominates(build_pcd(s, spec), w));
    }
  }
  const ProximityMapSpec spec = ProximityMapSpec::pe(t, 1.5);
  const std::vector<Point2> one{{0.6, 0.4}};
  CHECK(pe_three_point_cover(one, spec) == std::vector<std::size_t>{0});

  // everything in the cell of the first vertex
  std::vector<Point2> corner;
  while (corner.size() < 15) {
    const Point2 p = uniform_in(t, g);
    if (spec.partition().locate(p) == 0) corner.push_back(p);
  }
  CHECK(pe_three_point_cover(corner, spec).size() == 1);
}

TEST_CASE("central-similarity construction needs n dominators") {
  const Triangle te = equilateral_triangle();
  const ProximityMapSpec spec = ProximityMapSpec::cs(te, 1.0);
  const Point2 M = spec.partition().M;
  const auto four = cs_gamma_n_construction(4, te, M, 1.0);
  for (const Point2& p : four) CHECK(p.y == doctest::Approx(std::sqrt(3.0) / 6 / 4));
  CHECK(four[0].x == doctest::Approx(0.5 / 4));
  CHECK(four[1].x - four[0].x == doctest::Approx(0.25));
  CHECK(domination_number(build_pcd(four, spec)).gamma == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(contains(spec, four[i], four[j]) == (i == j));

  const auto one = cs_gamma_n_construction(1, te, M, 1.0);
  CHECK(te.contains(one[0]));
  CHECK(domination_number(build_pcd(one, spec)).gamma == 1);

  Rng rng(7);
  for (const Triangle& t : {te, basic_triangle({0.3, 0.8}), make_triangle({0, 0}, {3, 0}, {2.2, 1})}) {
    for (CenterSelector sel : {CenterSelector::centroid(), CenterSelector::incenter()}) {
      for (double tau : {0.5, 1.0}) {
        const ProximityMapSpec sp = ProximityMapSpec::cs(t, tau, sel);
        for (std::size_t n = 1; n <= 12; ++n) {
          const auto pts = cs_gamma_n_construction(n, sp.triangle(), sp.partition().M, tau);
          CHECK(domination_number(build_pcd(pts, sp)).gamma == n);
          const auto jittered = cs_gamma_n_construction(n, sp.triangle(), sp.partition().M, tau,
                                                        default_construction_eps(n, sp.triangle(), sp.partition().M), &rng);
          CHECK(domination_number(build_pcd(jittered, sp)).gamma == n);
        }
      }
    }
  }
  CHECK_THROWS_AS(cs_gamma_n_construction(0, te, M, 1.0), Error);
  CHECK_THROWS_AS(cs_gamma_n_construction(3, te, M, 0.0), Error);
  CHECK_THROWS_AS(cs_gamma_n_construction(3, te, M, 1.0, 0.1), Error);
}

TEST_CASE("digraph json round trip") {
  std::mt19937_64 g(66);
  const Triangle te = equilateral_triangle();
  const ProximityMapSpec spec = ProximityMapSpec::pe(te, 1.5);
  const auto s = sample_in(te, 9, g);
  const PcdDigraph d = build_pcd(s, spec);
  DigraphMeta meta{"pe", 1.5, "centroid", 42, "input"};
  const std::string text = digraph_to_json(d, meta);
  DigraphMeta back;
  const PcdDigraph e = digraph_from_json(text, &back);
  CHECK(e.n == d.n);
  CHECK(e.arcs == d.arcs);
  CHECK(back.family == "pe");
  CHECK(back.param == 1.5);
  CHECK(back.center == "centroid");
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 42);
  CHECK(domination_number(e).gamma == domination_number(d).gamma);

  DigraphMeta inf{"pe", kInfiniteR, "centroid", std::nullopt, "input"};
  DigraphMeta inf_back;
  digraph_from_json(digraph_to_json(d, inf), &inf_back);
  CHECK(std::isinf(inf_back.param));
  CHECK_FALSE(inf_back.seed.has_value());

  CHECK_THROWS_AS(digraph_from_json("{"), Error);
  CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[0, 2]], "spec": {}})"), Error);
  CHECK_THROWS_AS(digraph_from_json(R"({"n": 2, "arcs": [[1, 1]], "spec": {}})"), Error);
}
