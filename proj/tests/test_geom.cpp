#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "pcd/error.hpp"
#include "pcd/geom.hpp"

using namespace pcd;

namespace {

const double kSqrt3 = std::sqrt(3.0);

Point2 random_point(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(g), u(g)};
}

bool has_vertex(const std::array<Point2, 3>& vs, Point2 p, double eps) {
  return std::any_of(vs.begin(), vs.end(), [&](Point2 v) { return near(v, p, eps); });
}

// Apex of the basic triangle from side lengths: base c (longest), other sides a, b.
BasicTriangleParams apex_from_sides(double base, double left, double right) {
  const double x = (base * base + left * left - right * right) / (2 * base);
  const double y = std::sqrt(left * left - x * x);
  double c1 = x / base;
  if (c1 > 0.5) c1 = 1 - c1;
  return {c1, y / base};
}

}  // namespace

TEST_CASE("signed area") {
  CHECK(signed_area({0, 0}, {1, 0}, {0, 1}) == doctest::Approx(0.5));
  CHECK(signed_area(equilateral_triangle()) == doctest::Approx(kSqrt3 / 4));
  CHECK(signed_area({0, 0}, {1, 1}, {2, 2}) == 0.0);
  CHECK(signed_area({0, 0}, {0, 1}, {1, 0}) == doctest::Approx(-0.5));
}

TEST_CASE("make_triangle orders counter-clockwise and rejects collinear input") {
  const Triangle t = make_triangle({0, 0}, {0, 1}, {1, 0});
  CHECK(signed_area(t) > 0);
  CHECK_THROWS_AS(make_triangle({0, 0}, {1, 1}, {2, 2}), Error);
  CHECK_THROWS_AS(make_triangle({0, 0}, {1, 0}, {NAN, 1}), Error);
}

TEST_CASE("to_basic") {
  SUBCASE("equilateral of side 2") {
    const auto [p, f] = to_basic(make_triangle({0, 0}, {2, 0}, {1, kSqrt3}));
    CHECK(p.c1 == doctest::Approx(0.5));
    CHECK(p.c2 == doctest::Approx(kSqrt3 / 2));
  }
  SUBCASE("longest edge is not the input base") {
    // sides: |(0,0)-(2,0)| = 2, |(2,0)-(0.6,1.6)| = sqrt(4.52), |(0,0)-(0.6,1.6)| = sqrt(2.92)
    const Triangle t = make_triangle({0, 0}, {2, 0}, {0.6, 1.6});
    const auto [p, f] = to_basic(t);
    const BasicTriangleParams want = apex_from_sides(std::sqrt(4.52), 2.0, std::sqrt(2.92));
    CHECK(p.c1 == doctest::Approx(want.c1).epsilon(1e-12));
    CHECK(p.c2 == doctest::Approx(want.c2).epsilon(1e-12));
    CHECK(p.c1 == doctest::Approx(3.44 / 9.04).epsilon(1e-12));
    CHECK(p.c2 == doctest::Approx(3.2 / 4.52).epsilon(1e-12));
  }
  SUBCASE("basic triangle is a fixed point") {
    const BasicTriangleParams b{0.4, 0.7};
    const auto [p, f] = to_basic(basic_triangle(b));
    CHECK(p.c1 == doctest::Approx(0.4).epsilon(1e-14));
    CHECK(p.c2 == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(near(f({0.3, 0.2}), {0.3, 0.2}, 1e-14));
  }
  SUBCASE("degenerate") { CHECK_THROWS_AS(to_basic({{0, 0}, {1, 0}, {3, 0}}), Error); }
}

TEST_CASE("to_basic on random triangles") {
  std::mt19937_64 g(11);
  for (int it = 0; it < 2000; ++it) {
    const Point2 a = random_point(g, -5, 5), b = random_point(g, -5, 5), c = random_point(g, -5, 5);
    if (std::abs(signed_area(a, b, c)) < 1e-3) continue;
    const Triangle t{a, b, c};
    const auto [p, f] = to_basic(t);
    CHECK(p.normalized(1e-9));
    const auto want = basic_triangle(p).vertices();
    for (Point2 v : t.vertices()) CHECK(has_vertex(want, f(v), 1e-10));
    CHECK(std::abs(f.determinant()) == doctest::Approx(f.scale() * f.scale()));
    const SimilarityTransform inv = f.inverse();
    CHECK(near(inv(f(a)), a, 1e-10));
  }
}

TEST_CASE("phi_e") {
  const BasicTriangleParams b{0.3, 0.8};
  CHECK(near(phi_e({0, 0}, b), {0, 0}, 1e-15));
  CHECK(near(phi_e({1, 0}, b), {1, 0}, 1e-15));
  CHECK(near(phi_e({0.3, 0.8}, b), {0.5, kSqrt3 / 2}, 1e-15));
  CHECK(near(phi_e_inverse({0.5, kSqrt3 / 2}, b), {0.3, 0.8}, 1e-15));
  CHECK(phi_e_inverse_jacobian({0.5, kSqrt3 / 2}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(phi_e_inverse_jacobian(b) == 1.6 / kSqrt3);

  std::mt19937_64 g(5);
  for (int i = 0; i < 10000; ++i) {
    const Point2 p = random_point(g, -3, 3);
    CHECK(near(phi_e(phi_e_inverse(p, b), b), p, 1e-10));
    CHECK(near(phi_e_inverse(phi_e(p, b), b), p, 1e-10));
  }
}

TEST_CASE("phi_e inverse jacobian matches the area ratio") {
  const BasicTriangleParams b{0.2, 0.9};
  const Triangle tb = basic_triangle(b);
  const Triangle te = equilateral_triangle();
  CHECK(tb.area() / te.area() == doctest::Approx(phi_e_inverse_jacobian(b)).epsilon(1e-14));
}

TEST_CASE("centers") {
  const Triangle te = equilateral_triangle();
  CHECK(near(center(te, CenterSelector::centroid()), {0.5, kSqrt3 / 6}, 1e-15));
  CHECK(near(center(te, CenterSelector::circumcenter()), {0.5, kSqrt3 / 6}, 1e-12));
  CHECK(near(center(te, CenterSelector::incenter()), {0.5, kSqrt3 / 6}, 1e-12));
  CHECK(near(center(te, CenterSelector::at({0.4, 0.2})), {0.4, 0.2}, 0));

  const Triangle rt = make_triangle({0, 0}, {1, 0}, {0, 1});
  const Point2 in = center(rt, CenterSelector::incenter());
  const double r = 1 - std::sqrt(2.0) / 2;
  CHECK(near(in, {r, r}, 1e-12));
  for (int i = 0; i < 3; ++i) CHECK(rt.distance_to_edge(i, in) == doctest::Approx(r).epsilon(1e-12));

  const Point2 cc = center(rt, CenterSelector::circumcenter());
  CHECK(distance(cc, rt.v1) == doctest::Approx(distance(cc, rt.v2)));
  CHECK(distance(cc, rt.v1) == doctest::Approx(distance(cc, rt.v3)));
}

TEST_CASE("barycentric coordinates") {
  const Triangle t = basic_triangle({0.3, 0.8});
  std::mt19937_64 g(3);
  for (int i = 0; i < 1000; ++i) {
    const Point2 p = random_point(g, -1, 2);
    const auto b = t.barycentric(p);
    CHECK(b[0] + b[1] + b[2] == doctest::Approx(1.0));
    CHECK(near(t.from_barycentric(b), p, 1e-12));
    for (int k = 0; k < 3; ++k) {
      CHECK(t.barycentric_form(k)(p) == doctest::Approx(b[k]).epsilon(1e-12));
      const double h = 2 * t.area() / t.edge_length(k);
      CHECK(t.distance_to_edge(k, p) == doctest::Approx(b[k] * h).epsilon(1e-12));
    }
  }
}

TEST_CASE("lines") {
  const Line l = line_through({0, 0}, {2, 0});
  CHECK(point_line_distance({1, 3}, l) == doctest::Approx(3));
  const Line m = parallel_line_through(l, {5, 1});
  CHECK(point_line_distance({0, 1}, m) == doctest::Approx(0).epsilon(1e-15));
  Point2 x;
  CHECK_FALSE(intersect(l, m, x));
  CHECK(intersect(l, line_through({1, -1}, {1, 1}), x));
  CHECK(near(x, {1, 0}, 1e-15));
}

TEST_CASE("half-plane clipping") {
  const ConvexPolygon te = ConvexPolygon::from_triangle(equilateral_triangle());
  const ConvexPolygon sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  SUBCASE("containing half-plane leaves the polygon unchanged") {
    const ConvexPolygon c = half_plane_clip(te, line_through({0, 0}, {1, 0}), Side::Left);
    CHECK(approx_equal(c, te, 1e-12));
  }
  SUBCASE("square cut in half") {
    const ConvexPolygon c = half_plane_clip(sq, line_through({0.5, 0}, {0.5, 1}), Side::Right);
    CHECK(c.area() == doctest::Approx(0.5));
    CHECK(c.size() == 4);
  }
  SUBCASE("tangent line leaves the apex") {
    const ConvexPolygon c = te.clipped({0, 1, -kSqrt3 / 2});
    REQUIRE(c.size() == 1);
    CHECK(near(c[0], {0.5, kSqrt3 / 2}, 1e-12));
  }
  SUBCASE("disjoint half-plane gives empty") { CHECK(te.clipped({0, 1, -2}).empty()); }
}

TEST_CASE("clipping by complementary half-planes partitions the area") {
  std::mt19937_64 g(17);
  std::uniform_real_distribution<double> ang(0, 2 * M_PI);
  for (int it = 0; it < 500; ++it) {
    std::vector<Point2> pts(8);
    for (auto& p : pts) p = random_point(g, 0, 1);
    const ConvexPolygon poly = convex_hull(pts);
    const double th = ang(g);
    const Point2 through = random_point(g, 0, 1);
    const HalfPlane h{std::cos(th), std::sin(th), -(std::cos(th) * through.x + std::sin(th) * through.y)};
    const ConvexPolygon a = poly.clipped(h), b = poly.clipped(h.flipped());
    CHECK(a.area() <= poly.area() + 1e-12);
    CHECK(a.area() + b.area() == doctest::Approx(poly.area()).epsilon(1e-10));
    for (Point2 v : a.vertices()) CHECK(h(v) >= -1e-9);
  }
}

TEST_CASE("convex hull and containment") {
  const ConvexPolygon h = convex_hull(std::vector<Point2>{{0, 0}, {1, 0}, {0.5, 0.2}, {1, 1}, {0, 1}, {0.5, 0}});
  CHECK(h.size() == 4);
  CHECK(h.area() == doctest::Approx(1.0));
  CHECK(h.contains({0.5, 0.5}));
  CHECK(h.contains({1, 0.5}));
  CHECK_FALSE(h.contains({1.01, 0.5}));
  CHECK(h.boundary_distance({0.5, 0.25}) == doctest::Approx(0.25));
  CHECK(h.distance_to({2, 0.5}) == doctest::Approx(1.0));
}

TEST_CASE("polygon comparison") {
  const ConvexPolygon a({{0, 0}, {1, 0}, {0, 1}});
  const ConvexPolygon b({{1, 0}, {0, 1}, {0, 0}});
  CHECK(approx_equal(a, b, 1e-12));
  CHECK(hausdorff(a, b) == doctest::Approx(0));
  const ConvexPolygon c({{0, 0}, {1.1, 0}, {0, 1}});
  CHECK(hausdorff(a, c) == doctest::Approx(0.1));
  CHECK(std::isinf(hausdorff(a, ConvexPolygon())));
  CHECK(hausdorff(ConvexPolygon(), ConvexPolygon()) == 0);
}

TEST_CASE("triangle containment") {
  const Triangle t = equilateral_triangle();
  CHECK(t.contains({0.5, 0.3}));
  CHECK(t.contains({0, 0}));
  CHECK(t.contains({0.5, 0}));
  CHECK_FALSE(t.contains({0.5, -1e-6}));
  CHECK(t.vertex_index({1, 0}) == 1);
  CHECK(t.vertex_index({0.5, 0.1}) == -1);
}
