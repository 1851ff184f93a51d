#pragma once

#include <array>
#include <cmath>
#include <span>
#include <utility>
#include <vector>

namespace pcd {

// Absolute tolerance on coordinates of a unit-diameter triangle. Triangles of
// other sizes scale it through Triangle::tolerance().
inline constexpr double kEps = 1e-9;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
  friend constexpr Point2 operator*(Point2 p, double s) { return {s * p.x, s * p.y}; }
  friend constexpr bool operator==(Point2 a, Point2 b) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 p) { return std::hypot(p.x, p.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool near(Point2 a, Point2 b, double eps) { return distance(a, b) <= eps; }

/// Affine functional f(p) = a*x + b*y + c. As a half-plane it keeps f >= 0.
struct HalfPlane {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;

  constexpr double operator()(Point2 p) const { return a * p.x + b * p.y + c; }
  constexpr HalfPlane flipped() const { return {-a, -b, -c}; }

  friend constexpr HalfPlane operator+(HalfPlane f, HalfPlane g) { return {f.a + g.a, f.b + g.b, f.c + g.c}; }
  friend constexpr HalfPlane operator-(HalfPlane f, HalfPlane g) { return {f.a - g.a, f.b - g.b, f.c - g.c}; }
  friend constexpr HalfPlane operator*(double s, HalfPlane f) { return {s * f.a, s * f.b, s * f.c}; }
  friend constexpr HalfPlane operator+(HalfPlane f, double k) { return {f.a, f.b, f.c + k}; }
  friend constexpr HalfPlane operator-(HalfPlane f, double k) { return {f.a, f.b, f.c - k}; }
  friend constexpr HalfPlane operator-(double k, HalfPlane f) { return {-f.a, -f.b, k - f.c}; }
};

/// A line in normalized form: (a,b) is a unit normal, so evaluating the line at
/// a point gives its signed distance (positive on the left of the direction
/// the line was built with).
struct Line {
  HalfPlane form;

  double signed_distance(Point2 p) const { return form(p); }
};

Line line_through(Point2 p, Point2 q);
double point_line_distance(Point2 p, const Line& line);
Line parallel_line_through(const Line& line, Point2 p);
/// Intersection of two non-parallel lines; returns false when parallel.
bool intersect(const Line& l1, const Line& l2, Point2& out);

struct Triangle {
  Point2 v1, v2, v3;

  Point2 vertex(int i) const { return i == 0 ? v1 : (i == 1 ? v2 : v3); }
  std::array<Point2, 3> vertices() const { return {v1, v2, v3}; }

  double area() const;
  /// Length of the edge opposite vertex i (0-based).
  double edge_length(int i) const;
  double diameter() const;
  /// kEps scaled to the triangle's diameter.
  double tolerance() const { return kEps * diameter(); }

  /// Barycentric coordinates (b1,b2,b3); b_i is the normalized distance to
  /// the edge opposite vertex i.
  std::array<double, 3> barycentric(Point2 p) const;
  Point2 from_barycentric(const std::array<double, 3>& b) const;
  /// The affine functional p -> b_i(p).
  HalfPlane barycentric_form(int i) const;

  double distance_to_edge(int i, Point2 p) const;
  Line edge_line(int i) const;

  bool contains(Point2 p, double eps) const;
  bool contains(Point2 p) const { return contains(p, tolerance()); }
  /// Index of the vertex within tolerance of p, or -1.
  int vertex_index(Point2 p) const;
};

double signed_area(Point2 a, Point2 b, Point2 c);
double signed_area(const Triangle& t);

/// Validates and reorders the vertices counter-clockwise (swaps v2/v3 if needed).
Triangle make_triangle(Point2 a, Point2 b, Point2 c);
Triangle equilateral_triangle();

struct BasicTriangleParams {
  double c1 = 0.5;
  double c2 = std::sqrt(3.0) / 2.0;

  /// Whether the triangle ((0,0),(1,0),(c1,c2)) is in normal form: its base
  /// is the longest edge and the apex leans left.
  bool normalized(double eps = kEps) const;
};

/// The triangle ((0,0),(1,0),(c1,c2)). Only requires c2 > 0.
Triangle basic_triangle(BasicTriangleParams params);

/// p -> L p + t with L a nonzero multiple of an orthogonal matrix.
class SimilarityTransform {
 public:
  SimilarityTransform() = default;
  SimilarityTransform(double m00, double m01, double m10, double m11, Point2 t);

  static SimilarityTransform identity() { return {}; }
  static SimilarityTransform translation(Point2 t) { return {1, 0, 0, 1, t}; }
  static SimilarityTransform uniform_scale(double s) { return {s, 0, 0, s, {}}; }
  static SimilarityTransform rotation(double angle);
  /// Reflection across the vertical line x = c.
  static SimilarityTransform reflect_x(double c);
  /// Reflection across the x-axis.
  static SimilarityTransform reflect_y();

  Point2 apply(Point2 p) const;
  Point2 operator()(Point2 p) const { return apply(p); }
  /// (*this) after `first`.
  SimilarityTransform after(const SimilarityTransform& first) const;
  SimilarityTransform inverse() const;
  double scale() const;
  double determinant() const { return m00_ * m11_ - m01_ * m10_; }
  std::array<double, 4> linear() const { return {m00_, m01_, m10_, m11_}; }
  Point2 offset() const { return t_; }

 private:
  double m00_ = 1, m01_ = 0, m10_ = 0, m11_ = 1;
  Point2 t_{};
};

/// Carries t onto its basic triangle. The longest edge goes to [0,1]x{0};
/// ties between longest edges pick the lexicographically smallest vertex
/// pair; the apex is reflected across x = 1/2 when it lands right of it.
std::pair<BasicTriangleParams, SimilarityTransform> to_basic(const Triangle& t);

/// Uniformity-preserving affine map from T_b(c1,c2) onto the standard
/// equilateral triangle.
Point2 phi_e(Point2 p, BasicTriangleParams params);
Point2 phi_e_inverse(Point2 p, BasicTriangleParams params);
/// |d(x,y)/d(u,v)| of phi_e_inverse, i.e. 2 c2 / sqrt(3). The density of the
/// mapped uniform variable is the original density times this constant.
double phi_e_inverse_jacobian(BasicTriangleParams params);

enum class CenterKind { Centroid, Circumcenter, Incenter, Custom };

struct CenterSelector {
  CenterKind kind = CenterKind::Centroid;
  Point2 custom{};

  static CenterSelector centroid() { return {CenterKind::Centroid, {}}; }
  static CenterSelector circumcenter() { return {CenterKind::Circumcenter, {}}; }
  static CenterSelector incenter() { return {CenterKind::Incenter, {}}; }
  static CenterSelector at(Point2 p) { return {CenterKind::Custom, p}; }
};

Point2 center(const Triangle& t, const CenterSelector& sel);

class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  /// Vertices must already be in counter-clockwise convex position.
  explicit ConvexPolygon(std::vector<Point2> ccw_vertices);
  static ConvexPolygon from_triangle(const Triangle& t);
  static ConvexPolygon point(Point2 p) { return ConvexPolygon(std::vector<Point2>{p}); }

  bool empty() const { return vertices_.empty(); }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Point2>& vertices() const { return vertices_; }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }

  double area() const;
  double diameter() const;
  /// Closed containment with tolerance eps (distance outside any edge).
  bool contains(Point2 p, double eps = kEps) const;
  /// Distance from p to the polygon boundary.
  double boundary_distance(Point2 p) const;
  /// Distance from p to the polygon (0 inside).
  double distance_to(Point2 p) const;

  /// Keeps the part where h >= 0. Near-duplicate and collinear vertices are
  /// dropped, so the result may be a single point or a segment.
  ConvexPolygon clipped(const HalfPlane& h, double eps = kEps) const;
  ConvexPolygon intersect(const ConvexPolygon& other, double eps = kEps) const;

 private:
  std::vector<Point2> vertices_;
};

enum class Side { Left, Right };

ConvexPolygon half_plane_clip(const ConvexPolygon& poly, const Line& line, Side keep,
                              double eps = kEps);

/// Drops consecutive near-duplicates and near-collinear vertices.
std::vector<Point2> simplify_ring(std::vector<Point2> ring, double eps);

/// Andrew's monotone chain; CCW, collinear points dropped.
ConvexPolygon convex_hull(std::span<const Point2> points, double eps = kEps);

/// Vertex sets equal up to cyclic rotation within eps.
bool approx_equal(const ConvexPolygon& a, const ConvexPolygon& b, double eps);

/// Hausdorff distance between convex polygons. Infinite when exactly one side
/// is empty and the other is larger than eps.
double hausdorff(const ConvexPolygon& a, const ConvexPolygon& b, double eps = kEps);

double polygon_area(std::span<const Point2> ring);

}  // namespace pcd
