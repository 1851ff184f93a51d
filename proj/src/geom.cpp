#include "pcd/geom.hpp"

#include <algorithm>
#include <limits>

#include "pcd/error.hpp"

namespace pcd {

namespace {

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + t * ab);
}

bool finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

Line line_through(Point2 p, Point2 q) {
  const Point2 d = q - p;
  const double len = norm(d);
  if (len == 0.0) throw Error(ErrorCode::Degenerate, "line through coincident points");
  // unit normal pointing left of p->q
  const double a = -d.y / len;
  const double b = d.x / len;
  return Line{{a, b, -(a * p.x + b * p.y)}};
}

double point_line_distance(Point2 p, const Line& line) { return std::abs(line.signed_distance(p)); }

Line parallel_line_through(const Line& line, Point2 p) {
  const HalfPlane& f = line.form;
  return Line{{f.a, f.b, -(f.a * p.x + f.b * p.y)}};
}

bool intersect(const Line& l1, const Line& l2, Point2& out) {
  const HalfPlane& f = l1.form;
  const HalfPlane& g = l2.form;
  const double det = f.a * g.b - f.b * g.a;
  if (std::abs(det) < 1e-15) return false;
  out = {(f.b * g.c - g.b * f.c) / det, (g.a * f.c - f.a * g.c) / det};
  return true;
}

double signed_area(Point2 a, Point2 b, Point2 c) { return 0.5 * cross(b - a, c - a); }

double signed_area(const Triangle& t) { return signed_area(t.v1, t.v2, t.v3); }

double Triangle::area() const { return std::abs(signed_area(*this)); }

double Triangle::edge_length(int i) const {
  return distance(vertex((i + 1) % 3), vertex((i + 2) % 3));
}

double Triangle::diameter() const {
  return std::max({edge_length(0), edge_length(1), edge_length(2)});
}

HalfPlane Triangle::barycentric_form(int i) const {
  const Point2 vj = vertex((i + 1) % 3);
  const Point2 vk = vertex((i + 2) % 3);
  const double s2 = 2.0 * signed_area(*this);
  const Point2 d = vk - vj;
  return {-d.y / s2, d.x / s2, (d.y * vj.x - d.x * vj.y) / s2};
}

std::array<double, 3> Triangle::barycentric(Point2 p) const {
  const double s = signed_area(*this);
  return {signed_area(p, v2, v3) / s, signed_area(v1, p, v3) / s, signed_area(v1, v2, p) / s};
}

Point2 Triangle::from_barycentric(const std::array<double, 3>& b) const {
  return {b[0] * v1.x + b[1] * v2.x + b[2] * v3.x, b[0] * v1.y + b[1] * v2.y + b[2] * v3.y};
}

double Triangle::distance_to_edge(int i, Point2 p) const {
  const double h = 2.0 * area() / edge_length(i);
  return barycentric_form(i)(p) * h;
}

Line Triangle::edge_line(int i) const {
  Line l = line_through(vertex((i + 1) % 3), vertex((i + 2) % 3));
  if (l.signed_distance(vertex(i)) < 0) l.form = l.form.flipped();
  return l;
}

bool Triangle::contains(Point2 p, double eps) const {
  for (int i = 0; i < 3; ++i)
    if (distance_to_edge(i, p) < -eps) return false;
  return true;
}

int Triangle::vertex_index(Point2 p) const {
  const double tol = tolerance();
  for (int i = 0; i < 3; ++i)
    if (near(vertex(i), p, tol)) return i;
  return -1;
}

Triangle make_triangle(Point2 a, Point2 b, Point2 c) {
  if (!finite(a) || !finite(b) || !finite(c))
    throw Error(ErrorCode::InvalidArgument, "triangle vertex is not finite");
  Triangle t{a, b, c};
  const double d = t.diameter();
  if (d == 0.0 || std::abs(signed_area(t)) <= kEps * d * d)
    throw Error(ErrorCode::Degenerate, "triangle vertices are collinear");
  if (signed_area(t) < 0) std::swap(t.v2, t.v3);
  return t;
}

Triangle equilateral_triangle() { return {{0.0, 0.0}, {1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}; }

bool BasicTriangleParams::normalized(double eps) const {
  return c1 > 0.0 && c1 <= 0.5 + eps && c2 > 0.0 && (1 - c1) * (1 - c1) + c2 * c2 <= 1.0 + eps;
}

Triangle basic_triangle(BasicTriangleParams params) {
  if (!(params.c2 > 0.0) || !std::isfinite(params.c1) || !std::isfinite(params.c2))
    throw Error(ErrorCode::Degenerate, "basic triangle needs c2 > 0");
  return {{0.0, 0.0}, {1.0, 0.0}, {params.c1, params.c2}};
}

SimilarityTransform::SimilarityTransform(double m00, double m01, double m10, double m11, Point2 t)
    : m00_(m00), m01_(m01), m10_(m10), m11_(m11), t_(t) {}

SimilarityTransform SimilarityTransform::rotation(double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c, -s, s, c, {}};
}

SimilarityTransform SimilarityTransform::reflect_x(double c) { return {-1, 0, 0, 1, {2 * c, 0}}; }

SimilarityTransform SimilarityTransform::reflect_y() { return {1, 0, 0, -1, {}}; }

Point2 SimilarityTransform::apply(Point2 p) const {
  return {m00_ * p.x + m01_ * p.y + t_.x, m10_ * p.x + m11_ * p.y + t_.y};
}

SimilarityTransform SimilarityTransform::after(const SimilarityTransform& f) const {
  return {m00_ * f.m00_ + m01_ * f.m10_, m00_ * f.m01_ + m01_ * f.m11_,
          m10_ * f.m00_ + m11_ * f.m10_, m10_ * f.m01_ + m11_ * f.m11_, apply(f.t_)};
}

SimilarityTransform SimilarityTransform::inverse() const {
  const double det = determinant();
  if (det == 0.0) throw Error(ErrorCode::Degenerate, "singular similarity transform");
  const double i00 = m11_ / det, i01 = -m01_ / det, i10 = -m10_ / det, i11 = m00_ / det;
  return {i00, i01, i10, i11, {-(i00 * t_.x + i01 * t_.y), -(i10 * t_.x + i11 * t_.y)}};
}

double SimilarityTransform::scale() const { return std::sqrt(std::abs(determinant())); }

std::pair<BasicTriangleParams, SimilarityTransform> to_basic(const Triangle& t) {
  make_triangle(t.v1, t.v2, t.v3);  // validation only

  static constexpr int kPairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  double best = -1.0;
  int pick = 0;
  const double tol = t.tolerance();
  for (int k = 0; k < 3; ++k) {
    const double len = distance(t.vertex(kPairs[k][0]), t.vertex(kPairs[k][1]));
    if (len > best + tol) {
      best = len;
      pick = k;
    }
  }
  const Point2 p = t.vertex(kPairs[pick][0]);
  const Point2 q = t.vertex(kPairs[pick][1]);
  const Point2 apex = t.vertex(3 - kPairs[pick][0] - kPairs[pick][1]);

  const Point2 d = q - p;
  SimilarityTransform f = SimilarityTransform::rotation(-std::atan2(d.y, d.x))
                              .after(SimilarityTransform::translation({-p.x, -p.y}));
  f = SimilarityTransform::uniform_scale(1.0 / best).after(f);
  if (f(apex).y < 0) f = SimilarityTransform::reflect_y().after(f);
  if (f(apex).x > 0.5) f = SimilarityTransform::reflect_x(0.5).after(f);

  const Point2 a = f(apex);
  return {{a.x, a.y}, f};
}

Point2 phi_e(Point2 p, BasicTriangleParams params) {
  static const double kSqrt3 = std::sqrt(3.0);
  return {p.x + (1.0 - 2.0 * params.c1) / (2.0 * params.c2) * p.y, kSqrt3 / (2.0 * params.c2) * p.y};
}

Point2 phi_e_inverse(Point2 p, BasicTriangleParams params) {
  static const double kSqrt3 = std::sqrt(3.0);
  return {p.x - (1.0 - 2.0 * params.c1) / kSqrt3 * p.y, 2.0 * params.c2 / kSqrt3 * p.y};
}

double phi_e_inverse_jacobian(BasicTriangleParams params) { return 2.0 * params.c2 / std::sqrt(3.0); }

Point2 center(const Triangle& t, const CenterSelector& sel) {
  switch (sel.kind) {
    case CenterKind::Centroid:
      return {(t.v1.x + t.v2.x + t.v3.x) / 3.0, (t.v1.y + t.v2.y + t.v3.y) / 3.0};
    case CenterKind::Incenter: {
      const double a = t.edge_length(0), b = t.edge_length(1), c = t.edge_length(2);
      const double s = a + b + c;
      return {(a * t.v1.x + b * t.v2.x + c * t.v3.x) / s, (a * t.v1.y + b * t.v2.y + c * t.v3.y) / s};
    }
    case CenterKind::Circumcenter: {
      const Point2 b = t.v2 - t.v1, c = t.v3 - t.v1;
      const double d = 2.0 * cross(b, c);
      const double b2 = dot(b, b), c2 = dot(c, c);
      const Point2 o{t.v1.x + (c.y * b2 - b.y * c2) / d, t.v1.y + (b.x * c2 - c.x * b2) / d};
      if (d == 0.0 || !finite(o)) throw Error(ErrorCode::Degenerate, "circumcenter is not finite");
      return o;
    }
    case CenterKind::Custom:
      if (!finite(sel.custom)) throw Error(ErrorCode::InvalidArgument, "custom center is not finite");
      return sel.custom;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown center kind");
}

ConvexPolygon::ConvexPolygon(std::vector<Point2> ccw_vertices) : vertices_(std::move(ccw_vertices)) {}

ConvexPolygon ConvexPolygon::from_triangle(const Triangle& t) {
  if (signed_area(t) >= 0) return ConvexPolygon({t.v1, t.v2, t.v3});
  return ConvexPolygon({t.v1, t.v3, t.v2});
}

double polygon_area(std::span<const Point2> ring) {
  double s = 0.0;
  for (std::size_t i = 0, n = ring.size(); i < n; ++i) s += cross(ring[i], ring[(i + 1) % n]);
  return 0.5 * s;
}

double ConvexPolygon::area() const { return size() < 3 ? 0.0 : polygon_area(vertices_); }

double ConvexPolygon::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j) d = std::max(d, distance(vertices_[i], vertices_[j]));
  return d;
}

bool ConvexPolygon::contains(Point2 p, double eps) const {
  const std::size_t n = size();
  if (n == 0) return false;
  if (n == 1) return distance(p, vertices_[0]) <= eps;
  if (n == 2) return segment_distance(p, vertices_[0], vertices_[1]) <= eps;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices_[i], b = vertices_[(i + 1) % n];
    if (cross(b - a, p - a) / distance(a, b) < -eps) return false;
  }
  return true;
}

double ConvexPolygon::boundary_distance(Point2 p) const {
  const std::size_t n = size();
  if (n == 0) return std::numeric_limits<double>::infinity();
  if (n == 1) return distance(p, vertices_[0]);
  double d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i)
    d = std::min(d, segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
  return d;
}

double ConvexPolygon::distance_to(Point2 p) const {
  if (size() >= 3 && contains(p, 0.0)) return 0.0;
  return boundary_distance(p);
}

std::vector<Point2> simplify_ring(std::vector<Point2> ring, double eps) {
  bool changed = true;
  while (changed && ring.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < ring.size() && ring.size() > 1; ++i) {
      if (near(ring[i], ring[(i + 1) % ring.size()], eps)) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>((i + 1) % ring.size()));
        changed = true;
        --i;
      }
    }
    if (ring.size() < 3) break;
    for (std::size_t i = 0; i < ring.size() && ring.size() >= 3; ++i) {
      const std::size_t n = ring.size();
      const Point2 prev = ring[(i + n - 1) % n], cur = ring[i], next = ring[(i + 1) % n];
      const double chord = distance(prev, next);
      if (chord == 0.0 || std::abs(cross(next - prev, cur - prev)) / chord <= eps) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  return ring;
}

ConvexPolygon ConvexPolygon::clipped(const HalfPlane& h, double eps) const {
  const std::size_t n = size();
  if (n == 0) return {};
  const double scale = std::hypot(h.a, h.b);
  if (scale == 0.0) return h.c >= 0 ? *this : ConvexPolygon{};
  auto f = [&](Point2 p) { return h(p) / scale; };
  if (n == 1) return f(vertices_[0]) >= -eps ? *this : ConvexPolygon{};

  std::vector<Point2> out;
  out.reserve(n + 2);
  const std::size_t edges = n == 2 ? 1 : n;
  for (std::size_t i = 0; i < edges; ++i) {
    const Point2 p = vertices_[i], q = vertices_[(i + 1) % n];
    const double fp = f(p), fq = f(q);
    const bool pin = fp >= -eps, qin = fq >= -eps;
    if (pin) out.push_back(p);
    if (pin != qin) {
      const double t = std::clamp(fp / (fp - fq), 0.0, 1.0);
      out.push_back(p + t * (q - p));
    }
  }
  if (n == 2 && f(vertices_[1]) >= -eps) out.push_back(vertices_[1]);
  return ConvexPolygon(simplify_ring(std::move(out), eps));
}

ConvexPolygon ConvexPolygon::intersect(const ConvexPolygon& other, double eps) const {
  if (empty() || other.empty()) return {};
  if (other.size() == 1) return contains(other[0], eps) ? other : ConvexPolygon{};
  if (other.size() == 2) {
    ConvexPolygon r = other;
    const std::size_t n = size();
    if (n < 3) return {};
    for (std::size_t i = 0; i < n; ++i) {
      const Line l = line_through(vertices_[i], vertices_[(i + 1) % n]);
      r = r.clipped(l.form, eps);
    }
    return r;
  }
  ConvexPolygon r = *this;
  for (std::size_t i = 0, n = other.size(); i < n && !r.empty(); ++i) {
    const Line l = line_through(other[i], other[(i + 1) % n]);
    r = r.clipped(l.form, eps);
  }
  return r;
}

ConvexPolygon half_plane_clip(const ConvexPolygon& poly, const Line& line, Side keep, double eps) {
  return poly.clipped(keep == Side::Left ? line.form : line.form.flipped(), eps);
}

ConvexPolygon convex_hull(std::span<const Point2> points, double eps) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return ConvexPolygon(simplify_ring(std::move(pts), eps));
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Point2& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return ConvexPolygon(simplify_ring(std::move(hull), eps));
}

bool approx_equal(const ConvexPolygon& a, const ConvexPolygon& b, double eps) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = near(a[i], b[(i + s) % n], eps);
    if (ok) return true;
  }
  return false;
}

double hausdorff(const ConvexPolygon& a, const ConvexPolygon& b, double eps) {
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) {
    const double d = a.empty() ? b.diameter() : a.diameter();
    return d <= eps ? d : std::numeric_limits<double>::infinity();
  }
  double h = 0.0;
  for (const Point2& p : a.vertices()) h = std::max(h, b.distance_to(p));
  for (const Point2& p : b.vertices()) h = std::max(h, a.distance_to(p));
  return h;
}

}  // namespace pcd
