#include "pcd/proximity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pcd/error.hpp"

namespace pcd {

namespace {

double nearest_distance(Point2 x, const std::vector<Point2>& ys) {
  double r = std::numeric_limits<double>::infinity();
  for (const Point2& y : ys) r = std::min(r, distance(x, y));
  return r;
}

double nearest_distance_1d(double x, const std::vector<double>& ys) {
  double r = std::numeric_limits<double>::infinity();
  for (double y : ys) r = std::min(r, std::abs(x - y));
  return r;
}

void require_inside(const Triangle& t, Point2 x) {
  if (!t.contains(x)) throw Error(ErrorCode::OutsideDomain, "point lies outside the triangle");
}

// signed area of disk(0,R) intersected with triangle (0,a,b)
double wedge_area(Point2 a, Point2 b, double R) {
  const Point2 d = b - a;
  const double A = dot(d, d), B = dot(a, d), C = dot(a, a) - R * R;
  double ts[4] = {0.0, 0.0, 0.0, 1.0};
  int nt = 1;
  const double disc = B * B - A * C;
  if (A > 0 && disc > 0) {
    const double sq = std::sqrt(disc);
    const double t1 = (-B - sq) / A, t2 = (-B + sq) / A;
    if (t1 > 0 && t1 < 1) ts[nt++] = t1;
    if (t2 > 0 && t2 < 1) ts[nt++] = t2;
  }
  ts[nt++] = 1.0;
  double s = 0.0;
  for (int i = 0; i + 1 < nt; ++i) {
    const Point2 p = a + ts[i] * d, q = a + ts[i + 1] * d;
    const Point2 mid = a + 0.5 * (ts[i] + ts[i + 1]) * d;
    if (dot(mid, mid) <= R * R)
      s += 0.5 * cross(p, q);
    else
      s += 0.5 * R * R * std::atan2(cross(p, q), dot(p, q));
  }
  return s;
}

}  // namespace

ProximityMapSpec ProximityMapSpec::pe(const Triangle& t, double r, CenterSelector sel) {
  if (!(r >= 1.0)) throw Error(ErrorCode::InvalidArgument, "proportional-edge map needs r >= 1");
  ProximityMapSpec s;
  s.family_ = PE{r};
  s.sel_ = sel;
  s.has_triangle_ = true;
  s.triangle_ = make_triangle(t.v1, t.v2, t.v3);
  s.part_ = vertex_regions(s.triangle_, sel);
  return s;
}

ProximityMapSpec ProximityMapSpec::cs(const Triangle& t, double tau, CenterSelector sel) {
  if (!(tau >= 0.0 && tau <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "central-similarity map needs 0 <= tau <= 1");
  ProximityMapSpec s;
  s.family_ = CS{tau};
  s.sel_ = sel;
  s.has_triangle_ = true;
  s.triangle_ = make_triangle(t.v1, t.v2, t.v3);
  s.part_ = edge_regions(s.triangle_, sel);
  return s;
}

ProximityMapSpec ProximityMapSpec::spherical(const Triangle& t) {
  ProximityMapSpec s = spherical(std::vector<Point2>{t.v1, t.v2, t.v3});
  s.has_triangle_ = true;
  s.triangle_ = make_triangle(t.v1, t.v2, t.v3);
  return s;
}

ProximityMapSpec ProximityMapSpec::spherical(std::vector<Point2> ys) {
  if (ys.empty()) throw Error(ErrorCode::InvalidArgument, "spherical map needs at least one target point");
  ProximityMapSpec s;
  s.family_ = Spherical{};
  s.ys_ = std::move(ys);
  return s;
}

ProximityMapSpec ProximityMapSpec::arc_slice(const Triangle& t) {
  ProximityMapSpec s;
  s.family_ = ArcSlice{};
  s.has_triangle_ = true;
  s.triangle_ = make_triangle(t.v1, t.v2, t.v3);
  s.ys_ = {s.triangle_.v1, s.triangle_.v2, s.triangle_.v3};
  return s;
}

ProximityMapSpec ProximityMapSpec::interval_1d(std::vector<double> ys) {
  if (ys.empty()) throw Error(ErrorCode::InvalidArgument, "interval map needs at least one target point");
  std::sort(ys.begin(), ys.end());
  ProximityMapSpec s;
  s.family_ = Interval1D{};
  s.ys1_ = std::move(ys);
  return s;
}

const RegionPartition& ProximityMapSpec::partition() const {
  if (!part_) throw Error(ErrorCode::InvalidArgument, "map family has no region partition");
  return *part_;
}

double ProximityMapSpec::r() const {
  if (const auto* p = std::get_if<PE>(&family_)) return p->r;
  throw Error(ErrorCode::InvalidArgument, "not a proportional-edge map");
}

double ProximityMapSpec::tau() const {
  if (const auto* p = std::get_if<CS>(&family_)) return p->tau;
  throw Error(ErrorCode::InvalidArgument, "not a central-similarity map");
}

double ProximityMapSpec::param() const {
  if (const auto* p = std::get_if<PE>(&family_)) return p->r;
  if (const auto* p = std::get_if<CS>(&family_)) return p->tau;
  return std::numeric_limits<double>::quiet_NaN();
}

std::string ProximityMapSpec::family_name() const {
  static const char* names[] = {"pe", "cs", "spherical", "arcslice", "interval1d"};
  return names[family_.index()];
}

std::string ProximityMapSpec::center_name() const {
  if (kind() != FamilyKind::PE && kind() != FamilyKind::CS) return "none";
  switch (sel_.kind) {
    case CenterKind::Centroid: return "centroid";
    case CenterKind::Circumcenter: return "circumcenter";
    case CenterKind::Incenter: return "incenter";
    case CenterKind::Custom: return "custom";
  }
  return "custom";
}

bool ProximityMapSpec::in_domain(Point2 x) const {
  switch (kind()) {
    case FamilyKind::PE:
    case FamilyKind::CS:
    case FamilyKind::ArcSlice:
      return triangle_.contains(x);
    case FamilyKind::Spherical:
    case FamilyKind::Interval1D:
      return std::isfinite(x.x) && std::isfinite(x.y);
  }
  return false;
}

ProximityRegion n_pe(Point2 x, const ProximityMapSpec& spec) {
  const Triangle& T = spec.triangle();
  require_inside(T, x);
  const double r = spec.r();
  if (std::isinf(r)) return ConvexPolygon::from_triangle(T);
  if (const int v = T.vertex_index(x); v >= 0) return Singleton{T.vertex(v)};
  const RegionPartition& part = spec.partition();
  const auto b = T.barycentric(x);
  const int i = vertex_cell(b, part.m);
  const double thr = 1.0 - r * (1.0 - b[i]);
  return ConvexPolygon::from_triangle(T).clipped(T.barycentric_form(i) - thr, T.tolerance());
}

ProximityRegion n_cs(Point2 x, const ProximityMapSpec& spec) {
  const Triangle& T = spec.triangle();
  require_inside(T, x);
  const double tau = spec.tau();
  const auto b = T.barycentric(x);
  if (tau == 0.0 || std::min({b[0], b[1], b[2]}) <= kBaryEps) return Singleton{x};
  const RegionPartition& part = spec.partition();
  const int k = edge_cell(b, part.m);
  const double s = tau * b[k] / part.m[k];
  std::vector<Point2> v;
  for (int j = 0; j < 3; ++j) v.push_back(x + s * (T.vertex(j) - part.M));
  return ConvexPolygon(std::move(v));
}

ProximityRegion n_s(Point2 x, const std::vector<Point2>& ys) {
  const double r = nearest_distance(x, ys);
  if (r == 0.0) return Singleton{x};
  return Disk{x, r};
}

ProximityRegion n_as(Point2 x, const Triangle& t) {
  require_inside(t, x);
  const double r = nearest_distance(x, {t.v1, t.v2, t.v3});
  if (r <= t.tolerance()) return Singleton{x};
  return DiskTriangle{{x, r}, t};
}

ProximityRegion n_interval(double x, const std::vector<double>& ys) {
  const double r = nearest_distance_1d(x, ys);
  if (r == 0.0) return Singleton{{x, 0.0}};
  return Interval{x - r, x + r};
}

ProximityRegion region(const ProximityMapSpec& spec, Point2 x) {
  switch (spec.kind()) {
    case FamilyKind::PE: return n_pe(x, spec);
    case FamilyKind::CS: return n_cs(x, spec);
    case FamilyKind::Spherical: return n_s(x, spec.points());
    case FamilyKind::ArcSlice: return n_as(x, spec.triangle());
    case FamilyKind::Interval1D: return n_interval(x.x, spec.points_1d());
  }
  throw Error(ErrorCode::InvalidArgument, "unknown map family");
}

bool contains(const ProximityMapSpec& spec, Point2 x, Point2 y) {
  switch (spec.kind()) {
    case FamilyKind::PE: {
      const Triangle& T = spec.triangle();
      require_inside(T, x);
      if (!T.contains(y)) return false;
      const double r = spec.r();
      if (std::isinf(r)) return true;
      if (T.vertex_index(x) >= 0) return near(x, y, T.tolerance());
      const auto b = T.barycentric(x);
      const int i = vertex_cell(b, spec.partition().m);
      return T.barycentric_form(i)(y) >= 1.0 - r * (1.0 - b[i]) - kBaryEps;
    }
    case FamilyKind::CS: {
      const Triangle& T = spec.triangle();
      require_inside(T, x);
      const auto bx = T.barycentric(x);
      if (spec.tau() == 0.0 || std::min({bx[0], bx[1], bx[2]}) <= kBaryEps) return near(x, y, T.tolerance());
      const auto& m = spec.partition().m;
      const int k = edge_cell(bx, m);
      const double s = spec.tau() * bx[k] / m[k];
      const auto by = T.barycentric(y);
      for (int j = 0; j < 3; ++j)
        if (by[j] < bx[j] - s * m[j] - kBaryEps) return false;
      return true;
    }
    case FamilyKind::Spherical: {
      const double r = nearest_distance(x, spec.points());
      return r == 0.0 ? x == y : distance(x, y) < r;
    }
    case FamilyKind::ArcSlice: {
      const Triangle& T = spec.triangle();
      require_inside(T, x);
      if (!T.contains(y)) return false;
      const double r = nearest_distance(x, spec.points());
      if (r <= T.tolerance()) return near(x, y, T.tolerance());
      return distance(x, y) < r;
    }
    case FamilyKind::Interval1D: {
      const double r = nearest_distance_1d(x.x, spec.points_1d());
      return r == 0.0 ? x.x == y.x : std::abs(x.x - y.x) < r;
    }
  }
  return false;
}

bool region_contains(const ProximityRegion& reg, Point2 y, double eps) {
  struct Visitor {
    Point2 y;
    double eps;
    bool operator()(const ConvexPolygon& p) const { return p.contains(y, eps); }
    bool operator()(const Disk& d) const { return distance(d.center, y) < d.radius; }
    bool operator()(const DiskTriangle& dt) const {
      return distance(dt.disk.center, y) < dt.disk.radius && dt.triangle.contains(y, eps);
    }
    bool operator()(const Interval& iv) const { return y.x > iv.lo && y.x < iv.hi; }
    bool operator()(const Singleton& s) const { return near(s.point, y, eps); }
  };
  return std::visit(Visitor{y, eps}, reg);
}

double disk_polygon_area(const Disk& d, const ConvexPolygon& poly) {
  if (poly.size() < 3 || d.radius <= 0.0) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0, n = poly.size(); i < n; ++i)
    s += wedge_area(poly[i] - d.center, poly[(i + 1) % n] - d.center, d.radius);
  return std::abs(s);
}

double region_area(const ProximityRegion& reg) {
  struct Visitor {
    double operator()(const ConvexPolygon& p) const { return p.area(); }
    double operator()(const Disk& d) const { return std::numbers::pi * d.radius * d.radius; }
    double operator()(const DiskTriangle& dt) const {
      return disk_polygon_area(dt.disk, ConvexPolygon::from_triangle(dt.triangle));
    }
    double operator()(const Interval& iv) const { return iv.hi - iv.lo; }
    double operator()(const Singleton&) const { return 0.0; }
  };
  return std::visit(Visitor{}, reg);
}

double region_area(const ProximityMapSpec& spec, Point2 x) { return region_area(region(spec, x)); }

SupersetRegion superset_region(const ProximityMapSpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::PE:
      return pe_superset_region(spec.partition(), spec.r());
    case FamilyKind::CS:
      return spec.tau() == 1.0 ? SupersetRegion::single(spec.partition().M) : SupersetRegion::empty();
    case FamilyKind::ArcSlice: {
      const Point2 o = center(spec.triangle(), CenterSelector::circumcenter());
      return spec.triangle().contains(o) ? SupersetRegion::single(o) : SupersetRegion::empty();
    }
    case FamilyKind::Spherical:
      return SupersetRegion::empty();
    case FamilyKind::Interval1D: {
      const auto& ys = spec.points_1d();
      if (ys.size() != 2)
        throw Error(ErrorCode::InvalidArgument, "interval superset region needs a cell; use superset_region_1d");
      return superset_region_1d(ys, 0);
    }
  }
  return SupersetRegion::empty();
}

SupersetRegion superset_region_1d(const std::vector<double>& ys, int cell) {
  if (cell < 0 || cell + 1 >= static_cast<int>(ys.size())) return SupersetRegion::empty();
  return SupersetRegion::single({0.5 * (ys[cell] + ys[cell + 1]), 0.0});
}

}  // namespace pcd
