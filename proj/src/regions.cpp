#include "pcd/regions.hpp"

#include <cmath>
#include <limits>

#include "pcd/error.hpp"

namespace pcd {

namespace {

RegionPartition prepare(const Triangle& t, const CenterSelector& sel, PartitionKind kind) {
  RegionPartition part;
  part.kind = kind;
  part.triangle = make_triangle(t.v1, t.v2, t.v3);
  part.M = center(part.triangle, sel);
  part.m = part.triangle.barycentric(part.M);
  const double tol = part.triangle.tolerance();
  for (int i = 0; i < 3; ++i) {
    if (part.triangle.distance_to_edge(i, part.M) <= tol) {
      if (part.triangle.vertex_index(part.M) >= 0)
        throw Error(ErrorCode::OutsideDomain, "center coincides with a triangle vertex");
      throw Error(ErrorCode::OutsideDomain, "center must lie strictly inside the triangle");
    }
  }
  return part;
}

}  // namespace

int vertex_cell(const std::array<double, 3>& b, const std::array<double, 3>& m) {
  int best = 0;
  double bv = b[0] / m[0];
  for (int i = 1; i < 3; ++i) {
    const double v = b[i] / m[i];
    if (v > bv + kBaryEps) {
      bv = v;
      best = i;
    }
  }
  return best;
}

int edge_cell(const std::array<double, 3>& b, const std::array<double, 3>& m) {
  int best = 0;
  double bv = b[0] / m[0];
  for (int i = 1; i < 3; ++i) {
    const double v = b[i] / m[i];
    if (v < bv - kBaryEps) {
      bv = v;
      best = i;
    }
  }
  return best;
}

int RegionPartition::locate(Point2 x) const {
  if (!triangle.contains(x)) throw Error(ErrorCode::OutsideDomain, "point lies outside the triangle");
  const auto b = triangle.barycentric(x);
  return kind == PartitionKind::Vertex ? vertex_cell(b, m) : edge_cell(b, m);
}

RegionPartition vertex_regions(const Triangle& t, const CenterSelector& sel) {
  RegionPartition part = prepare(t, sel, PartitionKind::Vertex);
  const Triangle& T = part.triangle;
  // foot[j]: where the cevian from vertex j through M meets the opposite edge
  std::array<Point2, 3> foot;
  for (int j = 0; j < 3; ++j) {
    const int k = (j + 1) % 3, l = (j + 2) % 3;
    const double s = part.m[k] + part.m[l];
    std::array<double, 3> b{};
    b[k] = part.m[k] / s;
    b[l] = part.m[l] / s;
    foot[j] = T.from_barycentric(b);
  }
  const double eps = T.tolerance();
  for (int i = 0; i < 3; ++i) {
    std::vector<Point2> ring{T.vertex(i), foot[(i + 2) % 3], part.M, foot[(i + 1) % 3]};
    part.cells[i] = ConvexPolygon(simplify_ring(std::move(ring), eps));
  }
  return part;
}

RegionPartition edge_regions(const Triangle& t, const CenterSelector& sel) {
  RegionPartition part = prepare(t, sel, PartitionKind::Edge);
  const Triangle& T = part.triangle;
  for (int i = 0; i < 3; ++i)
    part.cells[i] = ConvexPolygon({T.vertex((i + 1) % 3), T.vertex((i + 2) % 3), part.M});
  return part;
}

ConvexPolygon inner_triangle(const Triangle& t, double r) {
  if (!(r >= 1.0)) throw Error(ErrorCode::InvalidArgument, "expansion parameter must be at least 1");
  if (r >= 1.5) return {};
  const Triangle T = make_triangle(t.v1, t.v2, t.v3);
  const double a = 1.0 - 1.0 / r;
  ConvexPolygon poly = ConvexPolygon::from_triangle(T);
  for (int i = 0; i < 3; ++i) poly = poly.clipped(T.barycentric_form(i) - a, T.tolerance());
  return poly;
}

ConvexPolygon script_T_r(double r, BasicTriangleParams params) {
  return inner_triangle(basic_triangle(params), r);
}

double SupersetRegion::area() const {
  double a = 0.0;
  for (const auto& p : pieces) a += p.area();
  return a;
}

bool SupersetRegion::contains(Point2 p, double eps) const {
  switch (kind) {
    case RegionKind::Empty:
      return false;
    case RegionKind::SinglePoint:
      return near(point, p, eps);
    case RegionKind::Polygon:
      for (const auto& piece : pieces)
        if (piece.contains(p, eps)) return true;
      return false;
  }
  return false;
}

SupersetRegion classify_pieces(std::vector<ConvexPolygon> pieces, double eps) {
  std::vector<ConvexPolygon> solid;
  std::vector<Point2> specks;
  for (auto& p : pieces) {
    if (p.empty()) continue;
    if (p.size() >= 3 && p.area() > eps * eps) {
      solid.push_back(std::move(p));
    } else {
      specks.insert(specks.end(), p.vertices().begin(), p.vertices().end());
    }
  }
  if (!solid.empty()) return {RegionKind::Polygon, {}, std::move(solid)};
  if (specks.empty()) return SupersetRegion::empty();
  const ConvexPolygon hull = convex_hull(specks, eps);
  if (hull.diameter() <= 10 * eps) {
    Point2 c{};
    for (const Point2& q : specks) c = c + q;
    return SupersetRegion::single((1.0 / static_cast<double>(specks.size())) * c);
  }
  // a segment-shaped region: keep it as a degenerate piece
  return {RegionKind::Polygon, {}, {hull}};
}

SupersetRegion pe_superset_region(const RegionPartition& part, double r) {
  if (part.kind != PartitionKind::Vertex)
    throw Error(ErrorCode::InvalidArgument, "proportional-edge superset region needs vertex regions");
  if (!(r >= 1.0)) throw Error(ErrorCode::InvalidArgument, "expansion parameter must be at least 1");
  const double eps = part.triangle.tolerance();
  std::vector<ConvexPolygon> pieces;
  for (int i = 0; i < 3; ++i) {
    if (std::isinf(r)) {
      pieces.push_back(part.cells[i]);
      continue;
    }
    const HalfPlane keep = (1.0 - 1.0 / r) - part.triangle.barycentric_form(i);
    pieces.push_back(part.cells[i].clipped(keep, eps));
  }
  return classify_pieces(std::move(pieces), eps);
}

}  // namespace pcd
