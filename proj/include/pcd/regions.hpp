#pragma once

#include <array>
#include <vector>

#include "pcd/geom.hpp"

namespace pcd {

// Slack on barycentric comparisons; coordinates are scale free.
inline constexpr double kBaryEps = 1e-12;

enum class PartitionKind { Vertex, Edge };

/// Three cells covering the triangle, built from the cevians through M.
/// Cells are indexed 0..2: vertex cell i holds vertex i, edge cell i abuts the
/// edge opposite vertex i.
struct RegionPartition {
  PartitionKind kind = PartitionKind::Vertex;
  Triangle triangle;  // counter-clockwise
  Point2 M;
  std::array<double, 3> m{};  // barycentric coordinates of M
  std::array<ConvexPolygon, 3> cells;

  /// Cell index of x; ties go to the smallest index.
  int locate(Point2 x) const;
};

/// Requires M strictly inside the triangle.
RegionPartition vertex_regions(const Triangle& t, const CenterSelector& sel);
RegionPartition edge_regions(const Triangle& t, const CenterSelector& sel);

inline int locate(const RegionPartition& part, Point2 x) { return part.locate(x); }

/// Vertex cell index from barycentric coordinates: argmax b_i / m_i.
int vertex_cell(const std::array<double, 3>& b, const std::array<double, 3>& m);
/// Edge cell index from barycentric coordinates: argmin b_i / m_i.
int edge_cell(const std::array<double, 3>& b, const std::array<double, 3>& m);

/// {z in T : b_i(z) >= 1 - 1/r for all i}. Empty for r >= 3/2.
ConvexPolygon inner_triangle(const Triangle& t, double r);
/// inner_triangle on the basic triangle T_b(c1,c2).
ConvexPolygon script_T_r(double r, BasicTriangleParams params);

enum class RegionKind { Empty, SinglePoint, Polygon };

/// Points whose proximity region is the whole domain. A general center makes
/// the polygon case a union of up to three convex pieces.
struct SupersetRegion {
  RegionKind kind = RegionKind::Empty;
  Point2 point{};
  std::vector<ConvexPolygon> pieces;

  static SupersetRegion empty() { return {}; }
  static SupersetRegion single(Point2 p) { return {RegionKind::SinglePoint, p, {}}; }

  double area() const;
  bool contains(Point2 p, double eps = kEps) const;
};

/// Superset region of the proportional-edge map with expansion r (r may be
/// infinite) over vertex partition `part`.
SupersetRegion pe_superset_region(const RegionPartition& part, double r);

/// Collapses a list of convex pieces: drops empty ones, returns Empty, a single
/// point or the pieces with positive area.
SupersetRegion classify_pieces(std::vector<ConvexPolygon> pieces, double eps);

}  // namespace pcd
