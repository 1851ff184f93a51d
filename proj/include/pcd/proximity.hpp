#pragma once

#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pcd/geom.hpp"
#include "pcd/regions.hpp"

namespace pcd {

inline constexpr double kInfiniteR = std::numeric_limits<double>::infinity();

struct PE {
  double r = 2.0;  // kInfiniteR: every point maps to the whole triangle
};
struct CS {
  double tau = 1.0;
};
struct Spherical {};
struct ArcSlice {};
struct Interval1D {};

using Family = std::variant<PE, CS, Spherical, ArcSlice, Interval1D>;

enum class FamilyKind { PE, CS, Spherical, ArcSlice, Interval1D };

/// A map family together with the context it is defined on. PE uses vertex
/// regions and CS edge regions around the resolved center; both partitions are
/// built once here. One-dimensional points travel as Point2 with y ignored.
class ProximityMapSpec {
 public:
  static ProximityMapSpec pe(const Triangle& t, double r, CenterSelector sel = CenterSelector::centroid());
  static ProximityMapSpec cs(const Triangle& t, double tau, CenterSelector sel = CenterSelector::centroid());
  /// Spherical map over the vertex set of t, on the whole plane.
  static ProximityMapSpec spherical(const Triangle& t);
  static ProximityMapSpec spherical(std::vector<Point2> ys);
  static ProximityMapSpec arc_slice(const Triangle& t);
  static ProximityMapSpec interval_1d(std::vector<double> ys);

  const Family& family() const { return family_; }
  FamilyKind kind() const { return static_cast<FamilyKind>(family_.index()); }
  bool has_triangle() const { return has_triangle_; }
  const Triangle& triangle() const { return triangle_; }
  const CenterSelector& center_selector() const { return sel_; }
  /// PE: vertex regions. CS: edge regions. Others: throws.
  const RegionPartition& partition() const;
  const std::vector<Point2>& points() const { return ys_; }
  const std::vector<double>& points_1d() const { return ys1_; }

  double r() const;
  double tau() const;
  std::string family_name() const;
  std::string center_name() const;
  /// r for PE, tau for CS, NaN otherwise.
  double param() const;

  /// Whether x lies in the domain the map is defined on.
  bool in_domain(Point2 x) const;

 private:
  Family family_;
  CenterSelector sel_;
  bool has_triangle_ = false;
  Triangle triangle_{};
  std::optional<RegionPartition> part_;
  std::vector<Point2> ys_;
  std::vector<double> ys1_;
};

struct Disk {
  Point2 center;
  double radius = 0.0;
};

struct DiskTriangle {
  Disk disk;
  Triangle triangle;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct Singleton {
  Point2 point;
};

using ProximityRegion = std::variant<ConvexPolygon, Disk, DiskTriangle, Interval, Singleton>;

ProximityRegion n_pe(Point2 x, const ProximityMapSpec& spec);
ProximityRegion n_cs(Point2 x, const ProximityMapSpec& spec);
ProximityRegion n_s(Point2 x, const std::vector<Point2>& ys);
ProximityRegion n_as(Point2 x, const Triangle& t);
ProximityRegion n_interval(double x, const std::vector<double>& ys);
/// Dispatches on the family.
ProximityRegion region(const ProximityMapSpec& spec, Point2 x);

/// y in N(x), evaluated without building N(x). Throws when x is outside the
/// domain of the map.
bool contains(const ProximityMapSpec& spec, Point2 x, Point2 y);

/// Point-in-region test on a materialized region. Polygons are closed, disks
/// and intervals open.
bool region_contains(const ProximityRegion& reg, Point2 y, double eps = kEps);

double region_area(const ProximityRegion& reg);
double region_area(const ProximityMapSpec& spec, Point2 x);

/// Exact area of the intersection of a disk with a convex polygon.
double disk_polygon_area(const Disk& d, const ConvexPolygon& poly);

SupersetRegion superset_region(const ProximityMapSpec& spec);

/// One-dimensional superset region of the cell (ys[cell], ys[cell+1]): its
/// midpoint. End cells (cell = -1 or ys.size()-1) have none.
SupersetRegion superset_region_1d(const std::vector<double>& ys, int cell);

}  // namespace pcd
