#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "pcd/proximity.hpp"
#include "pcd/regions.hpp"

namespace pcd {

/// {z : every sample point lies in N(z)} for PE and CS maps, split by the
/// partition cells of the map: pieces[i] is the part inside cell i.
struct Gamma1Region {
  RegionKind kind = RegionKind::Empty;
  Point2 point{};  // when kind == SinglePoint
  std::array<ConvexPolygon, 3> pieces;

  bool empty() const { return kind == RegionKind::Empty; }
  double area() const;
  bool contains(Point2 z, double eps = kEps) const;
  std::size_t vertex_count() const;
};

struct EdgeExtrema {
  std::array<std::size_t, 3> index{};  // sample index closest to the edge opposite vertex i
  std::array<double, 3> dist{};

  /// Distinct indices in increasing order.
  std::vector<std::size_t> distinct() const;
};

struct ActiveSetResult {
  std::size_t eta = 0;
  std::vector<std::size_t> witness;
};

enum class EtaMode { Extrema, Exhaustive };

Gamma1Region gamma1_point(Point2 x, const ProximityMapSpec& spec);
/// Intersection of the per-point regions, one clip per sample point.
Gamma1Region gamma1_set(std::span<const Point2> sample, const ProximityMapSpec& spec);
/// Same region computed from the (at most three) edge extrema only.
Gamma1Region gamma1_via_extrema(std::span<const Point2> sample, const ProximityMapSpec& spec);
double gamma1_area(const Gamma1Region& g);

EdgeExtrema edge_extrema(std::span<const Point2> sample, const Triangle& t);

/// Per-cell Hausdorff comparison. An empty piece matches a piece whose
/// diameter is at most tol.
bool gamma1_equal(const Gamma1Region& a, const Gamma1Region& b, double tol = 1e-8);

/// Smallest subset with the same region. Extrema mode starts from subsets of
/// the distinct edge extrema and then looks for smaller replacements among the
/// other points; exhaustive mode tries every subset (n <= 20).
ActiveSetResult eta_value(std::span<const Point2> sample, const ProximityMapSpec& spec,
                          EtaMode mode = EtaMode::Extrema);

/// Membership of z in the region straight from the map predicate.
bool gamma1_predicate(Point2 z, std::span<const Point2> sample, const ProximityMapSpec& spec);

struct GridComparison {
  std::size_t nodes = 0;       // grid nodes inside the triangle
  std::size_t mismatches = 0;  // predicate and polygons disagree
  std::size_t far_mismatches = 0;  // ... farther than one grid step from any piece boundary
};

/// Evaluates predicate and polygon membership on a res x res grid over the
/// bounding box of the triangle.
GridComparison compare_gamma1_grid(std::span<const Point2> sample, const ProximityMapSpec& spec,
                                   const Gamma1Region& g, int res = 400);

/// Area estimate from the predicate alone; grid cells whose corners disagree
/// are resampled on a 4x4 subgrid.
double gamma1_grid_area(std::span<const Point2> sample, const ProximityMapSpec& spec, int res = 400);

// One-dimensional map with targets {0, 1}.
Interval gamma1_interval_1d(std::span<const double> sample);

struct Rect {
  double x0, x1, y0, y1;
  bool contains(double u, double v) const { return u > x0 && u < x1 && v > y0 && v < y1; }
};

std::vector<Rect> gamma2_region_1d(std::vector<double> sample);

/// Active set size for the one-dimensional map: the sample minimum and maximum.
std::size_t eta_value_1d(std::span<const double> sample);

/// Whether the tuple covers the sample while no proper sub-tuple does so at
/// lower order.
bool gamma_k_membership(std::span<const Point2> tuple, std::span<const Point2> sample,
                        const ProximityMapSpec& spec);

/// Two-point membership via ordered two-block partitions of the sample, with
/// both points outside the first-order region.
bool gamma2_via_partitions(Point2 a, Point2 b, std::span<const Point2> sample, const ProximityMapSpec& spec);

/// Smallest k for which some k-combination of sample points passes
/// gamma_k_membership.
std::size_t smallest_gamma_k(std::span<const Point2> sample, const ProximityMapSpec& spec);

}  // namespace pcd
