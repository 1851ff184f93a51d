#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pcd/proximity.hpp"

namespace pcd {

class Rng;

/// Arc (i, j) iff sample[j] lies in N(sample[i]), i != j. Arcs are sorted.
struct PcdDigraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  bool has_arc(std::size_t i, std::size_t j) const;
};

struct DominationResult {
  std::size_t gamma = 0;
  std::vector<std::size_t> witness;
  /// False when kmax stopped the search before a dominating set was found;
  /// gamma is then kmax + 1, a lower bound.
  bool exact = true;
};

PcdDigraph build_pcd(std::span<const Point2> sample, const ProximityMapSpec& spec);

/// Minimum dominating set over closed out-neighbourhoods. Without kmax the
/// search is limited to n <= 24.
DominationResult domination_number(const PcdDigraph& d, std::optional<std::size_t> kmax = std::nullopt);

double arc_density(const PcdDigraph& d);

enum class KappaKind { Finite, Unbounded, Unknown };

struct Kappa {
  KappaKind kind = KappaKind::Unknown;
  std::size_t value = 0;
};

Kappa kappa_upper_bound(const ProximityMapSpec& spec);

/// Per nonempty vertex cell, the sample point of the cell nearest the
/// opposite edge. Sorted indices.
std::vector<std::size_t> pe_three_point_cover(std::span<const Point2> sample, const ProximityMapSpec& spec);

/// n points along the edge v1-v2, point i at the position of M in the i-th of
/// n copies of the triangle scaled by 1/n. With eps > 0 each point is moved
/// uniformly inside a disk of radius eps * |v1 v2|.
std::vector<Point2> cs_gamma_n_construction(std::size_t n, const Triangle& t, Point2 M, double tau,
                                            double eps = 0.0, Rng* rng = nullptr);

/// Half the largest jitter radius (relative to |v1 v2|) that keeps the
/// perturbed regions pairwise disjoint from the other points' balls.
double default_construction_eps(std::size_t n, const Triangle& t, Point2 M);

struct DigraphMeta {
  std::string family;
  double param = 0.0;
  std::string center;
  std::optional<std::uint64_t> seed;
  std::string frame = "input";
};

std::string digraph_to_json(const PcdDigraph& d, const DigraphMeta& meta);
PcdDigraph digraph_from_json(const std::string& text, DigraphMeta* meta = nullptr);

}  // namespace pcd
