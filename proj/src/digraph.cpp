#include "pcd/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

#include "pcd/error.hpp"
#include "pcd/sim.hpp"

namespace pcd {

namespace {

using Bits = std::vector<std::uint64_t>;

struct Cover {
  std::size_t n;
  std::size_t words;
  std::vector<Bits> closed;                     // closed[v]: v and its out-neighbours
  std::vector<std::vector<std::size_t>> doms;  // doms[u]: vertices whose closed set holds u
  std::vector<std::size_t> chosen;

  explicit Cover(const PcdDigraph& d) : n(d.n), words((d.n + 63) / 64), closed(d.n, Bits(words, 0)), doms(d.n) {
    for (std::size_t v = 0; v < n; ++v) closed[v][v / 64] |= 1ull << (v % 64);
    for (const auto& [i, j] : d.arcs) closed[i][j / 64] |= 1ull << (j % 64);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t u = 0; u < n; ++u)
        if (closed[v][u / 64] >> (u % 64) & 1ull) doms[u].push_back(v);
  }

  std::size_t first_uncovered(const Bits& covered) const {
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t free = ~covered[w];
      if (w == words - 1 && n % 64 != 0) free &= (1ull << (n % 64)) - 1;
      if (free) return w * 64 + static_cast<std::size_t>(__builtin_ctzll(free));
    }
    return n;
  }

  bool search(const Bits& covered, std::size_t budget) {
    const std::size_t u = first_uncovered(covered);
    if (u == n) return true;
    if (budget == 0) return false;
    Bits next(words);
    for (std::size_t v : doms[u]) {
      for (std::size_t w = 0; w < words; ++w) next[w] = covered[w] | closed[v][w];
      chosen.push_back(v);
      if (search(next, budget - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

bool PcdDigraph::has_arc(std::size_t i, std::size_t j) const {
  return std::binary_search(arcs.begin(), arcs.end(), std::make_pair(i, j));
}

PcdDigraph build_pcd(std::span<const Point2> sample, const ProximityMapSpec& spec) {
  PcdDigraph d;
  d.n = sample.size();
  for (std::size_t i = 0; i < d.n; ++i) {
    if (!spec.in_domain(sample[i])) throw Error(ErrorCode::OutsideDomain, "sample point lies outside the domain");
    for (std::size_t j = 0; j < d.n; ++j)
      if (i != j && contains(spec, sample[i], sample[j])) d.arcs.emplace_back(i, j);
  }
  return d;
}

DominationResult domination_number(const PcdDigraph& d, std::optional<std::size_t> kmax) {
  if (!kmax && d.n > 24) throw Error(ErrorCode::TooLarge, "exact domination search without a cap is limited to 24 vertices");
  DominationResult res;
  if (d.n == 0) return res;
  Cover cover(d);
  const std::size_t limit = kmax ? std::min(*kmax, d.n) : d.n;
  const Bits none(cover.words, 0);
  for (std::size_t k = 1; k <= limit; ++k) {
    cover.chosen.clear();
    if (cover.search(none, k)) {
      res.gamma = cover.chosen.size();
      res.witness = cover.chosen;
      std::sort(res.witness.begin(), res.witness.end());
      return res;
    }
  }
  res.gamma = limit + 1;
  res.exact = false;
  return res;
}

double arc_density(const PcdDigraph& d) {
  if (d.n < 2) throw Error(ErrorCode::InvalidArgument, "arc density needs at least two vertices");
  return static_cast<double>(d.arcs.size()) / (static_cast<double>(d.n) * static_cast<double>(d.n - 1));
}

Kappa kappa_upper_bound(const ProximityMapSpec& spec) {
  switch (spec.kind()) {
    case FamilyKind::PE: return {KappaKind::Finite, 3};
    case FamilyKind::CS: return {KappaKind::Unbounded, 0};
    case FamilyKind::Interval1D: return {KappaKind::Finite, 2};
    default: return {KappaKind::Unknown, 0};
  }
}

std::vector<std::size_t> pe_three_point_cover(std::span<const Point2> sample, const ProximityMapSpec& spec) {
  if (spec.kind() != FamilyKind::PE) throw Error(ErrorCode::InvalidArgument, "three-point cover needs a PE map");
  const Triangle& T = spec.triangle();
  const RegionPartition& part = spec.partition();
  std::array<std::size_t, 3> best{};
  std::array<double, 3> depth{};
  depth.fill(std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < sample.size(); ++s) {
    const int i = part.locate(sample[s]);
    const double b = T.barycentric_form(i)(sample[s]);
    if (b < depth[i]) {
      depth[i] = b;
      best[i] = s;
    }
  }
  std::vector<std::size_t> out;
  for (int i = 0; i < 3; ++i)
    if (std::isfinite(depth[i])) out.push_back(best[i]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Point2> cs_gamma_n_construction(std::size_t n, const Triangle& t, Point2 M, double tau, double eps,
                                            Rng* rng) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "construction needs n >= 1");
  if (!(tau > 0.0 && tau <= 1.0)) throw Error(ErrorCode::InvalidArgument, "construction needs 0 < tau <= 1");
  if (!t.contains(M) || t.vertex_index(M) >= 0) throw Error(ErrorCode::OutsideDomain, "center must lie inside the triangle");
  if (eps < 0.0) throw Error(ErrorCode::InvalidArgument, "perturbation radius must be nonnegative");
  if (eps > 0.0 && rng == nullptr) throw Error(ErrorCode::InvalidArgument, "perturbation needs a random generator");
  const double dn = static_cast<double>(n);
  const Point2 step = (1.0 / dn) * (t.v2 - t.v1);
  const Point2 lift = (1.0 / dn) * (M - t.v1);
  const double radius = eps * distance(t.v1, t.v2);
  std::vector<Point2> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 z = t.v1 + static_cast<double>(i) * step + lift;
    if (radius == 0.0) {
      pts.push_back(z);
      continue;
    }
    Point2 p;
    do {
      const double rho = radius * std::sqrt(rng->uniform());
      const double phi = 2.0 * std::numbers::pi * rng->uniform();
      p = {z.x + rho * std::cos(phi), z.y + rho * std::sin(phi)};
    } while (!t.contains(p, 0.0));
    pts.push_back(p);
  }
  return pts;
}

double default_construction_eps(std::size_t n, const Triangle& t, Point2 M) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "construction needs n >= 1");
  // N(x) for x within eps of z_i stays inside T_i grown by eps (2 + R / h)
  const double d = std::min({t.distance_to_edge(0, M), t.distance_to_edge(1, M), t.distance_to_edge(2, M)});
  const double h = t.distance_to_edge(2, M);
  const double R = std::max({distance(M, t.v1), distance(M, t.v2), distance(M, t.v3)});
  return d / (2.0 * static_cast<double>(n) * (2.0 + R / h)) / distance(t.v1, t.v2);
}

std::string digraph_to_json(const PcdDigraph& d, const DigraphMeta& meta) {
  nlohmann::ordered_json j;
  j["n"] = d.n;
  auto arcs = nlohmann::json::array();
  for (const auto& [a, b] : d.arcs) arcs.push_back({a, b});
  j["arcs"] = std::move(arcs);
  nlohmann::ordered_json spec;
  spec["family"] = meta.family;
  if (std::isinf(meta.param))
    spec["param"] = "inf";
  else if (std::isnan(meta.param))
    spec["param"] = nullptr;
  else
    spec["param"] = meta.param;
  spec["center"] = meta.center;
  j["spec"] = std::move(spec);
  if (meta.seed)
    j["seed"] = *meta.seed;
  else
    j["seed"] = nullptr;
  j["frame"] = meta.frame;
  return j.dump(2) + "\n";
}

PcdDigraph digraph_from_json(const std::string& text, DigraphMeta* meta) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad digraph json: ") + e.what());
  }
  try {
    PcdDigraph d;
    d.n = j.at("n").get<std::size_t>();
    for (const auto& a : j.at("arcs")) {
      const auto i = a.at(0).get<std::size_t>(), k = a.at(1).get<std::size_t>();
      if (i >= d.n || k >= d.n || i == k) throw Error(ErrorCode::InvalidArgument, "arc index out of range or loop");
      d.arcs.emplace_back(i, k);
    }
    std::sort(d.arcs.begin(), d.arcs.end());
    d.arcs.erase(std::unique(d.arcs.begin(), d.arcs.end()), d.arcs.end());
    if (meta) {
      const auto& s = j.at("spec");
      meta->family = s.value("family", "");
      meta->center = s.value("center", "");
      const auto& p = s.at("param");
      meta->param = p.is_string() ? std::numeric_limits<double>::infinity()
                    : p.is_null() ? std::numeric_limits<double>::quiet_NaN()
                                  : p.get<double>();
      if (j.contains("seed") && !j["seed"].is_null()) meta->seed = j["seed"].get<std::uint64_t>();
      meta->frame = j.value("frame", "input");
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad digraph json: ") + e.what());
  }
}

}  // namespace pcd
