#include "pcd/gamma.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>

#include "pcd/error.hpp"

namespace pcd {

namespace {

bool is_analytic(const ProximityMapSpec& spec) {
  return spec.kind() == FamilyKind::PE || spec.kind() == FamilyKind::CS;
}

void require_analytic(const ProximityMapSpec& spec) {
  if (!is_analytic(spec))
    throw Error(ErrorCode::InvalidArgument, "analytic region is only available for PE and CS maps");
}

// Calls fn on each k-subset of {0..n-1} in lexicographic order until fn
// returns true.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (fn(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

Gamma1Region single_point(Point2 p, const RegionPartition& part) {
  Gamma1Region g;
  g.kind = RegionKind::SinglePoint;
  g.point = p;
  g.pieces[part.locate(p)] = ConvexPolygon::point(p);
  return g;
}

Gamma1Region finish(std::array<ConvexPolygon, 3> pieces, double eps) {
  Gamma1Region g;
  g.pieces = std::move(pieces);
  bool any = false, solid = false;
  Point2 sum{};
  std::size_t count = 0;
  std::vector<Point2> all;
  for (const auto& p : g.pieces) {
    if (p.empty()) continue;
    any = true;
    if (p.size() >= 3 && p.area() > eps * eps) solid = true;
    for (const Point2& v : p.vertices()) {
      sum = sum + v;
      ++count;
      all.push_back(v);
    }
  }
  if (!any) {
    g.kind = RegionKind::Empty;
  } else if (!solid && convex_hull(all, eps).diameter() <= 10 * eps) {
    g.kind = RegionKind::SinglePoint;
    g.point = (1.0 / static_cast<double>(count)) * sum;
  } else {
    g.kind = RegionKind::Polygon;
  }
  return g;
}

// Region is {x} for every x of the sample: a single point if they coincide.
Gamma1Region collapse_to_point(std::span<const Point2> sample, const RegionPartition& part, double eps) {
  for (const Point2& x : sample)
    if (!near(x, sample[0], eps)) return {};
  return single_point(sample[0], part);
}

}  // namespace

double Gamma1Region::area() const {
  if (kind != RegionKind::Polygon) return 0.0;
  double a = 0.0;
  for (const auto& p : pieces) a += p.area();
  return a;
}

bool Gamma1Region::contains(Point2 z, double eps) const {
  if (kind == RegionKind::Empty) return false;
  if (kind == RegionKind::SinglePoint) return near(point, z, eps);
  for (const auto& p : pieces)
    if (p.contains(z, eps)) return true;
  return false;
}

std::size_t Gamma1Region::vertex_count() const {
  if (kind != RegionKind::Polygon) return kind == RegionKind::SinglePoint ? 1 : 0;
  std::vector<Point2> all;
  for (const auto& p : pieces) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  return convex_hull(all, 1e-9).size();
}

std::vector<std::size_t> EdgeExtrema::distinct() const {
  std::vector<std::size_t> out(index.begin(), index.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EdgeExtrema edge_extrema(std::span<const Point2> sample, const Triangle& t) {
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "edge extrema of an empty sample");
  EdgeExtrema e;
  e.dist.fill(std::numeric_limits<double>::infinity());
  for (std::size_t s = 0; s < sample.size(); ++s) {
    for (int i = 0; i < 3; ++i) {
      const double d = t.distance_to_edge(i, sample[s]);
      if (d < e.dist[i]) {
        e.dist[i] = d;
        e.index[i] = s;
      }
    }
  }
  return e;
}

Gamma1Region gamma1_point(Point2 x, const ProximityMapSpec& spec) {
  return gamma1_set(std::span<const Point2>(&x, 1), spec);
}

Gamma1Region gamma1_set(std::span<const Point2> sample, const ProximityMapSpec& spec) {
  require_analytic(spec);
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "region of an empty sample");
  const Triangle& T = spec.triangle();
  const RegionPartition& part = spec.partition();
  const double eps = T.tolerance();
  for (const Point2& x : sample)
    if (!T.contains(x)) throw Error(ErrorCode::OutsideDomain, "sample point lies outside the triangle");

  std::array<ConvexPolygon, 3> pieces = part.cells;
  std::array<HalfPlane, 3> form{T.barycentric_form(0), T.barycentric_form(1), T.barycentric_form(2)};

  if (spec.kind() == FamilyKind::PE) {
    const double r = spec.r();
    if (std::isinf(r)) return finish(pieces, eps);
    for (const Point2& x : sample)
      if (T.vertex_index(x) >= 0) return collapse_to_point(sample, part, eps);
    for (const Point2& x : sample) {
      const auto b = T.barycentric(x);
      for (int i = 0; i < 3; ++i) {
        if (pieces[i].empty()) continue;
        pieces[i] = pieces[i].clipped((1.0 - (1.0 - b[i]) / r) - form[i], eps);
      }
    }
    return finish(pieces, eps);
  }

  const double tau = spec.tau();
  if (tau == 0.0) return collapse_to_point(sample, part, eps);
  if (tau < 1.0) {
    for (const Point2& x : sample) {
      const auto b = T.barycentric(x);
      if (std::min({b[0], b[1], b[2]}) <= kBaryEps) return collapse_to_point(sample, part, eps);
    }
  }
  const auto& m = part.m;
  for (const Point2& x : sample) {
    const auto b = T.barycentric(x);
    for (int k = 0; k < 3; ++k) {
      for (int j = 0; j < 3 && !pieces[k].empty(); ++j) {
        const HalfPlane h = (b[j] - form[j]) + tau * m[j] / m[k] * form[k];
        pieces[k] = pieces[k].clipped(h, eps);
      }
    }
  }
  return finish(pieces, eps);
}

Gamma1Region gamma1_via_extrema(std::span<const Point2> sample, const ProximityMapSpec& spec) {
  require_analytic(spec);
  const EdgeExtrema e = edge_extrema(sample, spec.triangle());
  std::vector<Point2> pts;
  for (std::size_t i : e.distinct()) pts.push_back(sample[i]);
  return gamma1_set(pts, spec);
}

double gamma1_area(const Gamma1Region& g) { return g.area(); }

bool gamma1_equal(const Gamma1Region& a, const Gamma1Region& b, double tol) {
  if (a.kind == RegionKind::SinglePoint && b.kind == RegionKind::SinglePoint) return near(a.point, b.point, tol);
  for (int i = 0; i < 3; ++i)
    if (!(hausdorff(a.pieces[i], b.pieces[i], tol) <= tol)) return false;
  return true;
}

ActiveSetResult eta_value(std::span<const Point2> sample, const ProximityMapSpec& spec, EtaMode mode) {
  require_analytic(spec);
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "active set of an empty sample");
  std::vector<std::size_t> cand;
  if (mode == EtaMode::Extrema) {
    cand = edge_extrema(sample, spec.triangle()).distinct();
  } else {
    if (sample.size() > 20) throw Error(ErrorCode::TooLarge, "exhaustive active-set search is limited to 20 points");
    for (std::size_t i = 0; i < sample.size(); ++i) cand.push_back(i);
  }
  const Gamma1Region target = gamma1_set(sample, spec);
  auto same = [&](std::initializer_list<std::size_t> idx) {
    std::vector<Point2> sub;
    for (std::size_t i : idx) sub.push_back(sample[i]);
    return gamma1_equal(gamma1_set(sub, spec), target);
  };

  ActiveSetResult res;
  std::vector<Point2> sub;
  for (std::size_t k = 1; k <= cand.size() && res.eta == 0; ++k) {
    for_each_combination(cand.size(), k, [&](const std::vector<std::size_t>& idx) {
      sub.clear();
      for (std::size_t i : idx) sub.push_back(sample[cand[i]]);
      if (!gamma1_equal(gamma1_set(sub, spec), target)) return false;
      res.eta = k;
      for (std::size_t i : idx) res.witness.push_back(cand[i]);
      return true;
    });
  }
  if (res.eta == 0) throw Error(ErrorCode::InvalidArgument, "no active subset reproduces the sample region");
  if (mode == EtaMode::Exhaustive || res.eta == 1) return res;

  // The extrema always form an active set, but when a piece of the region is
  // empty a single non-extremal point can stand in for two extrema.
  for (std::size_t i = 0; i < sample.size(); ++i)
    if (same({i})) return {1, {i}};
  if (res.eta == 2) return res;

  // Three distinct extrema, each needed among them. Point x can replace the
  // extremum of edge j iff swapping it in keeps the region; a pair must cover
  // all three edges this way.
  const std::array<std::size_t, 3> e{cand[0], cand[1], cand[2]};
  std::vector<unsigned> mask(sample.size(), 0);
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (int j = 0; j < 3; ++j)
      if (i == e[j] || same({e[(j + 1) % 3], e[(j + 2) % 3], i})) mask[i] |= 1u << j;
  for (std::size_t a = 0; a < sample.size(); ++a)
    for (std::size_t b = a + 1; b < sample.size(); ++b)
      if ((mask[a] | mask[b]) == 7u && same({a, b})) return {2, {a, b}};
  return res;
}

bool gamma1_predicate(Point2 z, std::span<const Point2> sample, const ProximityMapSpec& spec) {
  if (!spec.in_domain(z)) return false;
  for (const Point2& x : sample)
    if (!contains(spec, z, x)) return false;
  return true;
}

GridComparison compare_gamma1_grid(std::span<const Point2> sample, const ProximityMapSpec& spec,
                                   const Gamma1Region& g, int res) {
  const Triangle& T = spec.triangle();
  const double x0 = std::min({T.v1.x, T.v2.x, T.v3.x}), x1 = std::max({T.v1.x, T.v2.x, T.v3.x});
  const double y0 = std::min({T.v1.y, T.v2.y, T.v3.y}), y1 = std::max({T.v1.y, T.v2.y, T.v3.y});
  const double hx = (x1 - x0) / res, hy = (y1 - y0) / res;
  const double reach = std::hypot(hx, hy);
  GridComparison out;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const Point2 z{x0 + (i + 0.5) * hx, y0 + (j + 0.5) * hy};
      if (!T.contains(z, 0.0)) continue;
      ++out.nodes;
      const bool pred = gamma1_predicate(z, sample, spec);
      const bool poly = g.contains(z, 1e-12 * T.diameter());
      if (pred == poly) continue;
      ++out.mismatches;
      double d = std::numeric_limits<double>::infinity();
      if (g.kind == RegionKind::SinglePoint) d = distance(z, g.point);
      for (const auto& p : g.pieces)
        if (!p.empty()) d = std::min(d, p.boundary_distance(z));
      if (d > reach) ++out.far_mismatches;
    }
  }
  return out;
}

double gamma1_grid_area(std::span<const Point2> sample, const ProximityMapSpec& spec, int res) {
  const Triangle& T = spec.triangle();
  const double x0 = std::min({T.v1.x, T.v2.x, T.v3.x}), x1 = std::max({T.v1.x, T.v2.x, T.v3.x});
  const double y0 = std::min({T.v1.y, T.v2.y, T.v3.y}), y1 = std::max({T.v1.y, T.v2.y, T.v3.y});
  const double hx = (x1 - x0) / res, hy = (y1 - y0) / res;
  const int w = res + 1;
  std::vector<char> node(static_cast<std::size_t>(w) * w);
  for (int i = 0; i <= res; ++i)
    for (int j = 0; j <= res; ++j)
      node[static_cast<std::size_t>(i) * w + j] = gamma1_predicate({x0 + i * hx, y0 + j * hy}, sample, spec);
  constexpr int kSub = 4;
  double area = 0.0;
  for (int i = 0; i < res; ++i) {
    for (int j = 0; j < res; ++j) {
      const int c = node[static_cast<std::size_t>(i) * w + j] + node[static_cast<std::size_t>(i + 1) * w + j] +
                    node[static_cast<std::size_t>(i) * w + j + 1] + node[static_cast<std::size_t>(i + 1) * w + j + 1];
      if (c == 0) continue;
      if (c == 4) {
        area += hx * hy;
        continue;
      }
      int hits = 0;
      for (int a = 0; a < kSub; ++a)
        for (int b = 0; b < kSub; ++b)
          hits += gamma1_predicate({x0 + (i + (a + 0.5) / kSub) * hx, y0 + (j + (b + 0.5) / kSub) * hy}, sample, spec);
      area += hx * hy * hits / (kSub * kSub);
    }
  }
  return area;
}

Interval gamma1_interval_1d(std::span<const double> sample) {
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "region of an empty sample");
  double lo = 1.0, hi = 0.0;
  for (double x : sample) {
    if (!(x > 0.0 && x < 1.0)) throw Error(ErrorCode::OutsideDomain, "one-dimensional sample must lie in (0,1)");
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {hi / 2.0, (1.0 + lo) / 2.0};
}

std::vector<Rect> gamma2_region_1d(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  std::vector<Rect> out;
  const std::size_t n = sample.size();
  for (std::size_t k = 1; k < n; ++k)
    out.push_back({sample[k - 1] / 2.0, sample[n - 1] / 2.0, (1.0 + sample[0]) / 2.0, (1.0 + sample[k]) / 2.0});
  return out;
}

std::size_t eta_value_1d(std::span<const double> sample) {
  if (sample.empty()) throw Error(ErrorCode::InvalidArgument, "active set of an empty sample");
  const auto [lo, hi] = std::minmax_element(sample.begin(), sample.end());
  return *lo == *hi ? 1 : 2;
}

bool gamma_k_membership(std::span<const Point2> tuple, std::span<const Point2> sample,
                        const ProximityMapSpec& spec) {
  const std::size_t k = tuple.size();
  if (k == 0 || k > 16) throw Error(ErrorCode::TooLarge, "tuple size must be between 1 and 16");
  if (sample.size() > 64) throw Error(ErrorCode::TooLarge, "sample too large for tuple membership");
  for (const Point2& z : tuple)
    if (!spec.in_domain(z)) return false;

  const std::uint64_t all = sample.size() == 64 ? ~0ull : (1ull << sample.size()) - 1;
  std::vector<std::uint64_t> cover(k, 0);
  for (std::size_t t = 0; t < k; ++t)
    for (std::size_t s = 0; s < sample.size(); ++s)
      if (contains(spec, tuple[t], sample[s])) cover[t] |= 1ull << s;

  const std::uint32_t full = (1u << k) - 1;
  std::vector<signed char> memo(full + 1, -1);
  std::function<bool(std::uint32_t)> member = [&](std::uint32_t mask) -> bool {
    if (memo[mask] >= 0) return memo[mask];
    std::uint64_t cov = 0;
    for (std::size_t t = 0; t < k; ++t)
      if (mask >> t & 1u) cov |= cover[t];
    bool ok = cov == all;
    for (std::uint32_t sub = (mask - 1) & mask; ok && sub != 0; sub = (sub - 1) & mask)
      if (member(sub)) ok = false;
    memo[mask] = ok;
    return ok;
  };
  return member(full);
}

bool gamma2_via_partitions(Point2 a, Point2 b, std::span<const Point2> sample, const ProximityMapSpec& spec) {
  const std::size_t n = sample.size();
  if (n < 2 || n > 20) throw Error(ErrorCode::TooLarge, "partition check needs 2..20 sample points");
  if (!spec.in_domain(a) || !spec.in_domain(b)) return false;
  if (gamma1_predicate(a, sample, spec) || gamma1_predicate(b, sample, spec)) return false;
  std::uint32_t ca = 0, cb = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (contains(spec, a, sample[s])) ca |= 1u << s;
    if (contains(spec, b, sample[s])) cb |= 1u << s;
  }
  const std::uint32_t full = (1u << n) - 1;
  for (std::uint32_t block = 1; block < full; ++block)
    if ((block & ca) == block && ((full ^ block) & cb) == (full ^ block)) return true;
  return false;
}

std::size_t smallest_gamma_k(std::span<const Point2> sample, const ProximityMapSpec& spec) {
  const std::size_t n = sample.size();
  if (n == 0) return 0;
  std::vector<Point2> tuple;
  for (std::size_t k = 1; k <= n; ++k) {
    const bool found = for_each_combination(n, k, [&](const std::vector<std::size_t>& idx) {
      tuple.clear();
      for (std::size_t i : idx) tuple.push_back(sample[i]);
      return gamma_k_membership(tuple, sample, spec);
    });
    if (found) return k;
  }
  return n;
}

}  // namespace pcd
