#include "pcd/pcd.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "pcd/digraph.hpp"
#include "pcd/error.hpp"
#include "pcd/gamma.hpp"
#include "pcd/proximity.hpp"
#include "pcd/sim.hpp"
#include "pcd/svg.hpp"

struct pcd_map {
  pcd::ProximityMapSpec spec;
};

struct pcd_digraph {
  pcd::PcdDigraph d;
  std::string family;
};

struct pcd_gamma1 {
  pcd::Gamma1Region g;
};

namespace {

thread_local std::string g_last_error;

pcd_status fail(pcd_status s, const char* msg) {
  g_last_error = msg;
  return s;
}

pcd_status from_code(pcd::ErrorCode c) {
  switch (c) {
    case pcd::ErrorCode::InvalidArgument: return PCD_ERR_INVALID;
    case pcd::ErrorCode::Degenerate: return PCD_ERR_DEGENERATE;
    case pcd::ErrorCode::OutsideDomain: return PCD_ERR_OUTSIDE;
    case pcd::ErrorCode::TooLarge: return PCD_ERR_TOO_LARGE;
    case pcd::ErrorCode::Io: return PCD_ERR_IO;
  }
  return PCD_ERR_INTERNAL;
}

template <class F>
pcd_status guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return PCD_OK;
  } catch (const pcd::Error& e) {
    return fail(from_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(PCD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PCD_ERR_INTERNAL, e.what());
  }
}

pcd::Point2 to_point(pcd_point p) { return {p.x, p.y}; }
pcd_point from_point(pcd::Point2 p) { return {p.x, p.y}; }

pcd::Triangle to_triangle(const pcd_triangle* t) {
  if (!t) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "null triangle");
  return {to_point(t->v[0]), to_point(t->v[1]), to_point(t->v[2])};
}

pcd::CenterSelector to_center(const pcd_center* c) {
  if (!c) return pcd::CenterSelector::centroid();
  switch (c->kind) {
    case PCD_CENTER_CENTROID: return pcd::CenterSelector::centroid();
    case PCD_CENTER_CIRCUMCENTER: return pcd::CenterSelector::circumcenter();
    case PCD_CENTER_INCENTER: return pcd::CenterSelector::incenter();
    case PCD_CENTER_CUSTOM: return pcd::CenterSelector::at(to_point(c->custom));
  }
  throw pcd::Error(pcd::ErrorCode::InvalidArgument, "unknown center kind");
}

std::vector<pcd::Point2> to_points(const pcd_point* pts, size_t n) {
  if (n > 0 && !pts) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "null point array");
  std::vector<pcd::Point2> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = to_point(pts[i]);
  return v;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <class T>
void require(const T* p, const char* what) {
  if (!p) throw pcd::Error(pcd::ErrorCode::InvalidArgument, std::string("null ") + what);
}

std::string param_string(double v) {
  if (std::isinf(v)) return "inf";
  if (std::isnan(v)) return "";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

extern "C" {

const char* pcd_last_error(void) { return g_last_error.c_str(); }

void pcd_string_free(char* s) { std::free(s); }

pcd_status pcd_basic_triangle(double c1, double c2, pcd_triangle* out) {
  return guarded([&] {
    require(out, "output");
    const pcd::Triangle t = pcd::basic_triangle({c1, c2});
    *out = {{from_point(t.v1), from_point(t.v2), from_point(t.v3)}};
  });
}

void pcd_equilateral_triangle(pcd_triangle* out) {
  if (!out) return;
  const pcd::Triangle t = pcd::equilateral_triangle();
  *out = {{from_point(t.v1), from_point(t.v2), from_point(t.v3)}};
}

pcd_status pcd_triangle_check(const pcd_triangle* t) {
  return guarded([&] {
    const pcd::Triangle tri = to_triangle(t);
    pcd::make_triangle(tri.v1, tri.v2, tri.v3);
  });
}

pcd_status pcd_triangle_contains(const pcd_triangle* t, pcd_point p, int* out) {
  return guarded([&] {
    require(out, "output");
    const pcd::Triangle tri = to_triangle(t);
    *out = pcd::make_triangle(tri.v1, tri.v2, tri.v3).contains(to_point(p)) ? 1 : 0;
  });
}

pcd_status pcd_triangle_area(const pcd_triangle* t, double* out) {
  return guarded([&] {
    require(out, "output");
    const pcd::Triangle tri = to_triangle(t);
    *out = pcd::make_triangle(tri.v1, tri.v2, tri.v3).area();
  });
}

pcd_status pcd_map_pe(const pcd_triangle* t, double r, const pcd_center* center, pcd_map** out) {
  return guarded([&] {
    require(out, "output");
    *out = new pcd_map{pcd::ProximityMapSpec::pe(to_triangle(t), r, to_center(center))};
  });
}

pcd_status pcd_map_cs(const pcd_triangle* t, double tau, const pcd_center* center, pcd_map** out) {
  return guarded([&] {
    require(out, "output");
    *out = new pcd_map{pcd::ProximityMapSpec::cs(to_triangle(t), tau, to_center(center))};
  });
}

pcd_status pcd_map_spherical(const pcd_triangle* t, pcd_map** out) {
  return guarded([&] {
    require(out, "output");
    *out = new pcd_map{pcd::ProximityMapSpec::spherical(to_triangle(t))};
  });
}

pcd_status pcd_map_arcslice(const pcd_triangle* t, pcd_map** out) {
  return guarded([&] {
    require(out, "output");
    *out = new pcd_map{pcd::ProximityMapSpec::arc_slice(to_triangle(t))};
  });
}

pcd_status pcd_map_interval(const double* ys, size_t n, pcd_map** out) {
  return guarded([&] {
    require(out, "output");
    if (n > 0) require(ys, "targets");
    *out = new pcd_map{pcd::ProximityMapSpec::interval_1d(std::vector<double>(ys, ys + n))};
  });
}

void pcd_map_free(pcd_map* m) { delete m; }

pcd_status pcd_map_contains(const pcd_map* m, pcd_point x, pcd_point y, int* out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    *out = pcd::contains(m->spec, to_point(x), to_point(y)) ? 1 : 0;
  });
}

pcd_status pcd_map_triangle(const pcd_map* m, pcd_triangle* out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    if (!m->spec.has_triangle()) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "map has no triangle");
    const pcd::Triangle& t = m->spec.triangle();
    *out = {{from_point(t.v1), from_point(t.v2), from_point(t.v3)}};
  });
}

pcd_status pcd_map_center(const pcd_map* m, pcd_point* out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    *out = from_point(m->spec.partition().M);
  });
}

int pcd_map_kappa(const pcd_map* m) {
  if (!m) return 0;
  const pcd::Kappa k = pcd::kappa_upper_bound(m->spec);
  if (k.kind == pcd::KappaKind::Finite) return static_cast<int>(k.value);
  return k.kind == pcd::KappaKind::Unbounded ? -1 : 0;
}

pcd_status pcd_digraph_build(const pcd_map* m, const pcd_point* pts, size_t n, pcd_digraph** out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    *out = new pcd_digraph{pcd::build_pcd(to_points(pts, n), m->spec), m->spec.family_name()};
  });
}

void pcd_digraph_free(pcd_digraph* d) { delete d; }

size_t pcd_digraph_order(const pcd_digraph* d) { return d ? d->d.n : 0; }

int pcd_digraph_kappa(const pcd_digraph* d) {
  if (!d) return 0;
  if (d->family == "pe") return 3;
  if (d->family == "interval1d") return 2;
  return d->family == "cs" ? -1 : 0;
}

size_t pcd_digraph_arc_count(const pcd_digraph* d) { return d ? d->d.arcs.size() : 0; }

pcd_status pcd_digraph_arcs(const pcd_digraph* d, size_t* pairs, size_t cap) {
  return guarded([&] {
    require(d, "digraph");
    if (cap < d->d.arcs.size()) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "arc buffer too small");
    if (!d->d.arcs.empty()) require(pairs, "arc buffer");
    for (size_t k = 0; k < d->d.arcs.size(); ++k) {
      pairs[2 * k] = d->d.arcs[k].first;
      pairs[2 * k + 1] = d->d.arcs[k].second;
    }
  });
}

pcd_status pcd_digraph_domination(const pcd_digraph* d, size_t kmax, size_t* gamma, size_t* witness,
                                  size_t witness_cap, size_t* witness_len, int* exact) {
  return guarded([&] {
    require(d, "digraph");
    require(gamma, "output");
    const pcd::DominationResult r =
        pcd::domination_number(d->d, kmax == 0 ? std::nullopt : std::optional<std::size_t>(kmax));
    *gamma = r.gamma;
    if (exact) *exact = r.exact ? 1 : 0;
    if (witness_len) *witness_len = r.witness.size();
    if (witness) {
      if (witness_cap < r.witness.size()) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "witness buffer too small");
      for (size_t i = 0; i < r.witness.size(); ++i) witness[i] = r.witness[i];
    }
  });
}

pcd_status pcd_digraph_density(const pcd_digraph* d, double* out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "output");
    *out = pcd::arc_density(d->d);
  });
}

pcd_status pcd_digraph_to_json(const pcd_digraph* d, const pcd_map* m, uint64_t seed, int has_seed, char** out) {
  return guarded([&] {
    require(d, "digraph");
    require(out, "output");
    pcd::DigraphMeta meta;
    if (m) {
      meta.family = m->spec.family_name();
      meta.param = m->spec.param();
      meta.center = m->spec.center_name();
    } else {
      meta.param = std::nan("");
    }
    if (has_seed) meta.seed = seed;
    *out = dup_string(pcd::digraph_to_json(d->d, meta));
  });
}

pcd_status pcd_digraph_from_json(const char* text, pcd_digraph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "output");
    pcd::DigraphMeta meta;
    pcd::PcdDigraph d = pcd::digraph_from_json(text, &meta);
    *out = new pcd_digraph{std::move(d), meta.family};
  });
}

pcd_status pcd_gamma1_compute(const pcd_map* m, const pcd_point* pts, size_t n, pcd_gamma1** out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    *out = new pcd_gamma1{pcd::gamma1_set(to_points(pts, n), m->spec)};
  });
}

void pcd_gamma1_free(pcd_gamma1* g) { delete g; }

pcd_region_kind pcd_gamma1_kind(const pcd_gamma1* g) {
  if (!g) return PCD_REGION_EMPTY;
  switch (g->g.kind) {
    case pcd::RegionKind::Empty: return PCD_REGION_EMPTY;
    case pcd::RegionKind::SinglePoint: return PCD_REGION_POINT;
    case pcd::RegionKind::Polygon: return PCD_REGION_POLYGON;
  }
  return PCD_REGION_EMPTY;
}

double pcd_gamma1_area(const pcd_gamma1* g) { return g ? g->g.area() : 0.0; }

size_t pcd_gamma1_piece_size(const pcd_gamma1* g, int cell) {
  if (!g || cell < 0 || cell > 2) return 0;
  return g->g.pieces[cell].size();
}

pcd_status pcd_gamma1_piece(const pcd_gamma1* g, int cell, pcd_point* out, size_t cap) {
  return guarded([&] {
    require(g, "region");
    if (cell < 0 || cell > 2) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "cell index must be 0, 1 or 2");
    const auto& p = g->g.pieces[cell];
    if (cap < p.size()) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "vertex buffer too small");
    if (!p.empty()) require(out, "vertex buffer");
    for (size_t i = 0; i < p.size(); ++i) out[i] = from_point(p[i]);
  });
}

pcd_status pcd_gamma1_point(const pcd_gamma1* g, pcd_point* out) {
  return guarded([&] {
    require(g, "region");
    require(out, "output");
    if (g->g.kind != pcd::RegionKind::SinglePoint)
      throw pcd::Error(pcd::ErrorCode::InvalidArgument, "region is not a single point");
    *out = from_point(g->g.point);
  });
}

size_t pcd_gamma1_hull_size(const pcd_gamma1* g) { return g ? g->g.vertex_count() : 0; }

pcd_status pcd_svg_render(const pcd_map* m, const pcd_point* pts, size_t n, const pcd_gamma1* g, char** out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    *out = dup_string(pcd::render_svg(m->spec, to_points(pts, n), g ? &g->g : nullptr));
  });
}

pcd_status pcd_sample_uniform(const pcd_triangle* t, size_t n, uint64_t seed, pcd_point* out) {
  return guarded([&] {
    const pcd::Triangle tri = to_triangle(t);
    pcd::make_triangle(tri.v1, tri.v2, tri.v3);
    if (n > 0) require(out, "output");
    pcd::Rng rng = pcd::Rng::stream(seed, n, 0);
    const auto pts = pcd::sample_uniform_triangle(n, tri, rng);
    for (size_t i = 0; i < n; ++i) out[i] = from_point(pts[i]);
  });
}

pcd_status pcd_cs_construction(const pcd_map* m, size_t n, double eps, uint64_t seed, pcd_point* out) {
  return guarded([&] {
    require(m, "map");
    if (m->spec.kind() != pcd::FamilyKind::CS)
      throw pcd::Error(pcd::ErrorCode::InvalidArgument, "construction needs a central-similarity map");
    if (n > 0) require(out, "output");
    if (eps < 0 && n > 0) eps = pcd::default_construction_eps(n, m->spec.triangle(), m->spec.partition().M);
    pcd::Rng rng = pcd::Rng::stream(seed, n, 0);
    const auto pts = pcd::cs_gamma_n_construction(n, m->spec.triangle(), m->spec.partition().M, m->spec.tau(), eps,
                                                  &rng);
    for (size_t i = 0; i < n; ++i) out[i] = from_point(pts[i]);
  });
}

pcd_status pcd_cs_construction_default_eps(const pcd_map* m, size_t n, double* out) {
  return guarded([&] {
    require(m, "map");
    require(out, "output");
    *out = pcd::default_construction_eps(n, m->spec.triangle(), m->spec.partition().M);
  });
}

pcd_status pcd_simulate_csv(const char* estimator, const pcd_map* m, const size_t* n_grid, size_t n_count,
                            size_t replicates, uint64_t seed, unsigned threads, char** csv, double* rate) {
  return guarded([&] {
    require(estimator, "estimator");
    require(csv, "output");
    if (n_count > 0) require(n_grid, "sample sizes");
    const std::string name = estimator;
    const std::vector<std::size_t> grid(n_grid, n_grid + n_count);
    std::vector<pcd::Estimate> rows;
    std::string family, param, center;
    std::string main_stat;
    if (name == "interval-1d") {
      rows = pcd::run_1d(grid, replicates, seed, threads);
      family = "interval1d";
      center = "none";
      main_stat = "gamma1_length";
    } else {
      const pcd::Estimator est = pcd::parse_estimator(name);
      require(m, "map");
      pcd::SimConfig cfg{m->spec, grid, replicates, seed, est, threads};
      rows = pcd::run_simulation(cfg);
      family = m->spec.family_name();
      param = param_string(m->spec.param());
      center = m->spec.center_name();
      main_stat = est == pcd::Estimator::Gamma1Area ? "gamma1_area_abs"
                  : est == pcd::Estimator::EdgeDistance ? "edge_distance"
                  : est == pcd::Estimator::ArcDensity ? "arc_density"
                                                      : "";
    }
    std::ostringstream os;
    pcd::write_csv_header(os);
    pcd::write_csv_rows(os, rows, family, param, center, seed);
    if (rate) {
      *rate = std::nan("");
      std::vector<pcd::Estimate> series;
      for (const auto& r : rows)
        if (r.stat == main_stat) series.push_back(r);
      try {
        if (!series.empty()) *rate = pcd::fit_rate(series);
      } catch (const pcd::Error&) {
      }
    }
    *csv = dup_string(os.str());
  });
}

pcd_status pcd_fit_rate(const double* n, const double* mean, size_t count, double* slope) {
  return guarded([&] {
    require(slope, "output");
    if (count > 0) {
      require(n, "sizes");
      require(mean, "means");
    }
    std::vector<pcd::Estimate> series(count);
    for (size_t i = 0; i < count; ++i) {
      if (!(n[i] >= 1.0)) throw pcd::Error(pcd::ErrorCode::InvalidArgument, "sample sizes must be at least 1");
      series[i].n = static_cast<std::size_t>(n[i]);
      series[i].mean = mean[i];
    }
    *slope = pcd::fit_rate(series);
  });
}

}  // extern "C"
