#include "pcd/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <thread>

#include "pcd/digraph.hpp"
#include "pcd/error.hpp"
#include "pcd/gamma.hpp"

namespace pcd {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::uint64_t n, std::uint64_t rep) {
  return splitmix64(splitmix64(splitmix64(master) + n) + rep);
}

std::vector<Point2> sample_uniform_triangle(std::size_t n, const Triangle& t, Rng& rng) {
  std::vector<Point2> pts;
  pts.reserve(n);
  const Point2 a = t.v2 - t.v1, b = t.v3 - t.v1;
  for (std::size_t i = 0; i < n; ++i) {
    double u1 = rng.uniform(), u2 = rng.uniform();
    if (u1 + u2 > 1.0) {
      u1 = 1.0 - u1;
      u2 = 1.0 - u2;
    }
    pts.push_back(t.v1 + u1 * a + u2 * b);
  }
  return pts;
}

std::vector<Point2> sample_rejection(std::size_t n, const Triangle& t, const std::function<double(Point2)>& density,
                                     double bound, Rng& rng) {
  if (!(bound > 0.0)) throw Error(ErrorCode::InvalidArgument, "rejection envelope must be positive");
  std::vector<Point2> pts;
  pts.reserve(n);
  while (pts.size() < n) {
    const Point2 p = sample_uniform_triangle(1, t, rng)[0];
    const double f = density(p);
    if (f > bound) throw Error(ErrorCode::InvalidArgument, "density exceeds the rejection envelope");
    if (rng.uniform() * bound < f) pts.push_back(p);
  }
  return pts;
}

std::vector<double> sample_uniform_unit(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform();
  return v;
}

double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t h = v.size() / 2;
  return pairwise_sum(v.subspan(0, h)) + pairwise_sum(v.subspan(h));
}

Estimate summarize(std::string stat, std::size_t n, std::span<const double> values) {
  Estimate e;
  e.stat = std::move(stat);
  e.n = n;
  e.replicates = values.size();
  if (values.empty()) return e;
  const double r = static_cast<double>(values.size());
  e.mean = pairwise_sum(values) / r;
  if (values.size() > 1) {
    std::vector<double> dev(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) dev[i] = (values[i] - e.mean) * (values[i] - e.mean);
    e.stderr_ = std::sqrt(pairwise_sum(dev) / (r - 1.0) / r);
  }
  return e;
}

std::vector<std::vector<double>> run_replicates(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                                unsigned threads,
                                                const std::function<std::vector<double>(Rng&)>& fn) {
  std::vector<std::vector<double>> out(replicates);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) {
      Rng rng = Rng::stream(seed, n, r);
      out[r] = fn(rng);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1 || replicates < 2) {
    work(0, replicates);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const std::size_t chunk = (replicates + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t lo = t * chunk, hi = std::min(replicates, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&, lo, hi, t] {
      try {
        work(lo, hi);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

namespace {

std::vector<double> column(const std::vector<std::vector<double>>& rows, std::size_t c) {
  std::vector<double> v(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) v[i] = rows[i][c];
  return v;
}

bool gamma_is_one(std::span<const Point2> sample, const ProximityMapSpec& spec) {
  std::vector<Point2> targets;
  if (spec.kind() == FamilyKind::PE || spec.kind() == FamilyKind::CS) {
    for (std::size_t i : edge_extrema(sample, spec.triangle()).distinct()) targets.push_back(sample[i]);
  } else {
    targets.assign(sample.begin(), sample.end());
  }
  for (const Point2& x : sample)
    if (gamma1_predicate(x, targets, spec)) return true;
  return false;
}

std::optional<std::size_t> domination_cap(const ProximityMapSpec& spec) {
  const Kappa k = kappa_upper_bound(spec);
  if (k.kind == KappaKind::Finite) return k.value;
  return std::nullopt;
}

}  // namespace

std::vector<Estimate> run_simulation(const SimConfig& cfg) {
  const ProximityMapSpec& spec = cfg.spec;
  if (cfg.replicates == 0) throw Error(ErrorCode::InvalidArgument, "replicates must be at least 1");
  if (!spec.has_triangle()) throw Error(ErrorCode::InvalidArgument, "simulation needs a triangle context");
  const Triangle& T = spec.triangle();
  const double area = T.area();
  std::vector<Estimate> rows;

  for (std::size_t n : cfg.n_grid) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample size must be at least 1");
    auto draw = [&](Rng& rng) { return sample_uniform_triangle(n, T, rng); };
    std::function<std::vector<double>(Rng&)> fn;
    switch (cfg.estimator) {
      case Estimator::EdgeDistance:
        fn = [&](Rng& rng) {
          const auto s = draw(rng);
          return std::vector<double>{edge_extrema(s, T).dist[2]};
        };
        break;
      case Estimator::Gamma1Area:
        fn = [&](Rng& rng) {
          const auto s = draw(rng);
          const double a = gamma1_via_extrema(s, spec).area();
          return std::vector<double>{a / area, a};
        };
        break;
      case Estimator::DominationPmf:
        if (!domination_cap(spec) && n > 24)
          throw Error(ErrorCode::TooLarge, "domination pmf for this family is limited to n <= 24");
        fn = [&](Rng& rng) {
          const auto s = draw(rng);
          const DominationResult d = domination_number(build_pcd(s, spec), domination_cap(spec));
          return std::vector<double>{static_cast<double>(d.gamma)};
        };
        break;
      case Estimator::EtaPmf:
        fn = [&](Rng& rng) {
          const auto s = draw(rng);
          const ActiveSetResult a = eta_value(s, spec);
          const double distinct = static_cast<double>(edge_extrema(s, T).distinct().size());
          return std::vector<double>{static_cast<double>(a.eta), distinct};
        };
        break;
      case Estimator::ArcDensity:
        if (n < 2) throw Error(ErrorCode::InvalidArgument, "arc density needs n >= 2");
        fn = [&](Rng& rng) {
          const auto s = draw(rng);
          return std::vector<double>{arc_density(build_pcd(s, spec))};
        };
        break;
      case Estimator::GammaEquals1Prob:
        fn = [&](Rng& rng) {
          const auto s = draw(rng);
          return std::vector<double>{gamma_is_one(s, spec) ? 1.0 : 0.0};
        };
        break;
    }
    const auto res = run_replicates(n, cfg.replicates, cfg.seed, cfg.threads, fn);

    switch (cfg.estimator) {
      case Estimator::EdgeDistance:
        rows.push_back(summarize("edge_distance", n, column(res, 0)));
        break;
      case Estimator::Gamma1Area:
        rows.push_back(summarize("gamma1_area_fraction", n, column(res, 0)));
        rows.push_back(summarize("gamma1_area_abs", n, column(res, 1)));
        break;
      case Estimator::DominationPmf: {
        const auto g = column(res, 0);
        const auto kmax = static_cast<std::size_t>(*std::max_element(g.begin(), g.end()));
        for (std::size_t k = 1; k <= kmax; ++k) {
          std::vector<double> ind(g.size());
          for (std::size_t i = 0; i < g.size(); ++i) ind[i] = g[i] == static_cast<double>(k) ? 1.0 : 0.0;
          rows.push_back(summarize("domination_gamma_" + std::to_string(k), n, ind));
        }
        break;
      }
      case Estimator::EtaPmf: {
        const auto eta = column(res, 0), distinct = column(res, 1);
        for (int k = 1; k <= 3; ++k) {
          std::vector<double> ind(eta.size());
          for (std::size_t i = 0; i < eta.size(); ++i) ind[i] = eta[i] == k ? 1.0 : 0.0;
          rows.push_back(summarize("eta_" + std::to_string(k), n, ind));
        }
        std::vector<double> ind(distinct.size());
        for (std::size_t i = 0; i < distinct.size(); ++i) ind[i] = distinct[i] == 3.0 ? 1.0 : 0.0;
        rows.push_back(summarize("distinct_extrema_3", n, ind));
        break;
      }
      case Estimator::ArcDensity:
        rows.push_back(summarize("arc_density", n, column(res, 0)));
        break;
      case Estimator::GammaEquals1Prob:
        rows.push_back(summarize("gamma_eq_1", n, column(res, 0)));
        break;
    }
  }
  return rows;
}

std::vector<Estimate> run_1d(const std::vector<std::size_t>& n_grid, std::size_t replicates, std::uint64_t seed,
                             unsigned threads) {
  if (replicates == 0) throw Error(ErrorCode::InvalidArgument, "replicates must be at least 1");
  const ProximityMapSpec spec = ProximityMapSpec::interval_1d({0.0, 1.0});
  std::vector<Estimate> rows;
  for (std::size_t n : n_grid) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "sample size must be at least 1");
    const auto res = run_replicates(n, replicates, seed, threads, [&](Rng& rng) {
      const auto xs = sample_uniform_unit(n, rng);
      const Interval g = gamma1_interval_1d(xs);
      std::vector<Point2> pts;
      for (double x : xs) pts.push_back({x, 0.0});
      const DominationResult d = domination_number(build_pcd(pts, spec), 2);
      return std::vector<double>{g.hi - g.lo, d.exact ? 1.0 : 0.0};
    });
    rows.push_back(summarize("gamma1_length", n, column(res, 0)));
    rows.push_back(summarize("domination_gamma_le_2", n, column(res, 1)));
  }
  return rows;
}

double fit_rate(std::span<const Estimate> series) {
  std::set<std::size_t> ns;
  for (const Estimate& e : series) {
    if (!(e.mean > 0.0)) throw Error(ErrorCode::InvalidArgument, "rate fit needs positive means");
    if (e.n == 0) throw Error(ErrorCode::InvalidArgument, "rate fit needs positive sample sizes");
    ns.insert(e.n);
  }
  if (ns.size() < 4) throw Error(ErrorCode::InvalidArgument, "rate fit needs at least four distinct sample sizes");
  double sx = 0, sy = 0;
  const double k = static_cast<double>(series.size());
  for (const Estimate& e : series) {
    sx += std::log(static_cast<double>(e.n));
    sy += std::log(e.mean);
  }
  const double mx = sx / k, my = sy / k;
  double sxy = 0, sxx = 0;
  for (const Estimate& e : series) {
    const double dx = std::log(static_cast<double>(e.n)) - mx;
    sxy += dx * (std::log(e.mean) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

std::string estimator_name(Estimator e) {
  switch (e) {
    case Estimator::EdgeDistance: return "edge-distance";
    case Estimator::Gamma1Area: return "gamma1-area";
    case Estimator::DominationPmf: return "domination-pmf";
    case Estimator::EtaPmf: return "eta-pmf";
    case Estimator::ArcDensity: return "arc-density";
    case Estimator::GammaEquals1Prob: return "gamma1-prob";
  }
  return "unknown";
}

Estimator parse_estimator(const std::string& name) {
  for (Estimator e : {Estimator::EdgeDistance, Estimator::Gamma1Area, Estimator::DominationPmf, Estimator::EtaPmf,
                      Estimator::ArcDensity, Estimator::GammaEquals1Prob})
    if (estimator_name(e) == name) return e;
  throw Error(ErrorCode::InvalidArgument, "unknown estimator '" + name + "'");
}

void write_csv_header(std::ostream& os) { os << "estimator,family,param,center,n,replicates,mean,stderr,seed\n"; }

void write_csv_rows(std::ostream& os, std::span<const Estimate> rows, const std::string& family,
                    const std::string& param, const std::string& center, std::uint64_t seed) {
  char buf[64];
  for (const Estimate& e : rows) {
    os << e.stat << ',' << family << ',' << param << ',' << center << ',' << e.n << ',' << e.replicates << ',';
    std::snprintf(buf, sizeof buf, "%.12g", e.mean);
    os << buf << ',';
    std::snprintf(buf, sizeof buf, "%.12g", e.stderr_);
    os << buf << ',' << seed << '\n';
  }
}

}  // namespace pcd
