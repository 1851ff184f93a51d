#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pcd/geom.hpp"
#include "pcd/proximity.hpp"

namespace pcd {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of the stream for replicate `rep` at sample size n:
/// splitmix64(splitmix64(splitmix64(master) + n) + rep).
std::uint64_t stream_seed(std::uint64_t master, std::uint64_t n, std::uint64_t rep);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  static Rng stream(std::uint64_t master, std::uint64_t n, std::uint64_t rep) {
    return Rng(stream_seed(master, n, rep));
  }

  /// Uniform on [0,1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  std::uint64_t next() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

/// n iid uniform points: v1 + u1 (v2 - v1) + u2 (v3 - v1), folded back when
/// u1 + u2 > 1.
std::vector<Point2> sample_uniform_triangle(std::size_t n, const Triangle& t, Rng& rng);

/// Rejection sampler for a density on the triangle; `bound` must dominate the
/// density everywhere on it.
std::vector<Point2> sample_rejection(std::size_t n, const Triangle& t, const std::function<double(Point2)>& density,
                                     double bound, Rng& rng);

std::vector<double> sample_uniform_unit(std::size_t n, Rng& rng);

enum class Estimator { EdgeDistance, Gamma1Area, DominationPmf, EtaPmf, ArcDensity, GammaEquals1Prob };

struct SimConfig {
  ProximityMapSpec spec;
  std::vector<std::size_t> n_grid;
  std::size_t replicates = 1000;
  std::uint64_t seed = 0;
  Estimator estimator = Estimator::EdgeDistance;
  unsigned threads = 1;
};

struct Estimate {
  std::string stat;
  std::size_t n = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::size_t replicates = 0;
};

/// Mean and standard error of per-replicate values, summed pairwise.
Estimate summarize(std::string stat, std::size_t n, std::span<const double> values);
double pairwise_sum(std::span<const double> v);

/// Runs fn(n, rep, rng) for every replicate with its own stream and keeps the
/// results in replicate order. Threads split the replicate range.
std::vector<std::vector<double>> run_replicates(std::size_t n, std::size_t replicates, std::uint64_t seed,
                                                unsigned threads,
                                                const std::function<std::vector<double>(Rng&)>& fn);

/// Rows, per n:
///  EdgeDistance      edge_distance (distance of the sample to the edge v1-v2)
///  Gamma1Area        gamma1_area_fraction, gamma1_area_abs
///  DominationPmf     domination_gamma_<k> for k = 1..max seen
///  EtaPmf            eta_<k> for k = 1..3, distinct_extrema_3
///  ArcDensity        arc_density
///  GammaEquals1Prob  gamma_eq_1
std::vector<Estimate> run_simulation(const SimConfig& cfg);

/// One-dimensional map with targets {0,1}: gamma1_length and
/// domination_gamma_le_2 (fraction of replicates with a dominating set of
/// size at most two).
std::vector<Estimate> run_1d(const std::vector<std::size_t>& n_grid, std::size_t replicates, std::uint64_t seed,
                             unsigned threads = 1);

/// Least-squares slope of log(mean) against log(n).
double fit_rate(std::span<const Estimate> series);

std::string estimator_name(Estimator e);
/// Accepts the names used on the command line (edge-distance, gamma1-area,
/// domination-pmf, eta-pmf, arc-density, gamma1-prob). Throws on others.
Estimator parse_estimator(const std::string& name);

void write_csv_header(std::ostream& os);
void write_csv_rows(std::ostream& os, std::span<const Estimate> rows, const std::string& family,
                    const std::string& param, const std::string& center, std::uint64_t seed);

}  // namespace pcd
