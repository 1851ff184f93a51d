// pcd: sampling, digraphs, first-order regions and simulation campaigns for
// proximity catch digraphs. Talks to the library through its C interface.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pcd/pcd.h"

namespace {

constexpr int kExitBadInput = 2;
constexpr int kExitOutside = 3;

struct Failure {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& msg) { throw Failure{code, msg}; }

void check(pcd_status s) {
  if (s == PCD_OK) return;
  die(s == PCD_ERR_INTERNAL || s == PCD_ERR_IO ? 1 : kExitBadInput, pcd_last_error());
}

struct MapDeleter {
  void operator()(pcd_map* m) const { pcd_map_free(m); }
};
struct DigraphDeleter {
  void operator()(pcd_digraph* d) const { pcd_digraph_free(d); }
};
struct Gamma1Deleter {
  void operator()(pcd_gamma1* g) const { pcd_gamma1_free(g); }
};
struct StringDeleter {
  void operator()(char* s) const { pcd_string_free(s); }
};
using MapPtr = std::unique_ptr<pcd_map, MapDeleter>;
using DigraphPtr = std::unique_ptr<pcd_digraph, DigraphDeleter>;
using Gamma1Ptr = std::unique_ptr<pcd_gamma1, Gamma1Deleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::vector<double> parse_numbers(const std::string& s, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end == item.c_str() || *end != '\0' || !std::isfinite(v))
      die(kExitBadInput, "cannot parse " + what + " '" + s + "'");
    out.push_back(v);
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// shortest round-trip text, with a trailing .0 on integral values
std::string fmt_short(double v) {
  char buf[40];
  for (int p = 1; p <= 17; ++p) {
    std::snprintf(buf, sizeof buf, "%.*g", p, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  std::string s = buf;
  if (s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

struct TriangleOpts {
  std::string triangle;
  std::string basic;
  bool equilateral = false;

  void add(CLI::App* cmd) {
    auto* t = cmd->add_option("--triangle", triangle, "Vertices x1,y1,x2,y2,x3,y3");
    auto* b = cmd->add_option("--basic", basic, "Basic triangle c1,c2");
    auto* e = cmd->add_flag("--equilateral", equilateral, "Unit equilateral triangle (default)");
    t->excludes(b)->excludes(e);
    b->excludes(e);
  }

  pcd_triangle resolve() const {
    pcd_triangle t;
    if (!triangle.empty()) {
      const auto v = parse_numbers(triangle, "triangle");
      if (v.size() != 6) die(kExitBadInput, "--triangle needs six numbers");
      for (int i = 0; i < 3; ++i) t.v[i] = {v[2 * i], v[2 * i + 1]};
    } else if (!basic.empty()) {
      const auto v = parse_numbers(basic, "basic triangle");
      if (v.size() != 2) die(kExitBadInput, "--basic needs two numbers");
      if (pcd_basic_triangle(v[0], v[1], &t) != PCD_OK) die(kExitBadInput, pcd_last_error());
    } else {
      pcd_equilateral_triangle(&t);
    }
    if (pcd_triangle_check(&t) != PCD_OK) die(kExitBadInput, std::string("bad triangle: ") + pcd_last_error());
    return t;
  }
};

struct MapOpts {
  std::string family;
  double r = 2.0;
  std::string r_text;
  double tau = 1.0;
  std::string center = "centroid";

  void add(CLI::App* cmd, bool required_family, const std::vector<std::string>& families) {
    auto* f = cmd->add_option("--family", family, "Map family")->check(CLI::IsMember(families));
    if (required_family) f->required();
    cmd->add_option("--r", r_text, "Expansion parameter of the PE map (number or inf)");
    cmd->add_option("--tau", tau, "Similarity parameter of the CS map");
    cmd->add_option("--center", center, "centroid | circumcenter | incenter | x,y");
  }

  pcd_center resolve_center() const {
    pcd_center c{PCD_CENTER_CENTROID, {0, 0}};
    if (center == "centroid") return c;
    if (center == "circumcenter") {
      c.kind = PCD_CENTER_CIRCUMCENTER;
    } else if (center == "incenter") {
      c.kind = PCD_CENTER_INCENTER;
    } else {
      const auto v = parse_numbers(center, "center");
      if (v.size() != 2) die(kExitBadInput, "--center needs a name or x,y");
      c.kind = PCD_CENTER_CUSTOM;
      c.custom = {v[0], v[1]};
    }
    return c;
  }

  MapPtr create(const pcd_triangle& t) const {
    pcd_map* m = nullptr;
    const pcd_center c = resolve_center();
    pcd_status s = PCD_ERR_INVALID;
    if (family == "pe") {
      double rv = r;
      if (r_text == "inf" || r_text == "infinity")
        rv = INFINITY;
      else if (!r_text.empty())
        rv = parse_numbers(r_text, "--r").at(0);
      s = pcd_map_pe(&t, rv, &c, &m);
    } else if (family == "cs") {
      s = pcd_map_cs(&t, tau, &c, &m);
    } else if (family == "spherical") {
      s = pcd_map_spherical(&t, &m);
    } else if (family == "arcslice") {
      s = pcd_map_arcslice(&t, &m);
    }
    if (s != PCD_OK) die(kExitBadInput, pcd_last_error());
    return MapPtr(m);
  }
};

std::vector<pcd_point> read_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) die(kExitBadInput, "cannot open points file '" + path + "'");
  std::vector<pcd_point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line.find_first_of("0123456789") == std::string::npos) continue;  // header
    const auto v = parse_numbers(line, "line " + std::to_string(lineno));
    if (v.size() != 2) die(kExitBadInput, "line " + std::to_string(lineno) + " needs two numbers");
    pts.push_back({v[0], v[1]});
  }
  return pts;
}

void require_inside(const pcd_triangle& t, const std::vector<pcd_point>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    int inside = 0;
    check(pcd_triangle_contains(&t, pts[i], &inside));
    if (!inside) die(kExitOutside, "point at row " + std::to_string(i) + " lies outside the triangle");
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) die(1, "cannot write '" + path + "'");
}

std::string points_csv(const std::vector<pcd_point>& pts) {
  std::string s = "x,y\n";
  for (const auto& p : pts) s += fmt(p.x) + "," + fmt(p.y) + "\n";
  return s;
}

std::string summary_line(const pcd_digraph* d, int kappa) {
  const std::size_t n = pcd_digraph_order(d);
  std::string line;
  if (n == 0) return "gamma=0";
  std::size_t gamma = 0;
  int exact = 1;
  const std::size_t kmax = kappa > 0 ? static_cast<std::size_t>(kappa) : 0;
  check(pcd_digraph_domination(d, kmax, &gamma, nullptr, 0, nullptr, &exact));
  line = "gamma=" + std::to_string(gamma);
  if (!exact) line = "gamma>=" + std::to_string(gamma);
  if (n >= 2) {
    double rho = 0;
    check(pcd_digraph_density(d, &rho));
    line += " rho=" + fmt_short(rho);
  }
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proximity catch digraphs: sampling, digraphs, regions and simulations"};
  app.set_config("--config", "", "Read options from a TOML/INI file");
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  auto add_seed = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--seed", seed, "Master seed")->envname("PCD_SEED");
    if (required) o->required();
    return o;
  };

  // sample
  auto* sample = app.add_subcommand("sample", "Draw uniform points in a triangle");
  TriangleOpts sample_tri;
  sample_tri.add(sample);
  std::size_t sample_n = 0;
  std::string sample_out;
  sample->add_option("--n", sample_n, "Number of points")->required();
  add_seed(sample, false);
  sample->add_option("--out", sample_out, "Output CSV (default stdout)");

  // digraph
  auto* digraph = app.add_subcommand("digraph", "Build the digraph of a point set");
  TriangleOpts dg_tri;
  dg_tri.add(digraph);
  MapOpts dg_map;
  dg_map.add(digraph, false, {"pe", "cs", "spherical", "arcslice"});
  std::string dg_points, dg_out, dg_json_in;
  digraph->add_option("--points-file", dg_points, "CSV of x,y rows");
  digraph->add_option("--out", dg_out, "Write the digraph as JSON");
  digraph->add_option("--from-json", dg_json_in, "Summarize a digraph JSON written earlier");
  auto* dg_seed = add_seed(digraph, false);

  // gamma1
  auto* gamma1 = app.add_subcommand("gamma1", "First-order region of a point set");
  TriangleOpts g1_tri;
  g1_tri.add(gamma1);
  MapOpts g1_map;
  g1_map.add(gamma1, true, {"pe", "cs"});
  std::string g1_points, g1_svg;
  gamma1->add_option("--points-file", g1_points, "CSV of x,y rows")->required();
  gamma1->add_option("--svg", g1_svg, "Write an SVG figure");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaign");
  TriangleOpts sim_tri;
  sim_tri.add(simulate);
  MapOpts sim_map;
  sim_map.family = "pe";
  sim_map.add(simulate, false, {"pe", "cs", "spherical", "arcslice"});
  std::string sim_est, sim_grid, sim_out;
  std::size_t sim_reps = 1000;
  unsigned sim_threads = 1;
  bool sim_rate = false;
  simulate->add_option("--estimator", sim_est,
                       "edge-distance | gamma1-area | domination-pmf | eta-pmf | arc-density | gamma1-prob | interval-1d")
      ->required();
  simulate->add_option("--n-grid", sim_grid, "Comma separated sample sizes")->required();
  simulate->add_option("--replicates", sim_reps, "Replicates per sample size");
  simulate->add_option("--threads", sim_threads, "Worker threads");
  simulate->add_flag("--fit-rate", sim_rate, "Print the log-log slope of the main statistic");
  simulate->add_option("--out", sim_out, "Output CSV (default stdout)");
  add_seed(simulate, true);

  // construct
  auto* construct = app.add_subcommand("construct", "Point sets with prescribed domination number");
  TriangleOpts con_tri;
  con_tri.add(construct);
  bool con_gamma_n = false, con_perturb = false;
  std::size_t con_n = 1;
  double con_tau = 1.0, con_eps = -1.0;
  std::string con_center = "centroid", con_out;
  construct->add_flag("--gamma-n", con_gamma_n, "Central-similarity set with domination number n")->required();
  construct->add_option("--n", con_n, "Number of points")->required();
  construct->add_option("--tau", con_tau, "Similarity parameter");
  construct->add_option("--center", con_center, "centroid | circumcenter | incenter | x,y");
  construct->add_flag("--perturb", con_perturb, "Jitter each point inside a small disk");
  construct->add_option("--eps", con_eps, "Jitter radius relative to the base edge");
  construct->add_option("--out", con_out, "Output CSV (default stdout)");
  add_seed(construct, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*sample) {
      const pcd_triangle t = sample_tri.resolve();
      std::vector<pcd_point> pts(sample_n);
      check(pcd_sample_uniform(&t, sample_n, seed, pts.data()));
      write_text(sample_out, points_csv(pts));
    } else if (*digraph) {
      if (!dg_json_in.empty()) {
        std::ifstream in(dg_json_in);
        if (!in) die(kExitBadInput, "cannot open '" + dg_json_in + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        pcd_digraph* d = nullptr;
        check(pcd_digraph_from_json(ss.str().c_str(), &d));
        DigraphPtr dp(d);
        std::cout << summary_line(dp.get(), pcd_digraph_kappa(dp.get())) << "\n";
        return 0;
      }
      if (dg_map.family.empty()) die(kExitBadInput, "--family is required");
      if (dg_points.empty()) die(kExitBadInput, "--points-file is required");
      const pcd_triangle t = dg_tri.resolve();
      const MapPtr m = dg_map.create(t);
      const auto pts = read_points(dg_points);
      require_inside(t, pts);
      pcd_digraph* d = nullptr;
      check(pcd_digraph_build(m.get(), pts.data(), pts.size(), &d));
      DigraphPtr dp(d);
      if (!dg_out.empty()) {
        char* json = nullptr;
        check(pcd_digraph_to_json(dp.get(), m.get(), seed, dg_seed->count() > 0 || std::getenv("PCD_SEED"), &json));
        StringPtr js(json);
        write_text(dg_out, json);
      }
      std::cout << summary_line(dp.get(), pcd_map_kappa(m.get())) << "\n";
    } else if (*gamma1) {
      const pcd_triangle t = g1_tri.resolve();
      const MapPtr m = g1_map.create(t);
      const auto pts = read_points(g1_points);
      if (pts.empty()) die(kExitBadInput, "points file is empty");
      require_inside(t, pts);
      pcd_gamma1* g = nullptr;
      check(pcd_gamma1_compute(m.get(), pts.data(), pts.size(), &g));
      Gamma1Ptr gp(g);
      if (!g1_svg.empty()) {
        char* svg = nullptr;
        check(pcd_svg_render(m.get(), pts.data(), pts.size(), gp.get(), &svg));
        StringPtr sp(svg);
        write_text(g1_svg, svg);
      }
      const pcd_region_kind kind = pcd_gamma1_kind(gp.get());
      if (kind == PCD_REGION_EMPTY) {
        std::cout << "empty\n";
        return 0;
      }
      if (kind == PCD_REGION_POINT) {
        pcd_point p;
        check(pcd_gamma1_point(gp.get(), &p));
        std::cout << "point " << fmt(p.x) << "," << fmt(p.y) << "\n";
      } else {
        for (int c = 0; c < 3; ++c) {
          const std::size_t k = pcd_gamma1_piece_size(gp.get(), c);
          if (k == 0) continue;
          std::vector<pcd_point> v(k);
          check(pcd_gamma1_piece(gp.get(), c, v.data(), k));
          std::cout << "piece " << c;
          for (const auto& p : v) std::cout << " " << fmt(p.x) << "," << fmt(p.y);
          std::cout << "\n";
        }
        std::cout << "hull_vertices=" << pcd_gamma1_hull_size(gp.get()) << "\n";
      }
      double area_t = 0;
      check(pcd_triangle_area(&t, &area_t));
      const double a = pcd_gamma1_area(gp.get());
      std::cout << "area=" << fmt(a) << " fraction=" << fmt(a / area_t) << "\n";
    } else if (*simulate) {
      std::vector<std::size_t> grid;
      for (double v : parse_numbers(sim_grid, "--n-grid")) {
        if (v < 1 || v != std::floor(v)) die(kExitBadInput, "--n-grid entries must be positive integers");
        grid.push_back(static_cast<std::size_t>(v));
      }
      MapPtr m;
      if (sim_est != "interval-1d") m = sim_map.create(sim_tri.resolve());
      char* csv = nullptr;
      double rate = NAN;
      check(pcd_simulate_csv(sim_est.c_str(), m.get(), grid.data(), grid.size(), sim_reps, seed, sim_threads, &csv,
                             sim_rate ? &rate : nullptr));
      StringPtr cp(csv);
      write_text(sim_out, csv);
      if (sim_rate) {
        std::ostream& os = sim_out.empty() || sim_out == "-" ? std::cerr : std::cout;
        os << "rate=" << (std::isnan(rate) ? std::string("nan") : fmt_short(rate)) << "\n";
      }
    } else if (*construct) {
      (void)con_gamma_n;
      const pcd_triangle t = con_tri.resolve();
      MapOpts mo;
      mo.family = "cs";
      mo.tau = con_tau;
      mo.center = con_center;
      const MapPtr m = mo.create(t);
      const double eps = con_perturb ? con_eps : (con_eps < 0 ? 0.0 : con_eps);
      std::vector<pcd_point> pts(con_n);
      check(pcd_cs_construction(m.get(), con_n, eps, seed, pts.data()));
      write_text(con_out, points_csv(pts));
    }
  } catch (const Failure& f) {
    std::cerr << "pcd: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
