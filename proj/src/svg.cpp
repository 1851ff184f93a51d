#include "pcd/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "pcd/error.hpp"

namespace pcd {

namespace {

constexpr double kSize = 800.0;
constexpr double kMargin = 40.0;

struct Frame {
  double x0, y0, scale;

  Point2 map(Point2 p) const {
    return {kMargin + (p.x - x0) * scale, kSize - kMargin - (p.y - y0) * scale};
  }
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string path(const Frame& f, const std::vector<Point2>& ring) {
  std::string d;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2 q = f.map(ring[i]);
    d += (i == 0 ? "M" : " L") + fmt(q.x) + " " + fmt(q.y);
  }
  return d + " Z";
}

}  // namespace

std::string render_svg(const ProximityMapSpec& spec, std::span<const Point2> sample, const Gamma1Region* g) {
  if (!spec.has_triangle()) throw Error(ErrorCode::InvalidArgument, "figure needs a triangle context");
  const Triangle& T = spec.triangle();
  const double x0 = std::min({T.v1.x, T.v2.x, T.v3.x}), x1 = std::max({T.v1.x, T.v2.x, T.v3.x});
  const double y0 = std::min({T.v1.y, T.v2.y, T.v3.y}), y1 = std::max({T.v1.y, T.v2.y, T.v3.y});
  const Frame f{x0, y0, (kSize - 2 * kMargin) / std::max(x1 - x0, y1 - y0)};

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
     << "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  if (spec.kind() == FamilyKind::PE || spec.kind() == FamilyKind::CS) {
    os << "<g id=\"cells\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\">\n";
    for (const auto& c : spec.partition().cells) os << "<path d=\"" << path(f, c.vertices()) << "\"/>\n";
    os << "</g>\n";
  }
  if (g && g->kind == RegionKind::Polygon) {
    os << "<g id=\"gamma1\" fill=\"#4a90d9\" fill-opacity=\"0.45\" stroke=\"#1f5fa8\" stroke-width=\"1\">\n";
    for (const auto& p : g->pieces)
      if (p.size() >= 3) os << "<path d=\"" << path(f, p.vertices()) << "\"/>\n";
    os << "</g>\n";
  } else if (g && g->kind == RegionKind::SinglePoint) {
    const Point2 q = f.map(g->point);
    os << "<g id=\"gamma1\"><circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y)
       << "\" r=\"5\" fill=\"#4a90d9\"/></g>\n";
  }
  os << "<path id=\"triangle\" d=\"" << path(f, {T.v1, T.v2, T.v3})
     << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  os << "<g id=\"sample\" fill=\"black\">\n";
  for (const Point2& p : sample) {
    const Point2 q = f.map(p);
    os << "<circle cx=\"" << fmt(q.x) << "\" cy=\"" << fmt(q.y) << "\" r=\"3\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace pcd
