#include "diskstab/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace diskstab {

namespace {

constexpr double kHalfplaneFallbackDepth = 1e6;

// Intersection points of a circle and a line {p : n.p = off}, n unit.
// A slightly negative chord discriminant within the tolerance band is
// clamped to a tangency.
std::vector<Point> circle_line_points(const Point& c, double r, const Point& n, double off,
                                      double tol) {
  const double t = n.x * c.x + n.y * c.y - off;  // signed distance center -> line
  if (std::abs(t) > r + tol) return {};
  double h2 = r * r - t * t;
  if (h2 < 0) h2 = 0;
  const double h = std::sqrt(h2);
  const Point foot{c.x - t * n.x, c.y - t * n.y};
  const Point tang{-n.y, n.x};
  std::vector<Point> pts{{foot.x + h * tang.x, foot.y + h * tang.y},
                         {foot.x - h * tang.x, foot.y - h * tang.y}};
  if (dist(pts[0], pts[1]) < tol) pts.pop_back();
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

std::optional<Point> line_line_point(const Point& n1, double o1, const Point& n2, double o2) {
  const double det = n1.x * n2.y - n1.y * n2.x;
  if (std::abs(det) < 1e-12) return std::nullopt;
  return Point{(o1 * n2.y - o2 * n1.y) / det, (n1.x * o2 - n2.x * o1) / det};
}

}  // namespace

GeneralizedDisk GeneralizedDisk::ground() {
  return halfplane(0.0, 1.0, 0.0, std::numeric_limits<int>::max());
}

double signed_distance(const GeneralizedDisk& g, const Point& p) {
  if (g.is_disk()) return dist(p, g.center) - g.radius;
  return g.normal.x * p.x + g.normal.y * p.y - g.offset;
}

double distance_to(const GeneralizedDisk& g, const Point& p) {
  const double d = signed_distance(g, p);
  return d > 0.0 ? d : 0.0;
}

bool contains(const GeneralizedDisk& g, const Point& p, double tol) {
  if (g.is_disk()) {
    const double rr = g.radius + tol;
    return dist_sq(p, g.center) <= rr * rr;
  }
  return g.normal.x * p.x + g.normal.y * p.y <= g.offset + tol;
}

std::vector<Point> circle_intersection_points(const GeneralizedDisk& a, const GeneralizedDisk& b,
                                              double tol) {
  assert(a.is_disk() && b.is_disk());
  const double d = dist(a.center, b.center);
  if (d <= tol && std::abs(a.radius - b.radius) <= tol) throw IdenticalCircles{};
  if (d > a.radius + b.radius + tol) return {};
  if (d < std::abs(a.radius - b.radius) - tol) return {};

  // Radical-line decomposition: foot point at distance t from a.center along
  // the center line, half-chord h on each side.
  const double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  double h2 = a.radius * a.radius - t * t;
  if (h2 < 0) h2 = 0;
  const double h = std::sqrt(h2);
  const Point u{(b.center.x - a.center.x) / d, (b.center.y - a.center.y) / d};
  const Point foot{a.center.x + t * u.x, a.center.y + t * u.y};
  std::vector<Point> pts{{foot.x - h * u.y, foot.y + h * u.x},
                         {foot.x + h * u.y, foot.y - h * u.x}};
  if (dist(pts[0], pts[1]) < tol) pts.pop_back();
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

double lens_angle(const GeneralizedDisk& a, const GeneralizedDisk& b, double tol) {
  assert(a.is_disk() && b.is_disk());
  const double d = dist(a.center, b.center);
  if (d > a.radius + b.radius + tol) throw NoLens{};
  if (d < std::abs(a.radius - b.radius) - tol) throw NoLens{};
  double c = (a.radius * a.radius + b.radius * b.radius - d * d) / (2.0 * a.radius * b.radius);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

Lens make_lens(const GeneralizedDisk& a, const GeneralizedDisk& b, double tol) {
  return Lens{a, b, circle_intersection_points(a, b, tol)};
}

bool pairwise_intersects(const GeneralizedDisk& a, const GeneralizedDisk& b, double tol) {
  if (a.is_disk() && b.is_disk())
    return dist(a.center, b.center) <= a.radius + b.radius + tol;
  if (a.is_halfplane() && b.is_halfplane()) {
    const double cross = a.normal.x * b.normal.y - a.normal.y * b.normal.x;
    const double dot = a.normal.x * b.normal.x + a.normal.y * b.normal.y;
    if (std::abs(cross) > 1e-12 || dot > 0) return true;
    // Opposite normals: nonempty iff the strip between the lines exists.
    return a.offset + b.offset >= -tol;
  }
  const GeneralizedDisk& d = a.is_disk() ? a : b;
  const GeneralizedDisk& h = a.is_disk() ? b : a;
  return signed_distance(h, d.center) <= d.radius + tol;
}

std::vector<Point> boundary_intersection_points(const GeneralizedDisk& a,
                                                const GeneralizedDisk& b, double tol) {
  if (a.is_disk() && b.is_disk()) {
    try {
      return circle_intersection_points(a, b, tol);
    } catch (const IdenticalCircles&) {
      return {};
    }
  }
  if (a.is_halfplane() && b.is_halfplane()) {
    if (auto p = line_line_point(a.normal, a.offset, b.normal, b.offset)) return {*p};
    return {};
  }
  const GeneralizedDisk& d = a.is_disk() ? a : b;
  const GeneralizedDisk& h = a.is_disk() ? b : a;
  return circle_line_points(d.center, d.radius, h.normal, h.offset, tol);
}

std::vector<Point> piercing_candidates(std::span<const GeneralizedDisk> family, double tol) {
  std::vector<Point> cands;
  for (size_t i = 0; i < family.size(); ++i) {
    if (family[i].is_disk()) {
      cands.push_back(family[i].center);
    } else {
      const Point n = family[i].normal;
      const double off = family[i].offset;
      cands.push_back({n.x * off - kHalfplaneFallbackDepth * n.x,
                       n.y * off - kHalfplaneFallbackDepth * n.y});
    }
    for (size_t j = i + 1; j < family.size(); ++j) {
      for (const Point& p : boundary_intersection_points(family[i], family[j], tol))
        cands.push_back(p);
    }
  }
  std::sort(cands.begin(), cands.end(), point_less);
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Point& p, const Point& q) { return p == q; }),
              cands.end());
  return cands;
}

std::optional<Point> intersection_witness(std::span<const GeneralizedDisk> family, double tol) {
  assert(!family.empty());
  const std::vector<Point> cands = piercing_candidates(family, tol);

  double best = std::numeric_limits<double>::infinity();
  Point best_pt{};
  for (const Point& p : cands) {
    double worst = -std::numeric_limits<double>::infinity();
    for (const GeneralizedDisk& g : family) {
      worst = std::max(worst, signed_distance(g, p));
      if (worst > best) break;
    }
    if (worst < best || (worst == best && point_less(p, best_pt))) {
      best = worst;
      best_pt = p;
    }
  }
  if (best <= tol) return best_pt;
  if (best <= 10.0 * tol) throw DegenerateIntersection{best_pt};
  return std::nullopt;
}

}  // namespace diskstab
