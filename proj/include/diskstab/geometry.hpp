#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskstab {

// Absolute coordinate tolerance used by all predicates unless overridden.
// Assumes input coordinates of magnitude up to ~1e3.
inline constexpr double kDefaultTol = 1e-9;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

inline bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }

inline bool point_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

inline double dist(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline double dist_sq(const Point& a, const Point& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// A closed disk or a closed halfplane {p : normal.p <= offset}.
// Halfplanes are kept first-class instead of being approximated by huge
// disks; tangent-halfplane constructions need the exact boundary line.
struct GeneralizedDisk {
  enum class Kind { Disk, Halfplane };

  Kind kind = Kind::Disk;
  Point center{};       // Disk only
  double radius = 0.0;  // Disk only, > 0
  Point normal{};       // Halfplane only, unit length
  double offset = 0.0;  // Halfplane only
  int id = -1;

  static GeneralizedDisk disk(double cx, double cy, double r, int id = -1) {
    GeneralizedDisk g;
    g.kind = Kind::Disk;
    g.center = {cx, cy};
    g.radius = r;
    g.id = id;
    return g;
  }

  static GeneralizedDisk halfplane(double nx, double ny, double off, int id = -1) {
    GeneralizedDisk g;
    g.kind = Kind::Halfplane;
    g.normal = {nx, ny};
    g.offset = off;
    g.id = id;
    return g;
  }

  // The halfplane below the x-axis, used as the sentinel constraint that
  // turns "find a common point" into a distance minimization.
  static GeneralizedDisk ground();

  bool is_disk() const { return kind == Kind::Disk; }
  bool is_halfplane() const { return kind == Kind::Halfplane; }
};

// Intersection region of two disks together with its boundary vertices.
struct Lens {
  GeneralizedDisk a;
  GeneralizedDisk b;
  std::vector<Point> vertices;  // 0..2 points on both boundary circles
};

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdenticalCircles : GeometryError {
  IdenticalCircles() : GeometryError("identical circles: infinitely many intersection points") {}
};

struct NoLens : GeometryError {
  NoLens() : GeometryError("disk boundaries do not intersect; lens angle undefined") {}
};

struct DegenerateIntersection : GeometryError {
  Point near{};
  explicit DegenerateIntersection(Point p)
      : GeometryError("common intersection appears to be a single tangency point not resolved "
                      "within tolerance"),
        near(p) {}
};

// Signed distance of p to g: negative inside, zero on the boundary,
// positive outside.
double signed_distance(const GeneralizedDisk& g, const Point& p);

// Distance from p to the closed set g (0 when p is contained).
double distance_to(const GeneralizedDisk& g, const Point& p);

bool contains(const GeneralizedDisk& g, const Point& p, double tol = kDefaultTol);

// Intersection points of the two boundary circles, deduplicated within tol
// and sorted by (x, y). Throws IdenticalCircles when the circles coincide.
std::vector<Point> circle_intersection_points(const GeneralizedDisk& a, const GeneralizedDisk& b,
                                              double tol = kDefaultTol);

// The angle at a boundary intersection point between the two center
// directions, via the law of cosines. Requires the boundaries to meet:
// |r1 - r2| <= d <= r1 + r2 within tol; throws NoLens otherwise.
double lens_angle(const GeneralizedDisk& a, const GeneralizedDisk& b, double tol = kDefaultTol);

Lens make_lens(const GeneralizedDisk& a, const GeneralizedDisk& b, double tol = kDefaultTol);

// Whether two closed objects (disk/halfplane in any combination) intersect.
bool pairwise_intersects(const GeneralizedDisk& a, const GeneralizedDisk& b,
                         double tol = kDefaultTol);

// Boundary-boundary intersection points for any kind combination
// (circle-circle, circle-line, line-line). Never throws: coincident
// boundaries contribute no points.
std::vector<Point> boundary_intersection_points(const GeneralizedDisk& a,
                                                const GeneralizedDisk& b,
                                                double tol = kDefaultTol);

// Candidate point set for exhaustive piercing/emptiness checks: all pairwise
// boundary intersections, every disk center, and one deep fallback point per
// halfplane (the boundary point closest to the origin moved 1e6 units along
// -normal).
std::vector<Point> piercing_candidates(std::span<const GeneralizedDisk> family,
                                       double tol = kDefaultTol);

// Brute-force emptiness oracle: returns a point contained in every member of
// the family iff the common intersection is nonempty. O(n^3); intended for
// families of up to ~200 objects in tests and verification, not for the
// solver's hot path.
//
// Completeness of the candidate set: if the common intersection is nonempty,
// its boundary either carries a vertex (a pairwise boundary intersection,
// which includes single tangency points after deduplication) or consists of
// a single object's boundary, in which case that object is contained in all
// others and its center (or deep fallback point, for a halfplane) qualifies.
//
// Throws DegenerateIntersection when the best candidate misses containment
// by a factor in (tol, 10*tol]: the intersection looks like an unresolved
// tangency and the verdict is reported instead of guessed.
std::optional<Point> intersection_witness(std::span<const GeneralizedDisk> family,
                                          double tol = kDefaultTol);

}  // namespace diskstab
