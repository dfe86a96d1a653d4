#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "diskstab/geometry.hpp"

namespace diskstab::lptype {

struct InvalidInstance : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHelly : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Degenerate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr int kGroundId = std::numeric_limits<int>::max();

// Total order emulating pairwise distinct radii: (radius, id), with
// halfplanes (radius infinity) after every disk. The ground halfplane,
// carrying kGroundId, is the maximum.
inline double order_radius(const GeneralizedDisk& g) {
  return g.is_disk() ? g.radius : std::numeric_limits<double>::infinity();
}

inline bool tie_less(const GeneralizedDisk& a, const GeneralizedDisk& b) {
  const double ra = order_radius(a), rb = order_radius(b);
  if (ra != rb) return ra < rb;
  return a.id < b.id;
}

// Weight of a constraint set: (radius of the smallest destroyer, -distance
// from the intersection of the strictly smaller disks to that destroyer),
// compared lexicographically. The destroyer is identified by (rad, id) so
// that equal radii stay totally ordered; rad is +infinity exactly when the
// set is Helly (destroyer = ground halfplane).
struct Weight {
  double rad = std::numeric_limits<double>::infinity();
  int destroyer_id = kGroundId;
  double neg_dist = std::numeric_limits<double>::infinity();
};

inline bool weight_less(const Weight& a, const Weight& b, double tol = 0.0) {
  if (a.rad != b.rad) return a.rad < b.rad;
  if (a.destroyer_id != b.destroyer_id) return a.destroyer_id < b.destroyer_id;
  return a.neg_dist < b.neg_dist - tol;
}

inline bool weight_equal(const Weight& a, const Weight& b, double tol = kDefaultTol) {
  return a.rad == b.rad && a.destroyer_id == b.destroyer_id &&
         std::abs(a.neg_dist - b.neg_dist) <= tol;
}

// Inclusion-minimal subset realizing a weight: at most 3 disks. A 3-element
// basis is a non-Helly triple whose largest member (in tie order) is the
// destroyer; smaller bases have the ground halfplane as destroyer.
struct Basis {
  std::vector<GeneralizedDisk> disks;  // sorted by tie_less, size <= 3
  Weight weight{};
  GeneralizedDisk destroyer = GeneralizedDisk::ground();
  Point extreme{};  // unique point of the pre-destroyer intersection closest to the destroyer
};

enum class ViolationResult { NotABasis, Violates, NoViolation };

struct ViolationDiagnostics {
  int near_boundary = 0;  // membership decisions within 10*tol of a boundary
};

// The unique point of the common intersection of 1-2 disks minimizing the
// distance to the destroyer (a disjoint disk, or a halfplane such as
// ground()). Throws NotHelly when the two disks do not intersect.
Point extreme_point(std::span<const GeneralizedDisk> helly_disks,
                    const GeneralizedDisk& destroyer, double tol = kDefaultTol);

// Candidate-set emptiness check specialized to three disks (solver-internal,
// constant time; the test oracle is geometry's intersection_witness).
bool helly3(const GeneralizedDisk& a, const GeneralizedDisk& b, const GeneralizedDisk& c,
            double tol = kDefaultTol);

// Constant-time violation test. Assumes every disk of `candidate` intersects
// e (pairwise intersecting family). Case list:
//   - |candidate| > 3, a Helly triple, or a pair whose lowest point is the
//     lowest point of a single member -> NotABasis;
//   - singleton/pair -> Violates iff the lowest point of the intersection
//     is not in e;
//   - non-Helly triple with destroyer D -> NoViolation when e is not before
//     D in tie order, else Violates iff the extreme point for the two
//     smaller disks and D is not in e.
ViolationResult violation_test(std::span<const GeneralizedDisk> candidate,
                               const GeneralizedDisk& e, double tol = kDefaultTol,
                               ViolationDiagnostics* diag = nullptr);

struct SubsetEval {
  Weight weight{};
  GeneralizedDisk destroyer = GeneralizedDisk::ground();
  Point extreme{};
};

// Weight of a set of at most 3 pairwise intersecting disks, by scanning
// tie-order prefixes for the first non-Helly one. Coordinates are taken
// as-is; callers are responsible for keeping disks above the x-axis.
SubsetEval evaluate_subset(std::vector<GeneralizedDisk> disks, double tol = kDefaultTol);

// Basis of basis.disks + {violator} by brute-force subset enumeration
// (sizes 1..3; smallest weight, then smallest size, violator-containing
// preferred, then lexicographic ids).
Basis extend_basis(const Basis& basis, const GeneralizedDisk& violator,
                   double tol = kDefaultTol);

struct BruteResult {
  Weight weight{};
  Basis basis{};
  double translation_dy = 0.0;
};

// Reference evaluation of the weight of a whole family (<= 12 disks) using
// the brute-force emptiness oracle; the production solver is checked against
// this. Lifts the family above the x-axis by the same rule as solve().
BruteResult weight_brute(std::span<const GeneralizedDisk> family, double tol = kDefaultTol);

struct SolveOptions {
  bool validate = false;  // O(n^2) pairwise intersection check up front
  double tol = kDefaultTol;
};

struct SolveOutcome {
  Weight weight{};  // in the lifted frame (see translation_dy)
  Basis basis{};    // disks and extreme point in original coordinates
  bool helly = false;
  Point helly_point{};  // original coordinates; set iff helly
  GeneralizedDisk smallest_destroyer = GeneralizedDisk::ground();  // set iff !helly
  double translation_dy = 0.0;
  int near_boundary_events = 0;
};

// Vertical shift that places every disk at least `margin` above the x-axis;
// zero when the family already is.
double lift_amount(std::span<const GeneralizedDisk> family, double margin = 1.0);

std::vector<GeneralizedDisk> translated(std::span<const GeneralizedDisk> family, double dy);

// Randomized move-to-front solver: processes a seed-shuffled order,
// maintaining a basis; each violation triggers a brute-force basis extension,
// moves the violator to the front and restarts the scan. Weights decrease
// strictly at every basis change, so termination is unconditional; the same
// (family order, seed) always yields the same outcome. Expected work is
// linear in the family size per basis change. Disks only; throws
// InvalidInstance on halfplane input, empty input, or (with validate) a
// non-intersecting pair, and Degenerate when numeric tie-breaking fails.
SolveOutcome solve(std::span<const GeneralizedDisk> family, std::uint64_t seed,
                   const SolveOptions& options = {});

}  // namespace diskstab::lptype
