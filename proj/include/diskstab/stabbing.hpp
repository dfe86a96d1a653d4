#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "diskstab/lptype.hpp"

namespace diskstab::stabbing {

struct PreconditionViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HellyTriple : std::runtime_error {
  HellyTriple() : std::runtime_error("triple has a common point; expected non-Helly") {}
};

struct InternalVerificationFailed : std::runtime_error {
  int disk_id;
  explicit InternalVerificationFailed(int id)
      : std::runtime_error("certificate misses disk id " + std::to_string(id)), disk_id(id) {}
};

inline constexpr double kWideAngle = 2.0943951023931953;  // 2*pi/3

struct WidePair {
  GeneralizedDisk first;   // larger in tie order
  GeneralizedDisk second;  // smaller
  double angle = 0.0;
};

// The pair of a non-Helly triple with the maximum lens angle; such a pair
// always has angle > 2*pi/3. Ties are broken by the pair's sorted ids. With
// check_non_helly, verifies the triple via the brute-force witness first.
WidePair widest_lens_pair(std::span<const GeneralizedDisk> triple, double tol = kDefaultTol,
                          bool check_non_helly = false);

// For disks d1, d2 with r1 >= r2 and lens angle >= 2*pi/3 - tol: the disk of
// radius r1 centered sqrt(3)*r1 from c1 along the direction c1 -> c2, i.e.
// the unique equal-radius disk whose lens angle with d1 is exactly 2*pi/3.
GeneralizedDisk companion_disk(const GeneralizedDisk& d1, const GeneralizedDisk& d2,
                               double tol = kDefaultTol);

struct FourPoints {
  std::array<Point, 4> points;  // {c1, c, p, q}
  GeneralizedDisk companion;    // E, the disk centered at c
};

// The four points {c1, c, p, q}: the centers of d1 and its companion E, plus
// the two points at distance r1 from the midpoint of c1c along the
// perpendicular. Any disk of radius >= r1 that intersects both d1 and d2
// contains one of them; the same holds for halfplanes.
FourPoints four_point_set(const GeneralizedDisk& d1, const GeneralizedDisk& d2,
                          double tol = kDefaultTol);

struct Trace {
  std::optional<Point> helly_point;                // q (or the single stabbing point)
  std::optional<std::array<int, 3>> triple;        // ids, tie order
  std::optional<std::array<int, 2>> wide_pair;     // ids, larger first
  std::optional<double> lens_angle;
  std::optional<GeneralizedDisk> companion;
  std::optional<std::array<Point, 4>> four_points;
};

struct StabCertificate {
  std::vector<Point> points;  // 1..5
  Trace trace;
  double delta = 0.0;  // radius/offset inflation applied before solving
  std::uint64_t seed = 0;
  double translation_dy = 0.0;
};

struct StabOptions {
  bool validate = false;       // O(n^2) pairwise intersection check
  bool verify = true;          // check the certificate against the family
  double inflate_delta = 0.0;  // grow radii/offsets first (tangent inputs)
  double tol = kDefaultTol;
};

// Expected-linear-time stabbing: solve the LP-type problem; a Helly family
// is stabbed by its extreme point, otherwise the non-Helly basis triple
// yields the widest pair, its four-point set covers every object at or after
// the smallest destroyer in tie order (halfplanes included), and a second
// solve on the strictly smaller disks yields the fifth point q.
//
// Halfplane members are allowed as long as the disk subfamily alone is
// non-Helly (they then fall to the four-point set); otherwise they cannot be
// covered by this pipeline and InvalidInstance is thrown.
StabCertificate stab_five(std::span<const GeneralizedDisk> family, std::uint64_t seed,
                          const StabOptions& options = {});

// O(n log n) variant: sorts by tie order, binary-searches the smallest
// non-Helly prefix to find the destroyer, a second binary search plus a
// linear scan recover a non-Helly triple, then proceeds as stab_five.
StabCertificate stab_five_sorted(std::span<const GeneralizedDisk> family,
                                 const StabOptions& options = {});

}  // namespace diskstab::stabbing
