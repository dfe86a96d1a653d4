#pragma once

#include <array>
#include <optional>
#include <span>

#include "diskstab/geometry.hpp"

namespace diskstab::lowerbound {

struct BadEpsilons : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The 13-object family that no three points can stab: a unit disk A at the
// origin, three equal disks D1..D3 of radius 3 + 2*sqrt(3) mutually tangent
// and tangent to A (centers at angles 90/210/330 degrees), the six outer
// common tangent halfplanes T_i-/T_i+ of (A, D_i) on the far side of A, and
// three slightly expanded copies A1..A3 of A rolled clockwise along their
// D_i. Object ids follow field order: A=0, D=1..3, T=4..9, A_i=10..12.
struct LowerBoundConfig {
  GeneralizedDisk inner;                     // A
  std::array<GeneralizedDisk, 3> big;        // D1..D3
  std::array<GeneralizedDisk, 6> tangents;   // T1-,T1+,T2-,T2+,T3-,T3+
  std::array<GeneralizedDisk, 3> expanded;   // A1..A3
  std::array<Point, 3> xi;                   // contact points of A and D_i
  double eps1 = 0.0;                         // expansion of A into A'_i
  double eps2 = 0.0;                         // clockwise rolling angle

  std::vector<GeneralizedDisk> family() const;
};

struct ConstructionReport {
  bool pairwise_intersecting = false;
  std::array<bool, 3> expanded_meets_all{};         // (i)  A_i intersects the other 12
  std::array<bool, 3> regions_disjoint{};           // (ii) the nine A_i regions are disjoint
  std::array<bool, 3> xi_outside{};                 // (iii) xi_i not in A_i
  bool tangency_points_distinct = false;            // nine contact points on the unit circle
  bool big_triple_non_helly = false;                // {D1, D2, D3}
  bool tangent_minus_triple_non_helly = false;      // {T1-, T2-, T3-}
  std::array<bool, 3> disk_tangent_non_helly{};     // {D_i, T_i-, T_i+}

  bool all_ok() const;
};

// Places the 13 objects for the given parameters without any validation;
// exposed so that out-of-range configurations can be inspected and shown to
// fail verify_construction.
LowerBoundConfig build_config_unchecked(double eps1, double eps2);

// Validates 0 < eps2 <= eps1 / 5 and eps1 <= 0.05, builds the configuration
// and runs verify_construction; throws BadEpsilons if either step fails.
LowerBoundConfig build_lower_bound(double eps1, double eps2, double tol = kDefaultTol);

ConstructionReport verify_construction(const LowerBoundConfig& config,
                                       double tol = kDefaultTol);

// Exhaustive k-piercing decision for small families (<= 20 objects, k <= 4):
// a set of at most k candidate points covering every member, or nullopt if
// none exists. Among minimum-cardinality covers the lexicographically
// smallest (points sorted by (x, y)) is returned.
//
// Candidates are all pairwise boundary intersections (tangency points
// included), disk centers, and the halfplane fallback points. This is
// complete for closed disks and halfplanes: any piercing point can be slid
// within its cell of the boundary arrangement to the closure of a vertex, or
// to a deep point of an object containing its whole cell, without leaving
// any member it pierces.
std::optional<std::vector<Point>> min_pierce(std::span<const GeneralizedDisk> family, int k,
                                             double tol = kDefaultTol);

}  // namespace diskstab::lowerbound
