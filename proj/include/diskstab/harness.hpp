#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "diskstab/geometry.hpp"
#include "diskstab/rng.hpp"

namespace diskstab::harness {

// Parameters for the seeded pairwise-intersecting instance generator.
struct InstanceSpec {
  int n = 1;
  std::uint64_t seed = 0;
  double radius_spread = 2.0;  // max/min raw radius ratio, >= 1
  double slack = 0.05;         // relative margin past pairwise tangency, > 0
};

// Deterministic generator: n centers uniform in [0,1]^2 and raw radii in
// [1, radius_spread] from splitmix64(seed), then all radii scaled by
// lambda*(1+slack) where lambda = max over pairs of |ci cj| / (ri + rj), so
// every pair overlaps with a positive-area lens. Radii are additionally
// perturbed by distinct multiples of 1e-12 to keep them pairwise distinct.
// Draw order per disk: cx, cy, r.
std::vector<GeneralizedDisk> random_instance(const InstanceSpec& spec);

struct StabCheck {
  bool ok = true;
  int first_failed_id = -1;
  explicit operator bool() const { return ok; }
};

// True iff every family member tolerantly contains at least one point;
// reports the first uncovered member otherwise.
StabCheck verify_stabbing(std::span<const GeneralizedDisk> family, std::span<const Point> points,
                          double tol = kDefaultTol);

// Copy of the family translated up so every disk lies at least `margin`
// above the x-axis (no-op when it already does). Test helper for working in
// a frame where ground-distance weights are comparable across subsets.
std::vector<GeneralizedDisk> lifted_above_axis(std::span<const GeneralizedDisk> family,
                                               double margin = 1.0);

}  // namespace diskstab::harness
