#include "diskstab/harness.hpp"

#include <cassert>
#include <stdexcept>

#include "diskstab/lptype.hpp"

namespace diskstab::harness {

std::vector<GeneralizedDisk> random_instance(const InstanceSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument{"random_instance: n must be >= 1"};
  if (spec.radius_spread < 1.0) throw std::invalid_argument{"random_instance: spread < 1"};
  if (spec.slack <= 0.0) throw std::invalid_argument{"random_instance: slack must be > 0"};

  SplitMix64 rng(spec.seed);
  std::vector<GeneralizedDisk> disks;
  disks.reserve(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    const double cx = rng.next_double();
    const double cy = rng.next_double();
    const double r = 1.0 + rng.next_double() * (spec.radius_spread - 1.0);
    disks.push_back(GeneralizedDisk::disk(cx, cy, r, i));
  }

  if (spec.n > 1) {
    double lambda = 0.0;
    for (size_t i = 0; i < disks.size(); ++i)
      for (size_t j = i + 1; j < disks.size(); ++j)
        lambda = std::max(lambda, dist(disks[i].center, disks[j].center) /
                                      (disks[i].radius + disks[j].radius));
    assert(lambda > 0.0);
    const double scale = lambda * (1.0 + spec.slack);
    for (GeneralizedDisk& g : disks) g.radius *= scale;
  }
  for (size_t i = 0; i < disks.size(); ++i) disks[i].radius += static_cast<double>(i) * 1e-12;
  return disks;
}

StabCheck verify_stabbing(std::span<const GeneralizedDisk> family, std::span<const Point> points,
                          double tol) {
  for (const GeneralizedDisk& g : family) {
    bool hit = false;
    for (const Point& p : points) {
      if (contains(g, p, tol)) {
        hit = true;
        break;
      }
    }
    if (!hit) return {false, g.id};
  }
  return {};
}

std::vector<GeneralizedDisk> lifted_above_axis(std::span<const GeneralizedDisk> family,
                                               double margin) {
  return lptype::translated(family, lptype::lift_amount(family, margin));
}

}  // namespace diskstab::harness
