#include <doctest.h>

#include <cmath>

#include "diskstab/lowerbound.hpp"
#include "diskstab/rng.hpp"
#include "test_util.hpp"

using namespace diskstab;
using namespace diskstab::lowerbound;

namespace {

bool covers_family(std::span<const GeneralizedDisk> family, std::span<const Point> points,
                   double tol) {
  for (const auto& g : family) {
    bool hit = false;
    for (const Point& p : points)
      if (contains(g, p, tol)) hit = true;
    if (!hit) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("build_lower_bound: geometry of the tangent core") {
  const auto cfg = build_lower_bound(0.005, 0.0005);
  const double R = 3.0 + 2.0 * std::sqrt(3.0);

  CHECK(cfg.inner.radius == 1.0);
  for (int i = 0; i < 3; ++i) {
    CHECK(dist(cfg.big[i].center, {0, 0}) == doctest::Approx(1.0 + R).epsilon(1e-12));
    CHECK(cfg.big[i].radius == doctest::Approx(R).epsilon(1e-12));
    CHECK(dist(cfg.xi[i], {0, 0}) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(dist(cfg.xi[i], cfg.big[i].center) - R) <= 1e-9);
  }
  // Mutual tangency of the three big disks.
  for (int i = 0; i < 3; ++i)
    CHECK(dist(cfg.big[i].center, cfg.big[(i + 1) % 3].center) ==
          doctest::Approx(2 * R).epsilon(1e-12));

  CHECK(verify_construction(cfg).all_ok());
  CHECK(cfg.family().size() == 13);
}

TEST_CASE("build_lower_bound rejects bad parameters") {
  CHECK_THROWS_AS((void)build_lower_bound(0.01, 0.0), BadEpsilons);
  CHECK_THROWS_AS((void)build_lower_bound(0.5, 0.001), BadEpsilons);
  CHECK_THROWS_AS((void)build_lower_bound(0.01, 0.01), BadEpsilons);
  // Feasibility limit: region overlap on the inner circle appears before
  // eps1 = 0.01, so the construction's own verifier rejects this pair.
  CHECK_THROWS_AS((void)build_lower_bound(0.01, 0.001), BadEpsilons);
}

TEST_CASE("verify_construction localizes defects") {
  // Oversized expansion merges neighboring regions: (ii) fails.
  const auto big_eps = build_config_unchecked(0.5, 0.001);
  const auto rep1 = verify_construction(big_eps);
  CHECK(!(rep1.regions_disjoint[0] && rep1.regions_disjoint[1] && rep1.regions_disjoint[2]));

  // Replacing A2 by the unexpanded disk A puts xi_2 back on the boundary:
  // (iii) fails exactly there.
  auto cfg = build_config_unchecked(0.005, 0.0005);
  cfg.expanded[1] = cfg.inner;
  cfg.expanded[1].id = 11;
  const auto rep2 = verify_construction(cfg);
  CHECK(rep2.xi_outside[0]);
  CHECK(!rep2.xi_outside[1]);
  CHECK(rep2.xi_outside[2]);
}

TEST_CASE("min_pierce matches the witness at k = 1") {
  SplitMix64 rng(404);
  for (int it = 0; it < 30; ++it) {
    const int n = 2 + static_cast<int>(rng.bounded(7));
    std::vector<GeneralizedDisk> fam;
    for (int i = 0; i < n; ++i)
      fam.push_back(GeneralizedDisk::disk(rng.next_double(), rng.next_double(),
                                          0.8 + rng.next_double(), i));
    bool pairwise = true;
    for (int i = 0; i < n && pairwise; ++i)
      for (int j = i + 1; j < n; ++j)
        if (!pairwise_intersects(fam[i], fam[j])) pairwise = false;
    if (!pairwise) continue;

    std::optional<Point> w;
    try {
      w = intersection_witness(fam);
    } catch (const DegenerateIntersection&) {
      continue;
    }
    const auto pierce1 = min_pierce(fam, 1);
    CHECK(w.has_value() == pierce1.has_value());
    if (pierce1) CHECK(covers_family(fam, *pierce1, kDefaultTol));
  }
}

TEST_CASE("min_pierce is monotone in k and returns valid covers") {
  SplitMix64 rng(808);
  for (int it = 0; it < 20; ++it) {
    const auto triple = testutil::make_non_helly_triple(rng);
    CHECK(!min_pierce(triple, 1).has_value());
    const auto two = min_pierce(triple, 2);
    REQUIRE(two.has_value());
    CHECK(two->size() <= 2);
    CHECK(covers_family(triple, *two, kDefaultTol));
    const auto three = min_pierce(triple, 3);
    REQUIRE(three.has_value());
    CHECK(covers_family(triple, *three, kDefaultTol));
  }
}

TEST_CASE("min_pierce is deterministic") {
  const auto cfg = build_lower_bound(0.005, 0.0005);
  const auto fam = cfg.family();
  const auto a = min_pierce(fam, 4);
  const auto b = min_pierce(fam, 4);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  REQUIRE(a->size() == b->size());
  for (size_t i = 0; i < a->size(); ++i) {
    CHECK((*a)[i].x == (*b)[i].x);
    CHECK((*a)[i].y == (*b)[i].y);
  }
}

TEST_CASE("thirteen-object family: two points are not enough, three are") {
  const auto cfg = build_lower_bound(0.005, 0.0005);
  const auto fam = cfg.family();

  CHECK(!min_pierce(fam, 2).has_value());

  // Three candidate points cover the family at every tolerance level, and
  // the cover found at 1e-12 is genuine at 1e-12 (no tolerance artifact).
  for (const double tol : {1e-12, 1e-9, 1e-7}) {
    const auto three = min_pierce(fam, 3, tol);
    REQUIRE(three.has_value());
    CHECK(three->size() == 3);
    CHECK(covers_family(fam, *three, tol));
  }
  const auto strict = min_pierce(fam, 3, 1e-12);
  REQUIRE(strict.has_value());
  CHECK(covers_family(fam, *strict, 1e-12));

  const auto four = min_pierce(fam, 4);
  REQUIRE(four.has_value());
  CHECK(covers_family(fam, *four, kDefaultTol));
}

TEST_CASE("min_pierce enforces its size limits") {
  std::vector<GeneralizedDisk> fam;
  for (int i = 0; i < 21; ++i) fam.push_back(GeneralizedDisk::disk(0, 0, 1.0 + i * 0.01, i));
  CHECK_THROWS_AS((void)min_pierce(fam, 3), TooLarge);
  std::vector<GeneralizedDisk> small{GeneralizedDisk::disk(0, 0, 1, 0)};
  CHECK_THROWS_AS((void)min_pierce(small, 5), TooLarge);
}
