#include <doctest.h>

#include <cmath>

#include "diskstab/geometry.hpp"
#include "diskstab/rng.hpp"
#include "test_util.hpp"

using namespace diskstab;

namespace {
GeneralizedDisk unit_disk(double cx, double cy, int id = -1) {
  return GeneralizedDisk::disk(cx, cy, 1.0, id);
}
}  // namespace

TEST_CASE("circle_intersection_points on the canonical pairs") {
  const auto a = unit_disk(0, 0);

  CHECK(circle_intersection_points(a, unit_disk(3, 0)).empty());

  const auto tangent = circle_intersection_points(a, unit_disk(2, 0));
  REQUIRE(tangent.size() == 1);
  CHECK(tangent[0].x == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(tangent[0].y == doctest::Approx(0.0).epsilon(1e-12));

  const auto two = circle_intersection_points(a, unit_disk(std::sqrt(3.0), 0));
  REQUIRE(two.size() == 2);
  CHECK(two[0].x == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
  CHECK(two[0].y == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(two[1].y == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_AS((void)circle_intersection_points(a, unit_disk(0, 0)), IdenticalCircles);
}

TEST_CASE("intersection points satisfy both circle equations") {
  SplitMix64 rng(42);
  int checked = 0;
  while (checked < 500) {
    const auto a = GeneralizedDisk::disk(rng.next_double() * 4, rng.next_double() * 4,
                                         0.3 + rng.next_double(), 0);
    const auto b = GeneralizedDisk::disk(rng.next_double() * 4, rng.next_double() * 4,
                                         0.3 + rng.next_double(), 1);
    const auto pts = circle_intersection_points(a, b);
    for (const Point& p : pts) {
      CHECK(std::abs(dist(p, a.center) - a.radius) <= 1e-9 * std::max(1.0, a.radius));
      CHECK(std::abs(dist(p, b.center) - b.radius) <= 1e-9 * std::max(1.0, b.radius));
    }
    if (!pts.empty()) ++checked;
  }
}

TEST_CASE("lens_angle values and symmetry") {
  CHECK(lens_angle(unit_disk(0, 0), unit_disk(2, 0)) ==
        doctest::Approx(std::numbers::pi).epsilon(1e-9));
  CHECK(lens_angle(unit_disk(0, 0), unit_disk(std::sqrt(3.0), 0)) ==
        doctest::Approx(2 * std::numbers::pi / 3).epsilon(1e-12));
  CHECK(lens_angle(GeneralizedDisk::disk(0, 0, 2), GeneralizedDisk::disk(std::sqrt(5.0), 0, 1)) ==
        doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));

  CHECK_THROWS_AS((void)lens_angle(unit_disk(0, 0), unit_disk(3, 0)), NoLens);
  CHECK_THROWS_AS((void)lens_angle(GeneralizedDisk::disk(0, 0, 3), unit_disk(0.5, 0)), NoLens);

  SplitMix64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto a = GeneralizedDisk::disk(rng.next_double(), rng.next_double(),
                                         0.5 + rng.next_double(), 0);
    const auto b = GeneralizedDisk::disk(rng.next_double(), rng.next_double(),
                                         0.5 + rng.next_double(), 1);
    const double d = dist(a.center, b.center);
    if (d > a.radius + b.radius || d < std::abs(a.radius - b.radius)) continue;
    CHECK(lens_angle(a, b) == lens_angle(b, a));  // bitwise symmetric
  }
}

TEST_CASE("contains on boundary, halfplane and near-miss points") {
  CHECK(contains(unit_disk(0, 0), {0, 1}));
  CHECK(!contains(GeneralizedDisk::halfplane(0, 1, 0), {5, 0.1}, 1e-9));
  // dist((0.98, 0.78), (sqrt(3), 0)) = 1.0835 > 1
  CHECK(!contains(unit_disk(std::sqrt(3.0), 0), {0.98, 0.78}));
  CHECK(dist({0.98, 0.78}, {std::sqrt(3.0), 0}) == doctest::Approx(1.08350).epsilon(1e-5));
}

TEST_CASE("distance_to") {
  CHECK(distance_to(unit_disk(0, 5), {0, 0}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(distance_to(GeneralizedDisk::halfplane(0, 1, 0), {3, 2}) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(distance_to(unit_disk(0, 5), {3, 1}) == doctest::Approx(4.0).epsilon(1e-12));

  SplitMix64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const bool half = rng.next() & 1;
    const auto g = half ? GeneralizedDisk::halfplane(std::cos(rng.next_double() * 6.28),
                                                     std::sin(rng.next_double() * 6.28), 0)
                        : GeneralizedDisk::disk(rng.next_double(), rng.next_double(),
                                                0.5 + rng.next_double());
    GeneralizedDisk gn = g;
    if (half) {
      const double n = std::sqrt(gn.normal.x * gn.normal.x + gn.normal.y * gn.normal.y);
      gn.normal.x /= n;
      gn.normal.y /= n;
    }
    const Point p{4 * (rng.next_double() - 0.5), 4 * (rng.next_double() - 0.5)};
    CHECK((distance_to(gn, p) == 0.0) == contains(gn, p, 0.0));
  }
}

TEST_CASE("intersection_witness basic families") {
  const double s3 = std::sqrt(3.0) / 2.0;

  std::vector<GeneralizedDisk> close{unit_disk(0, 0, 0), unit_disk(1, 0, 1),
                                     unit_disk(0.5, s3, 2)};
  auto w = intersection_witness(close);
  REQUIRE(w.has_value());
  for (const auto& g : close) CHECK(contains(g, *w));

  std::vector<GeneralizedDisk> far{unit_disk(0, 0, 0), unit_disk(1.9, 0, 1),
                                   unit_disk(0.95, 1.9 * s3, 2)};
  CHECK(!intersection_witness(far).has_value());

  std::vector<GeneralizedDisk> one{GeneralizedDisk::disk(2, 3, 0.5, 0)};
  auto w1 = intersection_witness(one);
  REQUIRE(w1.has_value());
  CHECK(w1->x == 2.0);
  CHECK(w1->y == 3.0);
}

TEST_CASE("witness never contradicts dense grid sampling") {
  SplitMix64 rng(2024);
  for (int fam = 0; fam < 40; ++fam) {
    const int n = 2 + static_cast<int>(rng.bounded(5));
    std::vector<GeneralizedDisk> family;
    for (int i = 0; i < n; ++i)
      family.push_back(GeneralizedDisk::disk(rng.next_double() * 2, rng.next_double() * 2,
                                             0.4 + rng.next_double(), i));
    std::optional<Point> w;
    try {
      w = intersection_witness(family);
    } catch (const DegenerateIntersection&) {
      continue;
    }
    if (w)
      for (const auto& g : family) CHECK(contains(g, *w));

    double min_x = 1e30, min_y = 1e30, max_x = -1e30, max_y = -1e30;
    for (const auto& g : family) {
      min_x = std::min(min_x, g.center.x - g.radius);
      max_x = std::max(max_x, g.center.x + g.radius);
      min_y = std::min(min_y, g.center.y - g.radius);
      max_y = std::max(max_y, g.center.y + g.radius);
    }
    bool grid_hit = false;
    const int kGrid = 1000;  // 1e6 samples
    for (int ix = 0; ix < kGrid && !grid_hit; ++ix) {
      const double x = min_x + (max_x - min_x) * (ix + 0.5) / kGrid;
      for (int iy = 0; iy < kGrid; ++iy) {
        const double y = min_y + (max_y - min_y) * (iy + 0.5) / kGrid;
        bool in_all = true;
        for (const auto& g : family) {
          if (!contains(g, {x, y}, 0.0)) {
            in_all = false;
            break;
          }
        }
        if (in_all) {
          grid_hit = true;
          break;
        }
      }
    }
    // The grid can confirm a witness but never refute one.
    if (grid_hit) CHECK(w.has_value());
  }
}

TEST_CASE("make_lens vertices lie on both boundary circles") {
  SplitMix64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto a = GeneralizedDisk::disk(rng.next_double() * 3, rng.next_double() * 3,
                                         0.5 + rng.next_double(), 0);
    const auto b = GeneralizedDisk::disk(rng.next_double() * 3, rng.next_double() * 3,
                                         0.5 + rng.next_double(), 1);
    const double d = dist(a.center, b.center);
    if (d <= 1e-6 && std::abs(a.radius - b.radius) <= 1e-6) continue;
    const Lens lens = make_lens(a, b);
    CHECK(lens.vertices.size() <= 2);
    for (const Point& v : lens.vertices) {
      CHECK(std::abs(dist(v, a.center) - a.radius) <= 1e-9);
      CHECK(std::abs(dist(v, b.center) - b.radius) <= 1e-9);
    }
  }
}

TEST_CASE("pairwise_intersects across kinds") {
  CHECK(pairwise_intersects(unit_disk(0, 0), unit_disk(2, 0)));
  CHECK(!pairwise_intersects(unit_disk(0, 0), unit_disk(2.1, 0)));
  CHECK(pairwise_intersects(unit_disk(0, 3), GeneralizedDisk::halfplane(0, -1, -2)));
  CHECK(!pairwise_intersects(unit_disk(0, 3), GeneralizedDisk::halfplane(0, -1, -4.5)));
  // Opposite halfplanes: overlapping strip vs empty gap.
  CHECK(pairwise_intersects(GeneralizedDisk::halfplane(0, 1, 1),
                            GeneralizedDisk::halfplane(0, -1, 0)));
  CHECK(!pairwise_intersects(GeneralizedDisk::halfplane(0, 1, 1),
                             GeneralizedDisk::halfplane(0, -1, -2)));
}
