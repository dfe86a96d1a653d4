#include "diskstab/lowerbound.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace diskstab::lowerbound {

namespace {

constexpr double kPi = std::numbers::pi;

Point rotate_about(const Point& p, const Point& pivot, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  const double dx = p.x - pivot.x, dy = p.y - pivot.y;
  return {pivot.x + c * dx - s * dy, pivot.y + s * dx + c * dy};
}

bool non_helly(std::span<const GeneralizedDisk> objs, double tol) {
  try {
    return !intersection_witness(objs, tol).has_value();
  } catch (const DegenerateIntersection&) {
    return false;  // unresolved tangency: do not certify emptiness
  }
}

}  // namespace

std::vector<GeneralizedDisk> LowerBoundConfig::family() const {
  std::vector<GeneralizedDisk> all;
  all.push_back(inner);
  all.insert(all.end(), big.begin(), big.end());
  all.insert(all.end(), tangents.begin(), tangents.end());
  all.insert(all.end(), expanded.begin(), expanded.end());
  return all;
}

bool ConstructionReport::all_ok() const {
  auto every = [](const std::array<bool, 3>& a) { return a[0] && a[1] && a[2]; };
  return pairwise_intersecting && every(expanded_meets_all) && every(regions_disjoint) &&
         every(xi_outside) && tangency_points_distinct && big_triple_non_helly &&
         tangent_minus_triple_non_helly && every(disk_tangent_non_helly);
}

LowerBoundConfig build_config_unchecked(double eps1, double eps2) {
  LowerBoundConfig cfg;
  cfg.eps1 = eps1;
  cfg.eps2 = eps2;

  // Radius making {A, D1, D2, D3} mutually tangent: centers of the D_i at
  // distance 1+R from the origin and 120 degrees apart, so (1+R)*sqrt(3) = 2R.
  const double R = 3.0 + 2.0 * std::sqrt(3.0);
  cfg.inner = GeneralizedDisk::disk(0.0, 0.0, 1.0, 0);

  const double theta[3] = {kPi / 2.0, kPi / 2.0 + 2.0 * kPi / 3.0, kPi / 2.0 + 4.0 * kPi / 3.0};
  for (int i = 0; i < 3; ++i) {
    const double cx = std::cos(theta[i]), cy = std::sin(theta[i]);
    cfg.big[i] = GeneralizedDisk::disk((1.0 + R) * cx, (1.0 + R) * cy, R, 1 + i);
    cfg.xi[i] = {cx, cy};
  }

  // Outer common tangents of A and D_i touch the unit circle at angular
  // offset phi from the D_i direction, where cos(phi) = (1-R)/(1+R) = 1-sqrt(3).
  // The halfplane tangent at direction u is {p : u.p >= 1}. The minus label
  // goes to the offset -phi so that the contact points of T_i-, D_i, T_i+
  // appear counterclockwise on the unit circle.
  const double phi = std::acos(1.0 - std::sqrt(3.0));
  for (int i = 0; i < 3; ++i) {
    const double a_minus = theta[i] - phi;
    const double a_plus = theta[i] + phi;
    cfg.tangents[2 * i] =
        GeneralizedDisk::halfplane(-std::cos(a_minus), -std::sin(a_minus), -1.0, 4 + 2 * i);
    cfg.tangents[2 * i + 1] =
        GeneralizedDisk::halfplane(-std::cos(a_plus), -std::sin(a_plus), -1.0, 5 + 2 * i);
  }

  // A'_i: radius 1+eps1, externally tangent to D_i at xi_i (center at
  // -eps1 * xi_i); A_i rolls it clockwise along D_i until the disk itself
  // has turned by eps2, i.e. its center swings by eps2*(1+eps1)/(R+1+eps1)
  // about D_i's center. A center swing of eps2 itself would overshoot: the
  // disk would clear the nearest tangent halfplane (touch point 17.08
  // degrees away on the unit circle, margin eps1*(1-cos 17.08deg)) already
  // at eps2 around eps1/50.
  for (int i = 0; i < 3; ++i) {
    const Point c{-eps1 * cfg.xi[i].x, -eps1 * cfg.xi[i].y};
    const double swing = eps2 * (1.0 + eps1) / (R + 1.0 + eps1);
    const Point rolled = rotate_about(c, cfg.big[i].center, -swing);
    cfg.expanded[i] = GeneralizedDisk::disk(rolled.x, rolled.y, 1.0 + eps1, 10 + i);
  }
  return cfg;
}

LowerBoundConfig build_lower_bound(double eps1, double eps2, double tol) {
  if (!(eps1 > 0.0) || !(eps2 > 0.0) || eps1 > 0.05 || eps2 > eps1 / 5.0)
    throw BadEpsilons{"build_lower_bound: need 0 < eps2 <= eps1/5 and eps1 <= 0.05"};
  LowerBoundConfig cfg = build_config_unchecked(eps1, eps2);
  const ConstructionReport report = verify_construction(cfg, tol);
  if (!report.all_ok())
    throw BadEpsilons{"build_lower_bound: configuration fails its construction checks"};
  return cfg;
}

ConstructionReport verify_construction(const LowerBoundConfig& cfg, double tol) {
  ConstructionReport rep;
  const std::vector<GeneralizedDisk> all = cfg.family();

  rep.pairwise_intersecting = true;
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      if (!pairwise_intersects(all[i], all[j], tol)) rep.pairwise_intersecting = false;

  // The nine non-expanded partners of each A_i: D1..D3 and the six tangents.
  std::vector<GeneralizedDisk> others(all.begin() + 1, all.begin() + 10);
  for (int i = 0; i < 3; ++i) {
    const GeneralizedDisk& ai = cfg.expanded[i];

    rep.expanded_meets_all[i] = true;
    for (const GeneralizedDisk& g : all)
      if (g.id != ai.id && !pairwise_intersects(ai, g, tol)) rep.expanded_meets_all[i] = false;

    rep.regions_disjoint[i] = true;
    for (size_t x = 0; x < others.size(); ++x) {
      for (size_t y = x + 1; y < others.size(); ++y) {
        const GeneralizedDisk triple[3] = {ai, others[x], others[y]};
        if (!non_helly(triple, tol)) rep.regions_disjoint[i] = false;
      }
    }

    rep.xi_outside[i] = !contains(ai, cfg.xi[i], tol);
  }

  // Contact points on the unit circle: xi_i plus the six tangent touch
  // points (at -normal for each tangent halfplane).
  std::vector<Point> touch(cfg.xi.begin(), cfg.xi.end());
  for (const GeneralizedDisk& t : cfg.tangents) touch.push_back({-t.normal.x, -t.normal.y});
  rep.tangency_points_distinct = true;
  for (size_t i = 0; i < touch.size(); ++i)
    for (size_t j = i + 1; j < touch.size(); ++j)
      if (dist(touch[i], touch[j]) <= 10.0 * tol) rep.tangency_points_distinct = false;

  rep.big_triple_non_helly = non_helly(std::span(cfg.big.data(), 3), tol);
  {
    const GeneralizedDisk minus[3] = {cfg.tangents[0], cfg.tangents[2], cfg.tangents[4]};
    rep.tangent_minus_triple_non_helly = non_helly(minus, tol);
  }
  for (int i = 0; i < 3; ++i) {
    const GeneralizedDisk triple[3] = {cfg.big[i], cfg.tangents[2 * i], cfg.tangents[2 * i + 1]};
    rep.disk_tangent_non_helly[i] = non_helly(triple, tol);
  }
  return rep;
}

namespace {

using Mask = std::uint32_t;

struct Candidate {
  Point p;
  Mask covers = 0;
};

// Decision search: can `missing` be covered by at most `slots` candidates
// with index >= min_index? Branches on a member with the fewest remaining
// covering candidates.
bool coverable(const std::vector<Candidate>& cands, Mask missing, int slots, size_t min_index,
               const std::vector<std::vector<int>>& covers_member) {
  if (missing == 0) return true;
  if (slots == 0) return false;

  int best_member = -1;
  size_t best_count = SIZE_MAX;
  for (int m = 0; m < 32; ++m) {
    if (!(missing & (Mask{1} << m))) continue;
    size_t count = 0;
    for (int ci : covers_member[m])
      if (static_cast<size_t>(ci) >= min_index) ++count;
    if (count < best_count) {
      best_count = count;
      best_member = m;
    }
    if (count == 0) return false;
  }
  for (int ci : covers_member[best_member]) {
    if (static_cast<size_t>(ci) < min_index) continue;
    if (coverable(cands, missing & ~cands[ci].covers, slots - 1, min_index, covers_member))
      return true;
  }
  return false;
}

}  // namespace

std::optional<std::vector<Point>> min_pierce(std::span<const GeneralizedDisk> family, int k,
                                             double tol) {
  if (family.empty()) throw std::invalid_argument{"min_pierce: empty family"};
  if (family.size() > 20) throw TooLarge{"min_pierce: at most 20 objects"};
  if (k < 1 || k > 4) throw TooLarge{"min_pierce: k must be between 1 and 4"};
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!pairwise_intersects(family[i], family[j], tol))
        throw std::invalid_argument{"min_pierce: family is not pairwise intersecting"};

  const size_t n = family.size();
  const Mask full = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;

  std::vector<Candidate> cands;
  for (const Point& p : piercing_candidates(family, tol)) {
    Mask m = 0;
    for (size_t i = 0; i < n; ++i)
      if (contains(family[i], p, tol)) m |= Mask{1} << i;
    if (m != 0) cands.push_back({p, m});
  }
  // piercing_candidates returns points sorted by (x, y) already.

  std::vector<std::vector<int>> covers_member(n);
  for (size_t c = 0; c < cands.size(); ++c)
    for (size_t m = 0; m < n; ++m)
      if (cands[c].covers & (Mask{1} << m)) covers_member[m].push_back(static_cast<int>(c));

  int kstar = -1;
  for (int size = 1; size <= k; ++size) {
    if (coverable(cands, full, size, 0, covers_member)) {
      kstar = size;
      break;
    }
  }
  if (kstar < 0) return std::nullopt;

  // Lexicographically smallest cover of size kstar, built position by
  // position over the (x, y)-sorted candidates.
  std::vector<Point> result;
  Mask covered = 0;
  size_t min_index = 0;
  for (int pos = 0; pos < kstar; ++pos) {
    bool advanced = false;
    for (size_t c = min_index; c < cands.size(); ++c) {
      const Mask next = covered | cands[c].covers;
      if (next == covered) continue;
      if (coverable(cands, full & ~next, kstar - pos - 1, c + 1, covers_member)) {
        result.push_back(cands[c].p);
        covered = next;
        min_index = c + 1;
        advanced = true;
        break;
      }
    }
    assert(advanced);
    if (!advanced) return std::nullopt;
  }
  assert(covered == full);
  return result;
}

}  // namespace diskstab::lowerbound
