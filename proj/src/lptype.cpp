#include "diskstab/lptype.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "diskstab/rng.hpp"

namespace diskstab::lptype {

namespace {

// Lowest point of a disk (its extreme point for the ground halfplane).
Point lowest_point(const GeneralizedDisk& d) {
  return {d.center.x, d.center.y - d.radius};
}

// Point of the single disk d closest to the destroyer. For a halfplane
// destroyer this is the boundary point in direction -normal; for a disk
// destroyer the boundary point toward its center.
Point single_disk_minimizer(const GeneralizedDisk& d, const GeneralizedDisk& destroyer) {
  if (destroyer.is_halfplane())
    return {d.center.x - d.radius * destroyer.normal.x,
            d.center.y - d.radius * destroyer.normal.y};
  const double c2c = dist(d.center, destroyer.center);
  assert(c2c > 0);
  const double s = d.radius / c2c;
  return {d.center.x + s * (destroyer.center.x - d.center.x),
          d.center.y + s * (destroyer.center.y - d.center.y)};
}

struct DistEval {
  Point extreme{};
  double dist = std::numeric_limits<double>::infinity();
};

// Minimizer of the distance to `destroyer` over the intersection of a Helly
// set of disks. The minimum lies on the intersection's boundary, so it is
// either a single disk's circle minimizer (when that point is in all other
// disks) or a vertex of some pair's lens (when that vertex is in all other
// disks). Enumerating those candidates is exact for disks in general
// position and is how both the subset evaluator and the brute-force
// reference compute dist().
DistEval min_distance_point(std::span<const GeneralizedDisk> helly_set,
                            const GeneralizedDisk& destroyer, double tol) {
  DistEval best;
  bool found = false;
  auto consider = [&](const Point& p) {
    for (const GeneralizedDisk& g : helly_set)
      if (!contains(g, p, tol)) return;
    const double d = distance_to(destroyer, p);
    if (!found || d < best.dist || (d == best.dist && point_less(p, best.extreme))) {
      best = {p, d};
      found = true;
    }
  };

  for (const GeneralizedDisk& g : helly_set) consider(single_disk_minimizer(g, destroyer));
  for (size_t i = 0; i < helly_set.size(); ++i)
    for (size_t j = i + 1; j < helly_set.size(); ++j)
      for (const Point& v : boundary_intersection_points(helly_set[i], helly_set[j], tol))
        consider(v);

  if (!found) throw NotHelly{"no common point found for the given disk set"};
  return best;
}

Weight make_weight(const GeneralizedDisk& destroyer, double distance) {
  Weight w;
  w.rad = order_radius(destroyer);
  w.destroyer_id = destroyer.id;
  w.neg_dist = -distance;
  return w;
}

}  // namespace

Point extreme_point(std::span<const GeneralizedDisk> helly_disks,
                    const GeneralizedDisk& destroyer, double tol) {
  assert(helly_disks.size() >= 1 && helly_disks.size() <= 2);
  if (helly_disks.size() == 2 &&
      !pairwise_intersects(helly_disks[0], helly_disks[1], tol))
    throw NotHelly{"extreme_point: the two disks do not intersect"};
  return min_distance_point(helly_disks, destroyer, tol).extreme;
}

bool helly3(const GeneralizedDisk& a, const GeneralizedDisk& b, const GeneralizedDisk& c,
            double tol) {
  const GeneralizedDisk* g[3] = {&a, &b, &c};
  auto in_all = [&](const Point& p) {
    return contains(a, p, tol) && contains(b, p, tol) && contains(c, p, tol);
  };
  for (int i = 0; i < 3; ++i) {
    if (in_all(g[i]->center)) return true;
    for (int j = i + 1; j < 3; ++j)
      for (const Point& v : boundary_intersection_points(*g[i], *g[j], tol))
        if (in_all(v)) return true;
  }
  return false;
}

ViolationResult violation_test(std::span<const GeneralizedDisk> candidate,
                               const GeneralizedDisk& e, double tol,
                               ViolationDiagnostics* diag) {
  auto note_boundary = [&](const GeneralizedDisk& g, const Point& p) {
    if (diag && std::abs(signed_distance(g, p)) <= 10.0 * tol) ++diag->near_boundary;
  };

  if (candidate.empty()) return ViolationResult::Violates;
  if (candidate.size() > 3) return ViolationResult::NotABasis;

  if (candidate.size() == 1) {
    const Point v = lowest_point(candidate[0]);
    note_boundary(e, v);
    return contains(e, v, tol) ? ViolationResult::NoViolation : ViolationResult::Violates;
  }

  if (candidate.size() == 2) {
    if (!pairwise_intersects(candidate[0], candidate[1], tol)) return ViolationResult::NotABasis;
    // A pair is only a basis when the lowest point of the lens is a vertex,
    // i.e. comes from both disks.
    for (int i = 0; i < 2; ++i) {
      const Point m = lowest_point(candidate[i]);
      note_boundary(candidate[1 - i], m);
      if (contains(candidate[1 - i], m, tol)) return ViolationResult::NotABasis;
    }
    const Point v = extreme_point(candidate, GeneralizedDisk::ground(), tol);
    note_boundary(e, v);
    return contains(e, v, tol) ? ViolationResult::NoViolation : ViolationResult::Violates;
  }

  // Triple case.
  std::vector<GeneralizedDisk> t(candidate.begin(), candidate.end());
  std::sort(t.begin(), t.end(), tie_less);
  if (helly3(t[0], t[1], t[2], tol)) return ViolationResult::NotABasis;
  const GeneralizedDisk& destroyer = t[2];
  if (!tie_less(e, destroyer)) return ViolationResult::NoViolation;
  const GeneralizedDisk pair[2] = {t[0], t[1]};
  const Point v = extreme_point(pair, destroyer, tol);
  note_boundary(e, v);
  return contains(e, v, tol) ? ViolationResult::NoViolation : ViolationResult::Violates;
}

SubsetEval evaluate_subset(std::vector<GeneralizedDisk> disks, double tol) {
  assert(!disks.empty() && disks.size() <= 3);
  std::sort(disks.begin(), disks.end(), tie_less);

  size_t destroyer_index = disks.size();  // past the end = Helly, ground destroys
  if (disks.size() == 3 && !helly3(disks[0], disks[1], disks[2], tol)) destroyer_index = 2;
  // Prefixes of size 1 and 2 of a pairwise intersecting family are Helly.

  SubsetEval eval;
  eval.destroyer =
      destroyer_index == disks.size() ? GeneralizedDisk::ground() : disks[destroyer_index];
  const std::span<const GeneralizedDisk> prefix(disks.data(),
                                                std::min(destroyer_index, disks.size()));
  const DistEval de = min_distance_point(prefix, eval.destroyer, tol);
  eval.extreme = de.extreme;
  eval.weight = make_weight(eval.destroyer, de.dist);
  return eval;
}

Basis extend_basis(const Basis& basis, const GeneralizedDisk& violator, double tol) {
  std::vector<GeneralizedDisk> pool = basis.disks;
  pool.push_back(violator);

  const size_t n = pool.size();
  std::vector<std::vector<GeneralizedDisk>> subsets;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > 3) continue;
    std::vector<GeneralizedDisk> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) s.push_back(pool[i]);
    subsets.push_back(std::move(s));
  }
  auto has_violator = [&](const std::vector<GeneralizedDisk>& s) {
    return std::any_of(s.begin(), s.end(),
                       [&](const GeneralizedDisk& g) { return g.id == violator.id; });
  };
  std::sort(subsets.begin(), subsets.end(),
            [&](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              const bool va = has_violator(a), vb = has_violator(b);
              if (va != vb) return va;
              for (size_t i = 0; i < a.size(); ++i)
                if (a[i].id != b[i].id) return a[i].id < b[i].id;
              return false;
            });

  Basis best;
  bool found = false;
  for (auto& s : subsets) {
    SubsetEval eval = evaluate_subset(s, tol);
    if (!found || weight_less(eval.weight, best.weight, tol)) {
      std::sort(s.begin(), s.end(), tie_less);
      best.disks = std::move(s);
      best.weight = eval.weight;
      best.destroyer = eval.destroyer;
      best.extreme = eval.extreme;
      found = true;
    }
  }
  return best;
}

double lift_amount(std::span<const GeneralizedDisk> family, double margin) {
  double min_low = std::numeric_limits<double>::infinity();
  for (const GeneralizedDisk& g : family)
    if (g.is_disk()) min_low = std::min(min_low, g.center.y - g.radius);
  if (!std::isfinite(min_low)) return 0.0;
  return std::max(0.0, margin - min_low);
}

std::vector<GeneralizedDisk> translated(std::span<const GeneralizedDisk> family, double dy) {
  std::vector<GeneralizedDisk> out(family.begin(), family.end());
  for (GeneralizedDisk& g : out) {
    if (g.is_disk())
      g.center.y += dy;
    else
      g.offset += dy * g.normal.y;
  }
  return out;
}

BruteResult weight_brute(std::span<const GeneralizedDisk> family, double tol) {
  if (family.empty()) throw InvalidInstance{"weight_brute: empty family"};
  if (family.size() > 12)
    throw InvalidInstance{"weight_brute: reference oracle is capped at 12 disks"};
  for (const GeneralizedDisk& g : family)
    if (!g.is_disk()) throw InvalidInstance{"weight_brute: disks only"};
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!pairwise_intersects(family[i], family[j], tol))
        throw InvalidInstance{"weight_brute: family is not pairwise intersecting"};

  const double dy = lift_amount(family);
  std::vector<GeneralizedDisk> disks = translated(family, dy);
  std::sort(disks.begin(), disks.end(), tie_less);

  // First tie-order prefix with empty intersection identifies the destroyer.
  size_t destroyer_index = disks.size();
  for (size_t k = 1; k <= disks.size(); ++k) {
    if (!intersection_witness(std::span(disks.data(), k), tol)) {
      destroyer_index = k - 1;
      break;
    }
  }

  const GeneralizedDisk destroyer =
      destroyer_index == disks.size() ? GeneralizedDisk::ground() : disks[destroyer_index];
  const std::span<const GeneralizedDisk> prefix(disks.data(),
                                                std::min(destroyer_index, disks.size()));
  const DistEval de = min_distance_point(prefix, destroyer, tol);

  BruteResult result;
  result.translation_dy = dy;
  result.weight = make_weight(destroyer, de.dist);

  // Minimal subset of equal weight, by enumeration over sizes 1..3.
  bool found = false;
  for (size_t size = 1; size <= 3 && !found; ++size) {
    std::vector<size_t> pick(size);
    auto rec = [&](auto&& self, size_t start, size_t depth) -> bool {
      if (depth == size) {
        std::vector<GeneralizedDisk> s;
        for (size_t p : pick) s.push_back(disks[p]);
        SubsetEval eval = evaluate_subset(s, tol);
        if (weight_equal(eval.weight, result.weight, tol)) {
          result.basis.disks = std::move(s);
          result.basis.weight = eval.weight;
          result.basis.destroyer = eval.destroyer;
          result.basis.extreme = eval.extreme;
          return true;
        }
        return false;
      }
      for (size_t i = start; i < disks.size(); ++i) {
        pick[depth] = i;
        if (self(self, i + 1, depth + 1)) return true;
      }
      return false;
    };
    found = rec(rec, 0, 0);
  }
  if (!found) throw Degenerate{"weight_brute: no subset of size <= 3 matches the family weight"};

  // Report basis geometry in the caller's frame.
  result.basis.disks = translated(result.basis.disks, -dy);
  result.basis.extreme.y -= dy;
  return result;
}

SolveOutcome solve(std::span<const GeneralizedDisk> family, std::uint64_t seed,
                   const SolveOptions& options) {
  const double tol = options.tol;
  if (family.empty()) throw InvalidInstance{"solve: empty family"};
  for (const GeneralizedDisk& g : family)
    if (!g.is_disk()) throw InvalidInstance{"solve: disks only (halfplanes unsupported)"};
  if (options.validate) {
    for (size_t i = 0; i < family.size(); ++i)
      for (size_t j = i + 1; j < family.size(); ++j)
        if (!pairwise_intersects(family[i], family[j], tol))
          throw InvalidInstance{"solve: family is not pairwise intersecting"};
  }
  {
    // The tie order needs pairwise distinct (radius, id) keys. Distinct ids
    // are sufficient and checkable in linear time for the usual dense id
    // ranges; otherwise fall back to exact duplicate detection.
    int min_id = std::numeric_limits<int>::max();
    int max_id = std::numeric_limits<int>::min();
    for (const GeneralizedDisk& g : family) {
      min_id = std::min(min_id, g.id);
      max_id = std::max(max_id, g.id);
    }
    const long long span = static_cast<long long>(max_id) - min_id + 1;
    bool ids_unique = false;
    if (span <= 4 * static_cast<long long>(family.size())) {
      std::vector<bool> seen(static_cast<size_t>(span), false);
      ids_unique = true;
      for (const GeneralizedDisk& g : family) {
        const size_t k = static_cast<size_t>(g.id - min_id);
        if (seen[k]) {
          ids_unique = false;
          break;
        }
        seen[k] = true;
      }
    }
    if (!ids_unique) {
      std::vector<std::pair<double, int>> keys;
      keys.reserve(family.size());
      for (const GeneralizedDisk& g : family) keys.emplace_back(g.radius, g.id);
      std::sort(keys.begin(), keys.end());
      if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw Degenerate{"solve: two disks share radius and id; tie-breaking needs unique ids"};
    }
  }

  const double dy = lift_amount(family);

  // Compact per-disk record for the scan: the restart passes are memory
  // bound, so the hot loop reads 32 bytes per element instead of a full
  // GeneralizedDisk.
  struct HotDisk {
    double x, y, r;
    int id;
  };
  std::vector<HotDisk> work;
  work.reserve(family.size());
  for (const GeneralizedDisk& g : family)
    work.push_back({g.center.x, g.center.y + dy, g.radius, g.id});
  const size_t n = work.size();

  SplitMix64 rng(seed);
  shuffle(work, rng);

  ViolationDiagnostics diag;
  Basis basis;  // empty: weight sentinel (inf, ground, +inf), violated by everything

  // Cyclic scan in shuffled order. A violation triggers a brute-force basis
  // extension and resets the clean counter; the scan finishes once a full
  // lap passes with no accepted extension, i.e. every element was checked
  // against the final basis. Each accepted extension strictly decreases the
  // weight, so no cycling is possible; an extension that fails to decrease
  // it (tolerance disagreement at a boundary) is dropped and the element
  // treated as non-violating.
  size_t pos = 0, clean = 0;
  while (clean < n) {
    const HotDisk& e = work[pos];
    bool violates;
    if (basis.disks.empty()) {
      violates = true;
    } else if (basis.disks.size() == 3 &&
               (basis.destroyer.radius < e.r ||
                (basis.destroyer.radius == e.r && basis.destroyer.id <= e.id))) {
      violates = false;  // e is at or after the destroyer in tie order
    } else {
      const double ex = basis.extreme.x - e.x, ey = basis.extreme.y - e.y;
      const double d2 = ex * ex + ey * ey;
      const double band_in = std::max(0.0, e.r - 10.0 * tol);
      const double band_out = e.r + 10.0 * tol;
      if (d2 >= band_in * band_in && d2 <= band_out * band_out) ++diag.near_boundary;
      const double rr = e.r + tol;
      violates = d2 > rr * rr;
    }
    if (violates) {
      Basis extended = extend_basis(basis, GeneralizedDisk::disk(e.x, e.y, e.r, e.id), tol);
      if (weight_less(extended.weight, basis.weight, 0.0)) {
        basis = std::move(extended);
        clean = 0;
        continue;  // recheck e against the new basis
      }
    }
    ++clean;
    pos = pos + 1 == n ? 0 : pos + 1;
  }

  SolveOutcome out;
  out.weight = basis.weight;
  out.translation_dy = dy;
  out.near_boundary_events = diag.near_boundary;
  out.helly = !std::isfinite(basis.weight.rad) ? true : false;
  if (out.helly) {
    const Point v = basis.extreme;
    for (const HotDisk& g : work) {
      const double rr = g.r + 10.0 * tol;
      const double gx = v.x - g.x, gy = v.y - g.y;
      if (gx * gx + gy * gy > rr * rr)
        throw Degenerate{"solve: computed common point misses a disk beyond tolerance"};
    }
    out.helly_point = {v.x, v.y - dy};
  } else {
    if (basis.disks.size() != 3)
      throw Degenerate{"solve: non-Helly verdict without a triple basis"};
    out.smallest_destroyer = basis.destroyer;
    out.smallest_destroyer.center.y -= dy;
  }
  out.basis = basis;
  out.basis.disks = translated(basis.disks, -dy);
  out.basis.extreme.y -= dy;
  if (out.basis.destroyer.is_disk()) out.basis.destroyer.center.y -= dy;
  return out;
}

}  // namespace diskstab::lptype
