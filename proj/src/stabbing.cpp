#include "diskstab/stabbing.hpp"

#include <algorithm>
#include <cassert>

#include "diskstab/harness.hpp"

namespace diskstab::stabbing {

namespace {

using lptype::tie_less;

std::vector<GeneralizedDisk> inflate(std::span<const GeneralizedDisk> family, double delta) {
  std::vector<GeneralizedDisk> out(family.begin(), family.end());
  for (GeneralizedDisk& g : out) {
    if (g.is_disk())
      g.radius += delta;
    else
      g.offset += delta;
  }
  return out;
}

void validate_pairwise(std::span<const GeneralizedDisk> family, double tol) {
  for (size_t i = 0; i < family.size(); ++i)
    for (size_t j = i + 1; j < family.size(); ++j)
      if (!pairwise_intersects(family[i], family[j], tol))
        throw lptype::InvalidInstance{"family is not pairwise intersecting (ids " +
                                      std::to_string(family[i].id) + ", " +
                                      std::to_string(family[j].id) + ")"};
}

// Certificate assembly shared by both algorithms once the non-Helly triple
// and the point q for the smaller disks are known.
StabCertificate finish_certificate(std::span<const GeneralizedDisk> triple, const Point& q,
                                   double tol, bool check_non_helly) {
  const WidePair wide = widest_lens_pair(triple, tol, check_non_helly);
  const FourPoints fp = four_point_set(wide.first, wide.second, tol);

  StabCertificate cert;
  cert.points.assign(fp.points.begin(), fp.points.end());
  cert.points.push_back(q);
  std::array<int, 3> ids{triple[0].id, triple[1].id, triple[2].id};
  cert.trace.triple = ids;
  cert.trace.wide_pair = {wide.first.id, wide.second.id};
  cert.trace.lens_angle = wide.angle;
  cert.trace.companion = fp.companion;
  cert.trace.four_points = fp.points;
  cert.trace.helly_point = q;
  return cert;
}

void run_verification(std::span<const GeneralizedDisk> family, const StabCertificate& cert,
                      double tol) {
  const auto check = harness::verify_stabbing(family, cert.points, tol);
  if (!check.ok) throw InternalVerificationFailed{check.first_failed_id};
}

}  // namespace

WidePair widest_lens_pair(std::span<const GeneralizedDisk> triple, double tol,
                          bool check_non_helly) {
  assert(triple.size() == 3);
  if (check_non_helly && intersection_witness(triple, tol)) throw HellyTriple{};

  WidePair best;
  bool found = false;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double angle = lens_angle(triple[i], triple[j], tol);
      auto sorted_ids = [](const GeneralizedDisk& a, const GeneralizedDisk& b) {
        return std::make_pair(std::min(a.id, b.id), std::max(a.id, b.id));
      };
      const bool better =
          !found || angle > best.angle ||
          (angle == best.angle &&
           sorted_ids(triple[i], triple[j]) < sorted_ids(best.first, best.second));
      if (better) {
        const bool i_larger = tie_less(triple[j], triple[i]);
        best.first = i_larger ? triple[i] : triple[j];
        best.second = i_larger ? triple[j] : triple[i];
        best.angle = angle;
        found = true;
      }
    }
  }
  if (best.angle < kWideAngle - tol)
    throw PreconditionViolated{"widest lens angle below 2*pi/3; triple is not non-Helly"};
  return best;
}

GeneralizedDisk companion_disk(const GeneralizedDisk& d1, const GeneralizedDisk& d2,
                               double tol) {
  assert(d1.is_disk() && d2.is_disk());
  if (d1.radius < d2.radius)
    throw PreconditionViolated{"companion_disk: first disk must have the larger radius"};
  const double angle = lens_angle(d1, d2, tol);
  if (angle < kWideAngle - tol)
    throw PreconditionViolated{"companion_disk: lens angle below 2*pi/3"};

  const double d = dist(d1.center, d2.center);
  assert(d > 0);
  const double s = std::sqrt(3.0) * d1.radius / d;
  GeneralizedDisk e = GeneralizedDisk::disk(d1.center.x + s * (d2.center.x - d1.center.x),
                                            d1.center.y + s * (d2.center.y - d1.center.y),
                                            d1.radius);
  return e;
}

FourPoints four_point_set(const GeneralizedDisk& d1, const GeneralizedDisk& d2, double tol) {
  const GeneralizedDisk e = companion_disk(d1, d2, tol);
  const Point c1 = d1.center;
  const Point c = e.center;
  const Point mid{(c1.x + c.x) / 2.0, (c1.y + c.y) / 2.0};
  const double d = dist(c1, c);
  const Point u{(c.x - c1.x) / d, (c.y - c1.y) / d};
  const Point perp{-u.y, u.x};
  const double r = d1.radius;
  FourPoints fp;
  fp.points = {c1, c, Point{mid.x - r * perp.x, mid.y - r * perp.y},
               Point{mid.x + r * perp.x, mid.y + r * perp.y}};
  fp.companion = e;
  return fp;
}

StabCertificate stab_five(std::span<const GeneralizedDisk> family, std::uint64_t seed,
                          const StabOptions& options) {
  if (family.empty()) throw lptype::InvalidInstance{"stab_five: empty family"};
  const std::vector<GeneralizedDisk> fam =
      options.inflate_delta != 0.0 ? inflate(family, options.inflate_delta)
                                   : std::vector<GeneralizedDisk>(family.begin(), family.end());
  if (options.validate) validate_pairwise(fam, options.tol);

  std::vector<GeneralizedDisk> disks, halfplanes;
  for (const GeneralizedDisk& g : fam) (g.is_disk() ? disks : halfplanes).push_back(g);
  if (disks.empty())
    throw lptype::InvalidInstance{"stab_five: at least one disk member is required"};

  lptype::SolveOptions sopt;
  sopt.tol = options.tol;
  const lptype::SolveOutcome out = lptype::solve(disks, seed, sopt);

  StabCertificate cert;
  if (out.helly) {
    if (!halfplanes.empty())
      throw lptype::InvalidInstance{
          "stab_five: halfplane members require a non-Helly disk subfamily"};
    cert.points = {out.helly_point};
    cert.trace.helly_point = out.helly_point;
  } else {
    std::vector<GeneralizedDisk> prefix;
    for (const GeneralizedDisk& g : disks)
      if (tie_less(g, out.smallest_destroyer)) prefix.push_back(g);
    const lptype::SolveOutcome qout = lptype::solve(prefix, seed + 1, sopt);
    if (!qout.helly)
      throw lptype::Degenerate{"stab_five: pre-destroyer disks unexpectedly non-Helly"};
    cert = finish_certificate(out.basis.disks, qout.helly_point, options.tol, options.verify);
  }

  cert.delta = options.inflate_delta;
  cert.seed = seed;
  cert.translation_dy = out.translation_dy;
  if (options.verify) run_verification(fam, cert, options.tol);
  return cert;
}

StabCertificate stab_five_sorted(std::span<const GeneralizedDisk> family,
                                 const StabOptions& options) {
  if (family.empty()) throw lptype::InvalidInstance{"stab_five_sorted: empty family"};
  const std::vector<GeneralizedDisk> fam =
      options.inflate_delta != 0.0 ? inflate(family, options.inflate_delta)
                                   : std::vector<GeneralizedDisk>(family.begin(), family.end());
  if (options.validate) validate_pairwise(fam, options.tol);

  std::vector<GeneralizedDisk> disks, halfplanes;
  for (const GeneralizedDisk& g : fam) (g.is_disk() ? disks : halfplanes).push_back(g);
  if (disks.empty())
    throw lptype::InvalidInstance{"stab_five_sorted: at least one disk member is required"};
  std::sort(disks.begin(), disks.end(), tie_less);

  lptype::SolveOptions sopt;
  sopt.tol = options.tol;
  std::uint64_t oracle_seed = 0x5eed5eed5eed5eedULL;
  auto helly_prefix = [&](size_t k) {
    return lptype::solve(std::span(disks.data(), k), oracle_seed++, sopt).helly;
  };

  StabCertificate cert;
  const size_t n = disks.size();
  if (helly_prefix(n)) {
    if (!halfplanes.empty())
      throw lptype::InvalidInstance{
          "stab_five_sorted: halfplane members require a non-Helly disk subfamily"};
    const lptype::SolveOutcome out = lptype::solve(disks, oracle_seed++, sopt);
    cert.points = {out.helly_point};
    cert.trace.helly_point = out.helly_point;
    cert.translation_dy = out.translation_dy;
  } else {
    // Smallest prefix length whose intersection is empty.
    size_t lo = 3, hi = n;  // prefixes of length <= 2 are always Helly
    while (lo < hi) {
      const size_t mid = lo + (hi - lo) / 2;
      if (helly_prefix(mid))
        lo = mid + 1;
      else
        hi = mid;
    }
    const size_t istar = lo;  // 1-based length; destroyer index istar-1
    const GeneralizedDisk dstar = disks[istar - 1];

    // Smallest k with {dstar, disks[0..k)} non-Helly.
    auto helly_with_dstar = [&](size_t k) {
      std::vector<GeneralizedDisk> s(disks.begin(), disks.begin() + k);
      s.push_back(dstar);
      return lptype::solve(s, oracle_seed++, sopt).helly;
    };
    lo = 2;
    hi = istar - 1;
    while (lo < hi) {
      const size_t mid = lo + (hi - lo) / 2;
      if (helly_with_dstar(mid))
        lo = mid + 1;
      else
        hi = mid;
    }
    const GeneralizedDisk dk = disks[lo - 1];

    // Some earlier disk closes a non-Helly triple with dk and dstar.
    size_t j = lo - 1;
    bool found = false;
    for (size_t i = 0; i + 1 < lo; ++i) {
      if (!lptype::helly3(disks[i], dk, dstar, options.tol)) {
        j = i;
        found = true;
        break;
      }
    }
    if (!found)
      throw lptype::Degenerate{"stab_five_sorted: no triple closes the non-Helly prefix"};

    const lptype::SolveOutcome qout =
        lptype::solve(std::span(disks.data(), istar - 1), oracle_seed++, sopt);
    if (!qout.helly)
      throw lptype::Degenerate{"stab_five_sorted: pre-destroyer disks unexpectedly non-Helly"};

    std::vector<GeneralizedDisk> triple{disks[j], dk, dstar};
    cert = finish_certificate(triple, qout.helly_point, options.tol, options.verify);
    cert.translation_dy = qout.translation_dy;
  }

  cert.delta = options.inflate_delta;
  cert.seed = 0;
  if (options.verify) run_verification(fam, cert, options.tol);
  return cert;
}

}  // namespace diskstab::stabbing
