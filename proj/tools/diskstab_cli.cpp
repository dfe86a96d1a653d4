#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "diskstab/harness.hpp"
#include "diskstab/io.hpp"
#include "diskstab/lowerbound.hpp"
#include "diskstab/lptype.hpp"
#include "diskstab/stabbing.hpp"

namespace {

using namespace diskstab;

constexpr int kExitOk = 0;
constexpr int kExitNotFound = 1;  // verify failed / no piercing set
constexpr int kExitBadInput = 2;
constexpr int kExitVerificationFailed = 3;
constexpr int kExitTooLarge = 4;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io::ParseError{"cannot open input file: " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io::ParseError{"cannot open output file: " + path};
  out << text;
}

double default_tol() {
  if (const char* env = std::getenv("STAB_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return kDefaultTol;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stabbing pairwise intersecting disks with at most five points"};
  app.require_subcommand(1);

  double tol = default_tol();
  app.add_option("--tol", tol, "containment tolerance")->capture_default_str();

  std::string input, output, certificate_path;
  std::uint64_t seed = 0;
  std::string algorithm = "lptype";
  bool validate = false;
  double inflate = 0.0;
  int n = 50;
  double radius_spread = 2.0, slack = 0.05;
  double eps1 = 0.005, eps2 = 0.0005;
  int k = 3;

  auto* gen = app.add_subcommand("gen", "generate a random pairwise intersecting instance");
  gen->add_option("--n", n, "number of disks")->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--radius-spread", radius_spread, "max/min raw radius ratio");
  gen->add_option("--slack", slack, "overlap slack past pairwise tangency");
  gen->add_option("--output", output, "instance file (default stdout)");

  auto* stab = app.add_subcommand("stab", "compute a stabbing set of at most five points");
  stab->add_option("--input", input, "instance file (default stdin)");
  stab->add_option("--output", output, "certificate file (default stdout)");
  stab->add_option("--seed", seed, "solver seed");
  stab->add_option("--algorithm", algorithm, "lptype (expected linear) or sorted (n log n)")
      ->check(CLI::IsMember({"lptype", "sorted"}));
  stab->add_flag("--validate", validate, "check pairwise intersection up front (O(n^2))");
  stab->add_option("--inflate", inflate,
                   "grow radii/offsets by this amount first (for tangent instances)");

  auto* verify = app.add_subcommand("verify", "check a certificate against an instance");
  verify->add_option("--input", input, "instance file (default stdin)");
  verify->add_option("--certificate", certificate_path, "certificate file")->required();

  auto* pierce = app.add_subcommand("pierce", "exhaustively decide k-point pierceability");
  pierce->add_option("--input", input, "instance file (default stdin)");
  pierce->add_option("--k", k, "number of points")->required();

  auto* lower = app.add_subcommand("lowerbound",
                                   "emit the 13-object family that defeats three points");
  lower->add_option("--eps1", eps1, "expansion of the rolled disks");
  lower->add_option("--eps2", eps2, "rolling angle");
  lower->add_option("--output", output, "instance file (default stdout)");

  auto* render = app.add_subcommand("render", "draw an instance (and certificate) as SVG");
  render->add_option("--input", input, "instance file (default stdin)");
  render->add_option("--certificate", certificate_path, "certificate file (optional)");
  render->add_option("--output", output, "SVG file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      harness::InstanceSpec spec;
      spec.n = n;
      spec.seed = seed;
      spec.radius_spread = radius_spread;
      spec.slack = slack;
      write_output(output, io::write_instance(harness::random_instance(spec)));
      return kExitOk;
    }

    if (stab->parsed()) {
      const auto family = io::parse_instance(read_input(input));
      stabbing::StabOptions opts;
      opts.validate = validate;
      opts.tol = tol;
      opts.inflate_delta = inflate;
      const auto cert = algorithm == "sorted" ? stabbing::stab_five_sorted(family, opts)
                                              : stabbing::stab_five(family, seed, opts);
      write_output(output, io::write_certificate(cert));
      return kExitOk;
    }

    if (verify->parsed()) {
      const auto family = io::parse_instance(read_input(input));
      const auto cert = io::parse_certificate(read_input(certificate_path));
      std::vector<GeneralizedDisk> checked(family.begin(), family.end());
      for (auto& g : checked) {
        if (g.is_disk())
          g.radius += cert.delta;
        else
          g.offset += cert.delta;
      }
      const auto result = harness::verify_stabbing(checked, cert.points, tol);
      if (result.ok) {
        std::cout << "OK: " << cert.points.size() << " points stab all " << checked.size()
                  << " objects\n";
        return kExitOk;
      }
      std::cerr << "FAIL: object id " << result.first_failed_id << " is not stabbed\n";
      return kExitNotFound;
    }

    if (pierce->parsed()) {
      const auto family = io::parse_instance(read_input(input));
      const auto result = lowerbound::min_pierce(family, k, tol);
      if (!result) {
        std::cout << "NONE\n";
        return kExitNotFound;
      }
      std::ostringstream out;
      for (const Point& p : *result) {
        char bx[32], by[32];
        auto rx = std::to_chars(bx, bx + sizeof bx, p.x);
        auto ry = std::to_chars(by, by + sizeof by, p.y);
        out << std::string(bx, rx.ptr) << " " << std::string(by, ry.ptr) << "\n";
      }
      std::cout << out.str();
      return kExitOk;
    }

    if (lower->parsed()) {
      const auto cfg = lowerbound::build_lower_bound(eps1, eps2, tol);
      const auto report = lowerbound::verify_construction(cfg, tol);
      auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
      std::cerr << "pairwise intersecting: " << flag(report.pairwise_intersecting) << "\n";
      for (int i = 0; i < 3; ++i)
        std::cerr << "A" << i + 1 << ": meets all 12 " << flag(report.expanded_meets_all[i])
                  << ", regions disjoint " << flag(report.regions_disjoint[i])
                  << ", xi outside " << flag(report.xi_outside[i]) << "\n";
      std::cerr << "tangency points distinct: " << flag(report.tangency_points_distinct) << "\n"
                << "{D1,D2,D3} non-Helly: " << flag(report.big_triple_non_helly) << "\n"
                << "{T1-,T2-,T3-} non-Helly: " << flag(report.tangent_minus_triple_non_helly)
                << "\n";
      for (int i = 0; i < 3; ++i)
        std::cerr << "{D" << i + 1 << ",T" << i + 1 << "-,T" << i + 1
                  << "+} non-Helly: " << flag(report.disk_tangent_non_helly[i]) << "\n";
      write_output(output, io::write_instance(cfg.family()));
      return kExitOk;
    }

    if (render->parsed()) {
      const auto family = io::parse_instance(read_input(input));
      std::vector<Point> points;
      if (!certificate_path.empty())
        points = io::parse_certificate(read_input(certificate_path)).points;
      write_output(output, io::render_svg(family, points));
      return kExitOk;
    }
  } catch (const lowerbound::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitTooLarge;
  } catch (const stabbing::InternalVerificationFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
