#include <doctest.h>

#include "diskstab/harness.hpp"
#include "diskstab/io.hpp"
#include "diskstab/stabbing.hpp"

using namespace diskstab;

TEST_CASE("instance parsing is strict") {
  CHECK_THROWS_AS((void)io::parse_instance("{}"), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_instance(R"({"disks":[]})"), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_instance(R"({"disks":[], "extra":1})"), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_instance(R"({"disks":[{"cx":0,"cy":0}]})"), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_instance(R"({"disks":[{"cx":0,"cy":0,"r":0}]})"),
                  io::ParseError);
  CHECK_THROWS_AS((void)io::parse_instance(R"({"disks":[{"cx":0,"cy":0,"r":1,"z":2}]})"),
                  io::ParseError);
  CHECK_THROWS_AS(
      (void)io::parse_instance(R"({"disks":[],"halfplanes":[{"nx":1,"ny":1,"offset":0}]})"),
      io::ParseError);  // non-unit normal
  CHECK_THROWS_AS((void)io::parse_instance("not json"), io::ParseError);

  const auto only_half =
      io::parse_instance(R"({"disks":[],"halfplanes":[{"nx":0,"ny":1,"offset":0}]})");
  REQUIRE(only_half.size() == 1);
  CHECK(only_half[0].is_halfplane());
}

TEST_CASE("instance round-trips bitwise") {
  harness::InstanceSpec spec;
  spec.n = 9;
  spec.seed = 12345;
  auto fam = harness::random_instance(spec);
  fam.push_back(GeneralizedDisk::halfplane(0.6, -0.8, -1.25, static_cast<int>(fam.size())));

  const std::string text = io::write_instance(fam);
  const auto back = io::parse_instance(text);
  REQUIRE(back.size() == fam.size());
  for (size_t i = 0; i < fam.size(); ++i) {
    CHECK(back[i].kind == fam[i].kind);
    CHECK(back[i].id == static_cast<int>(i));
    if (fam[i].is_disk()) {
      CHECK(back[i].center.x == fam[i].center.x);
      CHECK(back[i].center.y == fam[i].center.y);
      CHECK(back[i].radius == fam[i].radius);
    } else {
      CHECK(back[i].normal.x == fam[i].normal.x);
      CHECK(back[i].offset == fam[i].offset);
    }
  }
  CHECK(io::write_instance(back) == text);
}

TEST_CASE("certificate round-trips") {
  stabbing::StabCertificate cert;
  cert.points = {{0.1, 0.2}, {3.5, -1.25}};
  cert.trace.helly_point = Point{3.5, -1.25};
  cert.trace.triple = {2, 5, 9};
  cert.trace.wide_pair = {9, 5};
  cert.trace.lens_angle = 2.2;
  cert.trace.companion = GeneralizedDisk::disk(1, 2, 3);
  cert.trace.four_points = {Point{0, 0}, Point{1, 0}, Point{0.5, -1}, Point{0.5, 1}};
  cert.delta = 1e-6;
  cert.seed = 42;
  cert.translation_dy = 2.75;

  const std::string text = io::write_certificate(cert);
  const auto back = io::parse_certificate(text);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[1].x == 3.5);
  REQUIRE(back.trace.triple.has_value());
  CHECK((*back.trace.triple)[2] == 9);
  REQUIRE(back.trace.wide_pair.has_value());
  CHECK((*back.trace.lens_angle) == 2.2);
  REQUIRE(back.trace.companion.has_value());
  CHECK(back.trace.companion->radius == 3.0);
  REQUIRE(back.trace.four_points.has_value());
  CHECK(back.delta == 1e-6);
  CHECK(back.seed == 42);
  CHECK(back.translation_dy == 2.75);
  CHECK(io::write_certificate(back) == text);

  CHECK_THROWS_AS((void)io::parse_certificate(R"({"points":[]})"), io::ParseError);
}

TEST_CASE("render_svg draws every disk as a circle element") {
  harness::InstanceSpec spec;
  spec.n = 6;
  spec.seed = 8;
  auto fam = harness::random_instance(spec);
  fam.push_back(GeneralizedDisk::halfplane(0, 1, 0, 6));
  const std::vector<Point> pts{{0.5, 0.5}, {0.25, 0.25}};

  const std::string svg = io::render_svg(fam, pts);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  size_t circles = 0;
  for (size_t pos = svg.find("<circle"); pos != std::string::npos;
       pos = svg.find("<circle", pos + 1))
    ++circles;
  CHECK(circles == 6);
  CHECK(svg.find("<polygon") != std::string::npos);  // clipped halfplane
  CHECK(svg.find("<path") != std::string::npos);     // crosses
}
