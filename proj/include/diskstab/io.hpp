#pragma once

#include <span>
#include <string>
#include <vector>

#include "diskstab/stabbing.hpp"

namespace diskstab::io {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Instance files are JSON documents
//   {"disks":[{"cx":..,"cy":..,"r":..}, ...],
//    "halfplanes":[{"nx":..,"ny":..,"offset":..}, ...]}
// with "halfplanes" optional. Parsing is strict: unknown keys are rejected,
// at least one object is required, radii must be positive and halfplane
// normals unit length within 1e-12. Object ids are positional: disks first,
// then halfplanes.
std::vector<GeneralizedDisk> parse_instance(const std::string& text);
std::string write_instance(std::span<const GeneralizedDisk> family);

// Certificate files carry the stabbing points, the derivation trace, the
// inflation delta, the seed and the internal vertical translation.
std::string write_certificate(const stabbing::StabCertificate& cert);
stabbing::StabCertificate parse_certificate(const std::string& text);

// SVG 1.1 drawing of the instance (one circle element per disk, halfplanes
// as hatched regions clipped to the viewport) and optional stabbing points
// drawn as crosses. The viewport is the bounding box of all finite objects
// and points plus a 10% margin.
std::string render_svg(std::span<const GeneralizedDisk> family, std::span<const Point> points);

}  // namespace diskstab::io
