#include "diskstab/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace diskstab::io {

namespace {

using json = nlohmann::ordered_json;

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const char* what) {
  if (!obj.is_object()) throw ParseError{std::string(what) + ": expected a JSON object"};
  for (const char* key : required)
    if (!obj.contains(key)) throw ParseError{std::string(what) + ": missing key '" + key + "'"};
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto known = [&](std::initializer_list<const char*> keys) {
      return std::any_of(keys.begin(), keys.end(),
                         [&](const char* k) { return it.key() == k; });
    };
    if (!known(required) && !known(optional))
      throw ParseError{std::string(what) + ": unknown key '" + it.key() + "'"};
  }
}

double get_finite(const json& obj, const char* key, const char* what) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw ParseError{std::string(what) + ": '" + key + "' must be a number"};
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError{std::string(what) + ": '" + key + "' must be finite"};
  return d;
}

json point_json(const Point& p) { return json{{"x", p.x}, {"y", p.y}}; }

Point parse_point(const json& obj, const char* what) {
  require_keys(obj, {"x", "y"}, {}, what);
  return {get_finite(obj, "x", what), get_finite(obj, "y", what)};
}

// Bounding box of disks and points; halfplanes are unbounded and contribute
// nothing.
struct Box {
  double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
  bool any = false;
  void add(double x, double y) {
    if (!any) {
      min_x = max_x = x;
      min_y = max_y = y;
      any = true;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
};

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::vector<GeneralizedDisk> parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError{std::string("instance: invalid JSON: ") + e.what()};
  }
  require_keys(doc, {"disks"}, {"halfplanes"}, "instance");
  if (!doc["disks"].is_array()) throw ParseError{"instance: 'disks' must be an array"};

  std::vector<GeneralizedDisk> family;
  int id = 0;
  for (const json& d : doc["disks"]) {
    require_keys(d, {"cx", "cy", "r"}, {}, "disk");
    const double r = get_finite(d, "r", "disk");
    if (!(r > 0)) throw ParseError{"disk: radius must be positive"};
    family.push_back(GeneralizedDisk::disk(get_finite(d, "cx", "disk"),
                                           get_finite(d, "cy", "disk"), r, id++));
  }
  if (doc.contains("halfplanes")) {
    if (!doc["halfplanes"].is_array())
      throw ParseError{"instance: 'halfplanes' must be an array"};
    for (const json& h : doc["halfplanes"]) {
      require_keys(h, {"nx", "ny", "offset"}, {}, "halfplane");
      const double nx = get_finite(h, "nx", "halfplane");
      const double ny = get_finite(h, "ny", "halfplane");
      if (std::abs(std::sqrt(nx * nx + ny * ny) - 1.0) > 1e-12)
        throw ParseError{"halfplane: normal must be unit length within 1e-12"};
      family.push_back(
          GeneralizedDisk::halfplane(nx, ny, get_finite(h, "offset", "halfplane"), id++));
    }
  }
  if (family.empty()) throw ParseError{"instance: at least one object is required"};
  return family;
}

std::string write_instance(std::span<const GeneralizedDisk> family) {
  json disks = json::array();
  json halfplanes = json::array();
  for (const GeneralizedDisk& g : family) {
    if (g.is_disk())
      disks.push_back(json{{"cx", g.center.x}, {"cy", g.center.y}, {"r", g.radius}});
    else
      halfplanes.push_back(json{{"nx", g.normal.x}, {"ny", g.normal.y}, {"offset", g.offset}});
  }
  json doc{{"disks", std::move(disks)}};
  if (!halfplanes.empty()) doc["halfplanes"] = std::move(halfplanes);
  return doc.dump(2) + "\n";
}

std::string write_certificate(const stabbing::StabCertificate& cert) {
  json points = json::array();
  for (const Point& p : cert.points) points.push_back(point_json(p));

  json trace = json::object();
  if (cert.trace.helly_point) trace["hellyPoint"] = point_json(*cert.trace.helly_point);
  if (cert.trace.triple)
    trace["triple"] = json::array({(*cert.trace.triple)[0], (*cert.trace.triple)[1],
                                   (*cert.trace.triple)[2]});
  if (cert.trace.wide_pair) {
    json wp{{"a", (*cert.trace.wide_pair)[0]}, {"b", (*cert.trace.wide_pair)[1]}};
    if (cert.trace.lens_angle) wp["lensAngle"] = *cert.trace.lens_angle;
    trace["widePair"] = std::move(wp);
  }
  if (cert.trace.companion) {
    const GeneralizedDisk& e = *cert.trace.companion;
    trace["companion"] = json{{"cx", e.center.x}, {"cy", e.center.y}, {"r", e.radius}};
  }
  if (cert.trace.four_points) {
    json fp = json::array();
    for (const Point& p : *cert.trace.four_points) fp.push_back(point_json(p));
    trace["fourPoints"] = std::move(fp);
  }

  json doc{{"points", std::move(points)},
           {"trace", std::move(trace)},
           {"delta", cert.delta},
           {"seed", cert.seed},
           {"translation", json{{"dy", cert.translation_dy}}}};
  return doc.dump(2) + "\n";
}

stabbing::StabCertificate parse_certificate(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError{std::string("certificate: invalid JSON: ") + e.what()};
  }
  require_keys(doc, {"points", "trace", "delta", "seed", "translation"}, {}, "certificate");

  stabbing::StabCertificate cert;
  if (!doc["points"].is_array() || doc["points"].empty() || doc["points"].size() > 5)
    throw ParseError{"certificate: 'points' must hold 1..5 points"};
  for (const json& p : doc["points"]) cert.points.push_back(parse_point(p, "point"));

  const json& trace = doc["trace"];
  require_keys(trace, {}, {"hellyPoint", "triple", "widePair", "companion", "fourPoints"},
               "trace");
  if (trace.contains("hellyPoint"))
    cert.trace.helly_point = parse_point(trace["hellyPoint"], "hellyPoint");
  if (trace.contains("triple")) {
    const json& t = trace["triple"];
    if (!t.is_array() || t.size() != 3) throw ParseError{"trace: 'triple' must hold 3 ids"};
    cert.trace.triple = {t[0].get<int>(), t[1].get<int>(), t[2].get<int>()};
  }
  if (trace.contains("widePair")) {
    const json& wp = trace["widePair"];
    require_keys(wp, {"a", "b"}, {"lensAngle"}, "widePair");
    cert.trace.wide_pair = {wp["a"].get<int>(), wp["b"].get<int>()};
    if (wp.contains("lensAngle")) cert.trace.lens_angle = get_finite(wp, "lensAngle", "widePair");
  }
  if (trace.contains("companion")) {
    const json& e = trace["companion"];
    require_keys(e, {"cx", "cy", "r"}, {}, "companion");
    cert.trace.companion = GeneralizedDisk::disk(
        get_finite(e, "cx", "companion"), get_finite(e, "cy", "companion"),
        get_finite(e, "r", "companion"));
  }
  if (trace.contains("fourPoints")) {
    const json& fp = trace["fourPoints"];
    if (!fp.is_array() || fp.size() != 4)
      throw ParseError{"trace: 'fourPoints' must hold 4 points"};
    std::array<Point, 4> pts;
    for (int i = 0; i < 4; ++i) pts[i] = parse_point(fp[i], "fourPoints");
    cert.trace.four_points = pts;
  }

  cert.delta = get_finite(doc, "delta", "certificate");
  cert.seed = doc["seed"].get<std::uint64_t>();
  require_keys(doc["translation"], {"dy"}, {}, "translation");
  cert.translation_dy = get_finite(doc["translation"], "dy", "translation");
  return cert;
}

std::string render_svg(std::span<const GeneralizedDisk> family, std::span<const Point> points) {
  Box box;
  for (const GeneralizedDisk& g : family) {
    if (!g.is_disk()) continue;
    box.add(g.center.x - g.radius, g.center.y - g.radius);
    box.add(g.center.x + g.radius, g.center.y + g.radius);
  }
  for (const Point& p : points) box.add(p.x, p.y);
  if (!box.any) box.add(-1, -1), box.add(1, 1);

  const double margin = 0.1 * std::max({box.max_x - box.min_x, box.max_y - box.min_y, 1e-6});
  const double x0 = box.min_x - margin, y0 = box.min_y - margin;
  const double w = box.max_x - box.min_x + 2 * margin;
  const double h = box.max_y - box.min_y + 2 * margin;
  const double stroke = 0.004 * std::max(w, h);

  std::ostringstream svg;
  // World y grows up; flip via a group transform and an adjusted viewBox.
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << fmt(x0)
      << " " << fmt(-(y0 + h)) << " " << fmt(w) << " " << fmt(h) << "\">\n"
      << "<defs>\n<pattern id=\"hatch\" width=\"" << fmt(stroke * 8) << "\" height=\""
      << fmt(stroke * 8) << "\" patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">"
      << "<line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"" << fmt(stroke * 8)
      << "\" stroke=\"#6688aa\" stroke-width=\"" << fmt(stroke) << "\"/></pattern>\n</defs>\n"
      << "<g transform=\"scale(1,-1)\">\n";

  // Halfplane regions clipped against the viewport rectangle.
  for (const GeneralizedDisk& g : family) {
    if (!g.is_halfplane()) continue;
    std::vector<Point> poly{{x0, y0}, {x0 + w, y0}, {x0 + w, y0 + h}, {x0, y0 + h}};
    std::vector<Point> clipped;
    for (size_t i = 0; i < poly.size(); ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % poly.size()];
      const double da = signed_distance(g, a), db = signed_distance(g, b);
      if (da <= 0) clipped.push_back(a);
      if ((da < 0) != (db < 0)) {
        const double t = da / (da - db);
        clipped.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
      }
    }
    if (clipped.size() < 3) continue;
    svg << "<polygon points=\"";
    for (size_t i = 0; i < clipped.size(); ++i)
      svg << (i ? " " : "") << fmt(clipped[i].x) << "," << fmt(clipped[i].y);
    svg << "\" fill=\"url(#hatch)\" stroke=\"#336\" stroke-width=\"" << fmt(stroke) << "\"/>\n";
  }

  for (const GeneralizedDisk& g : family) {
    if (!g.is_disk()) continue;
    svg << "<circle cx=\"" << fmt(g.center.x) << "\" cy=\"" << fmt(g.center.y) << "\" r=\""
        << fmt(g.radius) << "\" fill=\"none\" stroke=\"#333\" stroke-width=\"" << fmt(stroke)
        << "\"/>\n";
  }

  const double cross = stroke * 5;
  for (const Point& p : points) {
    svg << "<path d=\"M " << fmt(p.x - cross) << " " << fmt(p.y) << " L " << fmt(p.x + cross)
        << " " << fmt(p.y) << " M " << fmt(p.x) << " " << fmt(p.y - cross) << " L " << fmt(p.x)
        << " " << fmt(p.y + cross) << "\" stroke=\"#c22\" stroke-width=\"" << fmt(stroke * 1.5)
        << "\" fill=\"none\"/>\n";
  }

  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace diskstab::io
