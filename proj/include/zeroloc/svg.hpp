#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

#include "zeroloc/localize.hpp"
#include "zeroloc/oracle.hpp"
#include "zeroloc/regions.hpp"

namespace zeroloc {

namespace detail {

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Canvas {
  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  bool touched = false;

  void include(double x, double y) {
    if (!touched) {
      min_x = max_x = x;
      min_y = max_y = y;
      touched = true;
    } else {
      min_x = std::min(min_x, x);
      max_x = std::max(max_x, x);
      min_y = std::min(min_y, y);
      max_y = std::max(max_y, y);
    }
  }
  void include(cx z) { include(z.real(), z.imag()); }
  void include(const Disc& d) {
    include(d.center.real() - d.radius, d.center.imag() - d.radius);
    include(d.center.real() + d.radius, d.center.imag() + d.radius);
  }

  // Square viewport, 10% margin, y axis flipped for SVG.
  double side = 800.0, scale = 1.0, cx0 = 0.0, cy0 = 0.0;
  void finalize() {
    if (!touched) include(0.0, 0.0);
    const double w = std::max(max_x - min_x, 1e-12), h = std::max(max_y - min_y, 1e-12);
    const double box = 1.1 * std::max(w, h);
    scale = side / box;
    cx0 = 0.5 * (min_x + max_x);
    cy0 = 0.5 * (min_y + max_y);
  }
  double px(double x) const { return 0.5 * side + (x - cx0) * scale; }
  double py(double y) const { return 0.5 * side - (y - cy0) * scale; }
};

inline void svg_circle(std::string& out, const Canvas& c, const Disc& d, const char* color, bool dashed = false) {
  out += "  <circle cx=\"" + fmt(c.px(d.center.real())) + "\" cy=\"" + fmt(c.py(d.center.imag())) + "\" r=\"" +
         fmt(d.radius * c.scale) + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"";
  if (dashed) out += " stroke-dasharray=\"6 4\"";
  out += "/>\n";
}

inline void svg_polyline(std::string& out, const Canvas& c, const std::vector<cx>& pts, const char* color) {
  out += "  <polyline fill=\"none\" stroke=\"";
  out += color;
  out += "\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += fmt(c.px(pts[i].real())) + "," + fmt(c.py(pts[i].imag()));
  }
  out += "\"/>\n";
}

inline void svg_marker(std::string& out, const Canvas& c, cx z, const char* color, bool asterisk) {
  const double x = c.px(z.real()), y = c.py(z.imag()), r = 5.0;
  if (asterisk) {
    for (int k = 0; k < 3; ++k) {
      const double a = std::numbers::pi * k / 3.0;
      out += "  <line x1=\"" + fmt(x - r * std::cos(a)) + "\" y1=\"" + fmt(y - r * std::sin(a)) + "\" x2=\"" +
             fmt(x + r * std::cos(a)) + "\" y2=\"" + fmt(y + r * std::sin(a)) + "\" stroke=\"" + color +
             "\" stroke-width=\"1.2\"/>\n";
    }
  } else {
    out += "  <circle cx=\"" + fmt(x) + "\" cy=\"" + fmt(y) + "\" r=\"2.5\" fill=\"" + color + "\"/>\n";
  }
}

/// Boundary of the square-root image of a disc: both branches of
/// sqrt(center + radius e^{it}), each a closed curve sample.
inline std::vector<cx> cassini_branch(const Disc& d, int sign, int samples = 256) {
  std::vector<cx> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  for (int i = 0; i <= samples; ++i) {
    const double t = 2.0 * std::numbers::pi * i / samples;
    const cx q = d.center + std::polar(d.radius, t);
    pts.push_back(static_cast<double>(sign) * std::sqrt(q));
  }
  return pts;
}

}  // namespace detail

/// One 800x800 picture of an isolation report: squared-plane discs with the
/// squares of the oracle roots as asterisks, plus the z-plane inclusion
/// regions (Cassini curves) with the roots themselves as dots.
inline std::string render_svg(const IsolationReport& rep, const RootSet& oracle) {
  std::vector<cx> roots = oracle.roots;
  if (rep.was_padded) roots.push_back(cx(0.0));

  detail::Canvas canvas;
  std::vector<std::vector<cx>> curves;
  for (const RegionGroup& g : rep.groups)
    for (const Disc& d : g.discs) {
      canvas.include(d);
      if (rep.squared_plane) {
        for (int sign : {+1, -1}) {
          curves.push_back(detail::cassini_branch(d, sign));
          for (cx z : curves.back()) canvas.include(z);
        }
      }
    }
  for (cx r : roots) {
    canvas.include(r);
    if (rep.squared_plane) canvas.include(r * r);
  }
  if (rep.gap && !rep.squared_plane) canvas.include(Disc{cx(0.0), rep.gap->hi});
  canvas.finalize();

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "  <rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  for (const RegionGroup& g : rep.groups)
    for (const Disc& d : g.discs) detail::svg_circle(out, canvas, d, rep.squared_plane ? "#1f77b4" : "#2ca02c");
  for (const auto& curve : curves) detail::svg_polyline(out, canvas, curve, "#2ca02c");
  if (rep.gap && !rep.squared_plane) {
    detail::svg_circle(out, canvas, Disc{cx(0.0), rep.gap->lo}, "#999999", true);
    detail::svg_circle(out, canvas, Disc{cx(0.0), rep.gap->hi}, "#999999", true);
  }
  for (cx r : roots) {
    if (rep.squared_plane) detail::svg_marker(out, canvas, r * r, "#d62728", true);
    detail::svg_marker(out, canvas, r, "#d62728", !rep.squared_plane);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace zeroloc
