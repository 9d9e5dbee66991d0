#include "rp2/render.hpp"

#include <array>
#include <cstdio>

namespace rp2 {

namespace {

constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#17becf", "#8c564b", "#e377c2"};

// Disk coordinates to SVG user units: [-1,1] maps to [10,410], y up.
std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}
std::string sx(const Rat& x) { return fmt(210.0 + 200.0 * x.get_d()); }
std::string sy(const Rat& y) { return fmt(210.0 - 200.0 * y.get_d()); }

}  // namespace

std::string render_svg(const BouquetDiagram& d) {
  std::string out =
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"420\" height=\"420\" viewBox=\"0 0 420 420\">\n"
      "<circle cx=\"210\" cy=\"210\" r=\"200\" fill=\"none\" stroke=\"#888888\" stroke-dasharray=\"4 3\"/>\n";
  for (int i = 0; i < d.n(); ++i) {
    const char* colour = kPalette[static_cast<std::size_t>(i) % kPalette.size()];
    for (const auto& leg : d.loop(i).legs) {
      out += "<polyline fill=\"none\" stroke=\"" + std::string(colour) + "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t k = 0; k < leg.points.size(); ++k) {
        if (k) out += ' ';
        out += sx(leg.points[k].x) + "," + sy(leg.points[k].y);
      }
      out += "\"/>\n";
    }
    const auto& legs = d.loop(i).legs;
    for (std::size_t k = 0; k + 1 < legs.size(); ++k) {
      for (const RatPoint* p : {&legs[k].points.back(), &legs[k + 1].points.front()}) {
        out += "<rect x=\"" + fmt(210.0 + 200.0 * p->x.get_d() - 3) + "\" y=\"" + fmt(210.0 - 200.0 * p->y.get_d() - 3) +
               "\" width=\"6\" height=\"6\" fill=\"" + colour + "\"/>\n";
      }
    }
  }
  if (is_valid(d)) {
    for (const auto& c : crossings(d)) {
      out += "<circle cx=\"" + sx(c.location.x) + "\" cy=\"" + sy(c.location.y) +
             "\" r=\"2.5\" fill=\"none\" stroke=\"#000000\"/>\n";
    }
  }
  out += "<circle cx=\"" + sx(d.vertex().x) + "\" cy=\"" + sy(d.vertex().y) + "\" r=\"4\" fill=\"#000000\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace rp2
