#pragma once

// Diagram JSON:
//   {"n": 1, "vertex": [xn, xd, yn, yd],
//    "loops": [{"legs": [[[xn, xd, yn, yd], ...], ...]}]}
// Every coordinate is an integer pair of arbitrary size. Rationals are written
// in lowest terms, so parse(serialize(d)) == d and serialize is byte-stable.

#include <string>
#include <string_view>

#include "rp2/diagram.hpp"

namespace rp2 {

std::string to_json(const BouquetDiagram& d);

// Structural parse only; validity is checked separately. Throws ParseError.
BouquetDiagram diagram_from_json(std::string_view text);

BouquetDiagram load_diagram(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string load_text(const std::string& path);

}  // namespace rp2
