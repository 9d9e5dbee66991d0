#pragma once

#include <string>

#include "rp2/diagram.hpp"

namespace rp2 {

// Static SVG of the disk model: seam circle, loops coloured by index,
// crossings, seam points and the vertex. Crossings are drawn only for valid
// diagrams. Coordinates are printed with 9 decimals.
std::string render_svg(const BouquetDiagram& d);

}  // namespace rp2
