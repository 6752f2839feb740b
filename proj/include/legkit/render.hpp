#pragma once

#include <string>

#include "legkit/front.hpp"

namespace legkit {

// SVG 1.1 of the front in the (x, z) plane, z upward. The strand with the lesser
// slope passes in front at each crossing; the other one is drawn with a gap.
std::string render_svg(const FrontDiagram& d);

// one column block per event; cusps are '<' and '>'
std::string render_ascii(const FrontDiagram& d);

}  // namespace legkit
