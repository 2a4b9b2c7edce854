#pragma once

#include <string>

#include "boxdim/representation.hpp"

namespace boxdim {

// Renders boxes of a representation as SVG rectangles with vertex labels and
// dashed markers between touching pairs. For dim == 1 the intervals are
// stacked as rows; for dim >= 2 the axes `ax` and `ay` select the projection.
// Drawing quantizes to doubles; this is presentation only, never used by any
// predicate.
std::string render_svg(const TouchingRep& r, int ax = 0, int ay = 1);

}  // namespace boxdim
