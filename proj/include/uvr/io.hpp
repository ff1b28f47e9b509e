#pragma once

#include <iosfwd>
#include <vector>

#include "uvr/types.hpp"

namespace uvr {

/// Writes a polyline as CSV with the exact header "t,re,im"; values carry
/// enough digits to re-parse bit-exactly.
void write_curve_csv(std::ostream& out, const BoundaryCurve& curve);

/// Parses CSV produced by write_curve_csv (header required).  Breakpoint
/// and closedness metadata are not part of the format.
BoundaryCurve read_curve_csv(std::istream& in);

/// Minimal static SVG: one <polyline> per curve, viewBox fitted to the
/// data with a 5% margin, y axis flipped to the usual plot orientation.
void write_curves_svg(std::ostream& out,
                      const std::vector<BoundaryCurve>& curves);

}  // namespace uvr
