#pragma once

#include <string>

#include "splitorder/exponent_matrix.hpp"

namespace splitorder {

struct SvgOptions {
  double scale = 48.0;  // pixels per lattice step
  double margin = 1.5;  // lattice steps of padding around the declared bounds
};

/// SVG 1.1 drawing of C(nu) for n = 3 in the triangular apartment.
///
/// Vertex [0, x_2, x_3] sits at x_2 * u + x_3 * w with |u| = |w| and
/// 120 degrees between u and w, so the walls x_2 = c, x_3 = c and
/// x_3 - x_2 = c run in three directions 60 degrees apart. The six
/// declared bounding lines are solid when they touch the region and dashed
/// otherwise; lattice points of the region are filled dots. Output is a
/// pure function of (nu, options). Throws UnsupportedDimension for n != 3.
std::string render_apartment_svg(const ExponentMatrix& nu, const SvgOptions& options = {});

}  // namespace splitorder
