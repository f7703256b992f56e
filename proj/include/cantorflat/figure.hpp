// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "cantorflat/geometry.hpp"

namespace cantorflat {

struct FigureOptions {
  int width_px = 900;
  int height_px = 600;
  int margin_px = 40;
  /// Rect heights shrink geometrically with the generation; by default they
  /// are drawn with a minimum pixel height so deep generations stay visible.
  /// True-scale mode maps heights faithfully instead.
  bool true_scale = false;
  int curve_samples = 17;  // per gap
};

/// Overview figure: stroked rectangle outlines for generations 1..depth plus
/// the graph of f (corner-to-corner diagonals of the deepest generation
/// joined by the exact link curves, drawn at true scale).
std::string figure_rects_svg(const Construction& cons, int depth, const FigureOptions& options);

/// Zoomed figure of one gap: the two adjacent rectangles and the link curve
/// between their corners, axes scaled independently to fill the canvas.
std::string figure_link_svg(const Construction& cons, const RectAddress& parent, int gap_index,
                            const FigureOptions& options);

}  // namespace cantorflat
