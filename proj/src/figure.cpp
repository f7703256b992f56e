// SPDX-License-Identifier: Apache-2.0
#include "cantorflat/figure.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace cantorflat {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

const char* kGenerationColors[] = {"#1f3b57", "#2c6e91", "#4aa3a2", "#7fb069",
                                   "#d7a74a", "#c4623f", "#8a4f7d"};

// Maps a world window onto the canvas with independent x/y scaling and a
// flipped y axis (origin at bottom-left).
struct WorldToSvg {
  double x_lo, x_hi, y_lo, y_hi;
  double px_x0, px_y0, px_w, px_h;

  double x(double wx) const { return px_x0 + (wx - x_lo) / (x_hi - x_lo) * px_w; }
  double y(double wy) const { return px_y0 + px_h - (wy - y_lo) / (y_hi - y_lo) * px_h; }
};

void emit_rect(std::ostringstream& svg, const WorldToSvg& map, const Rect& rect,
               const RectAddress& address, int generation, bool true_scale) {
  const double x = map.x(rect.x0.to_double());
  const double w = map.x((rect.x0 + rect.width).to_double()) - x;
  const double y_bottom = map.y(rect.y0.to_double());
  double h = y_bottom - map.y((rect.y0 + rect.height).to_double());
  if (!true_scale && h < 10.0 && generation > 1) h = 10.0;
  const char* color = kGenerationColors[(generation - 1) % 7];
  svg << "  <rect x=\"" << fmt(x) << "\" y=\"" << fmt(y_bottom - h) << "\" width=\"" << fmt(w)
      << "\" height=\"" << fmt(h) << "\" fill=\"none\" stroke=\"" << color
      << "\" stroke-width=\"1\" data-generation=\"" << generation << "\" data-address=\""
      << address.str() << "\"/>\n";
}

void emit_polyline(std::ostringstream& svg, const std::vector<std::pair<double, double>>& pts,
                   const WorldToSvg& map, const char* color, const char* data_kind) {
  svg << "  <polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
  if (data_kind) svg << " data-kind=\"" << data_kind << "\"";
  svg << " points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) svg << ' ';
    svg << fmt(map.x(pts[i].first)) << ',' << fmt(map.y(pts[i].second));
  }
  svg << "\"/>\n";
}

std::string svg_document(int width, int height, const std::string& body) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "  <rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n"
      << body << "</svg>\n";
  return out.str();
}

// Samples of the link curve between the two corner points of a gap.
std::vector<std::pair<double, double>> gap_curve(const Construction& cons, const GapSegment& gap,
                                                 int samples) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  const double y_start = gap.y_start.to_double();
  const double y_end = gap.y_end.to_double();
  for (int i = 0; i < samples; ++i) {
    const Rational t(i, samples - 1);
    const Rational x = gap.x_start + t * (gap.x_end - gap.x_start);
    const double phi = phi_eval(cons.kernel(), t).to_double();
    pts.emplace_back(x.to_double(), y_end + (y_start - y_end) * phi);
  }
  return pts;
}

}  // namespace

std::string figure_rects_svg(const Construction& cons, int depth, const FigureOptions& options) {
  if (depth < 1) throw std::invalid_argument("figure: depth must be >= 1");
  mpz_class deepest(1);
  for (int g = 2; g <= depth; ++g) deepest *= cons.children_per_parent(g);
  if (deepest > 50'000) {
    throw std::invalid_argument("figure: too many rectangles at this depth");
  }

  const WorldToSvg map{0.0, 1.0, 0.0, 1.0,
                       static_cast<double>(options.margin_px),
                       static_cast<double>(options.margin_px),
                       static_cast<double>(options.width_px - 2 * options.margin_px),
                       static_cast<double>(options.height_px - 2 * options.margin_px)};
  std::ostringstream body;

  // Rectangle outlines, shallow to deep.
  for (int g = 1; g <= depth; ++g) {
    RectAddress address;
    std::function<void(int)> recur = [&](int gen) {
      if (gen == g) {
        emit_rect(body, map, cons.rect_of(address), address, g, options.true_scale);
        return;
      }
      const GenerationRule rule = cons.params().rule_at(gen + 1);
      for (int m = 1; m <= rule.s; ++m) {
        for (int p = 1; p <= rule.r; ++p) {
          address.path.emplace_back(m, p);
          recur(gen + 1);
          address.path.pop_back();
        }
      }
    };
    recur(1);
  }

  // Graph of f: the deepest-generation rectangles traversed left to right,
  // corner diagonals joined by the exact link curves (true scale).
  if (depth >= 2) {
    std::vector<RectAddress> leaves;
    RectAddress address;
    std::function<void(int)> collect = [&](int gen) {
      if (gen == depth) {
        leaves.push_back(address);
        return;
      }
      const GenerationRule rule = cons.params().rule_at(gen + 1);
      for (int m = 1; m <= rule.s; ++m) {
        for (int p = 1; p <= rule.r; ++p) {
          address.path.emplace_back(m, p);
          collect(gen + 1);
          address.path.pop_back();
        }
      }
    };
    collect(1);

    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < leaves.size(); ++i) {
      const Rect rect = cons.rect_of(leaves[i]);
      pts.emplace_back(rect.x0.to_double(), rect.y0.to_double());
      pts.emplace_back((rect.x0 + rect.width).to_double(),
                       (rect.y0 + rect.height).to_double());
      if (i + 1 < leaves.size()) {
        // The gap between consecutive leaves lives at the divergence level
        // of their addresses; its corners coincide with the adjacent leaf
        // corners just emitted.
        std::size_t level = 0;
        while (leaves[i].path[level] == leaves[i + 1].path[level]) ++level;
        RectAddress parent;
        parent.path.assign(leaves[i].path.begin(),
                           leaves[i].path.begin() + static_cast<long>(level));
        const GenerationRule rule = cons.params().rule_at(parent.generation() + 1);
        const auto [m, p] = leaves[i].path[level];
        const int slot = (m - 1) * rule.r + (p - 1);
        const GapSegment gap = cons.gaps_of(parent)[static_cast<std::size_t>(slot)];
        for (const auto& pt : gap_curve(cons, gap, options.curve_samples)) pts.push_back(pt);
      }
    }
    emit_polyline(body, pts, map, "#b02020", "graph");
  }

  return svg_document(options.width_px, options.height_px, body.str());
}

std::string figure_link_svg(const Construction& cons, const RectAddress& parent, int gap_index,
                            const FigureOptions& options) {
  const std::vector<GapSegment> gaps = cons.gaps_of(parent);
  if (gap_index < 0 || gap_index >= static_cast<int>(gaps.size())) {
    throw std::out_of_range("figure: gap index out of range (parent has " +
                            std::to_string(gaps.size()) + " gaps)");
  }
  const GapSegment& gap = gaps[static_cast<std::size_t>(gap_index)];
  const int n = parent.generation() + 1;
  const GenerationRule rule = cons.params().rule_at(n);

  RectAddress left = parent;
  left.path.emplace_back(gap_index / rule.r + 1, gap_index % rule.r + 1);
  RectAddress right = parent;
  right.path.emplace_back((gap_index + 1) / rule.r + 1, (gap_index + 1) % rule.r + 1);
  const Rect lrect = cons.rect_of(left);
  const Rect rrect = cons.rect_of(right);

  double x_lo = lrect.x0.to_double();
  double x_hi = (rrect.x0 + rrect.width).to_double();
  double y_lo = std::min(lrect.y0.to_double(), rrect.y0.to_double());
  double y_hi = std::max((lrect.y0 + lrect.height).to_double(),
                         (rrect.y0 + rrect.height).to_double());
  const double pad_x = (x_hi - x_lo) * 0.05;
  const double pad_y = (y_hi - y_lo) * 0.05;
  const WorldToSvg map{x_lo - pad_x, x_hi + pad_x, y_lo - pad_y, y_hi + pad_y,
                       static_cast<double>(options.margin_px),
                       static_cast<double>(options.margin_px),
                       static_cast<double>(options.width_px - 2 * options.margin_px),
                       static_cast<double>(options.height_px - 2 * options.margin_px)};

  std::ostringstream body;
  emit_rect(body, map, lrect, left, n, /*true_scale=*/true);
  emit_rect(body, map, rrect, right, n, /*true_scale=*/true);
  emit_polyline(body, gap_curve(cons, gap, std::max(options.curve_samples, 33)), map, "#b02020",
                gap.kind == GapKind::WithinRow ? "within-row" : "row-transition");
  return svg_document(options.width_px, options.height_px, body.str());
}

}  // namespace cantorflat
