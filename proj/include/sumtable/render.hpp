#pragma once

#include "sumtable/splitting.hpp"

#include <string>

namespace sumtable {

enum class RenderView { values, path, blocks };

/**
 * Text renderings of a labeled table. Rows follow a ascending, columns b ascending.
 *
 *   values  tab-separated grid with a "+" corner, label row and label column
 *   path    same frame, each cell holds an arrow toward the cell of value+1;
 *           the first and last values are drawn as a dot
 *   blocks  cell values with separators at block boundaries; a boundary's
 *           weight is the rank of its label gap among the distinct gaps
 *
 * path and blocks need a valid splitting and throw std::invalid_argument otherwise.
 */
std::string render_text(const Splitting& s, RenderView view);

/// The same views as a standalone SVG document.
std::string render_svg(const Splitting& s, RenderView view);

}  // namespace sumtable
