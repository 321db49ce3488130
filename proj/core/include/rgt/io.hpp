#pragma once

#include <string>
#include <string_view>

#include "rgt/ribbon_graph.hpp"

namespace rgt {

/// Parse the .rg rotation-projection text format:
///
///   # comment
///   vertex u: a.0 b.0
///   vertex v: a.1 b.1
///   twist a
///
/// One `vertex` line per vertex (in order), darts as `<edge>.<0|1>` in
/// rotation order; `twist` lines list twisted edges. Edge ids follow first
/// appearance. Throws ParseError with line/column on duplicate darts,
/// missing partner darts, unknown edges in twist lines, or bad tokens.
RibbonGraph parse_rg(std::string_view text);

/// Render in canonical form: vertices sorted by name, each rotation shifted
/// to start at its smallest dart (by edge name, then end), twist lines
/// sorted. parse_rg(render_rg(g)) reproduces g for normalized graphs.
std::string render_rg(const RibbonGraph& g);

}  // namespace rgt
