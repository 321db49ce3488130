#pragma once

#include <cstdint>
#include <vector>

#include "rgt/ribbon_graph.hpp"

namespace rgt {

/// The band-decomposition flag model behind face tracing and partial-dual
/// surgery. The 4e flags of a graph carry three perfect matchings:
///
///   corner  -- joins consecutive dart sides around each vertex disk,
///   dart    -- joins the two sides of one dart (the band end),
///   band    -- joins flags along the two sides of the ribbon; the twist
///              decides which sides pair up.
///
/// Faces are the cycles of corner+band, vertices the cycles of corner+dart,
/// and edges the orbits of dart+band (dart and band commute edgewise).
/// Partial dual on an edge swaps its dart and band entries; partial Petrial
/// composes them into band. Degree-0 vertices carry no flags and are kept
/// aside by count.
struct FlagSystem {
    std::vector<std::uint32_t> corner;
    std::vector<std::uint32_t> dart;
    std::vector<std::uint32_t> band;
    std::size_t isolated_vertices = 0;
    std::size_t edge_count = 0;

    static FlagSystem of(const RibbonGraph& g);

    void swap_dual(std::size_t e);     // dual surgery on one edge
    void compose_petrial(std::size_t e);  // petrial surgery on one edge

    /// Rebuild a signed rotation system. Vertices come out ordered by their
    /// smallest flag; each dart's end-0 is the occurrence holding the
    /// smaller flag; twists are read off the band pairing relative to the
    /// traversal direction. Edge ids survive; names do not (callers reattach).
    RibbonGraph to_ribbon_graph() const;
};

}  // namespace rgt
