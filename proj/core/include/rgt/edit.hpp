#pragma once

#include "rgt/ribbon_graph.hpp"

namespace rgt {

/// Add a new edge parallel to the proper edge e, inserted next to e's darts
/// so that the pair bounds a disk (a planar 2-cycle). The new edge gets id
/// e(G) and carries e's twist bit, which is false in every catalog use; for
/// a twisted e this is the flip-equivalent of pre-flipping one endpoint.
/// e(G') = e(G)+1; v, c, eu unchanged; f(G') = f(G)+1.
RibbonGraph add_parallel_edge(const RibbonGraph& g, std::size_t e);

/// Replace e = uv by a path u w v through a fresh degree-2 vertex. The
/// first new edge keeps e's id and twist; the second gets id e(G) and no
/// twist. Preserves f, eu, c.
RibbonGraph subdivide(const RibbonGraph& g, std::size_t e);

/// Remove e and its darts; vertices stay. Edge ids above e shift down.
RibbonGraph delete_edge(const RibbonGraph& g, std::size_t e);

/// Contract the proper edge e: endpoints merge, rotations spliced at the
/// removed darts. A twisted e is first cleared by flipping its end-1
/// vertex. Preserves f and c. Loops are out of scope.
RibbonGraph contract(const RibbonGraph& g, std::size_t e);

/// One-vertex join: rotation(v2) of g2 is spliced, opened at gap p2, into
/// gap p1 of rotation(v1) of g1. Gap index k addresses the position before
/// the k-th dart, 0 <= k <= degree. g2's edge ids shift by e(g1).
RibbonGraph join(const RibbonGraph& g1, std::size_t v1, std::size_t p1,
                 const RibbonGraph& g2, std::size_t v2, std::size_t p2);

/// True iff deleting e disconnects its component (e is a cut ribbon).
bool is_bridge(const RibbonGraph& g, std::size_t e);

}  // namespace rgt
