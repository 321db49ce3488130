#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgt/ribbon_graph.hpp"

namespace rgt {

/// Builds one of the named graphs. Keys (case-insensitive):
///
///   k2, k3              -- single edge / planar triangle
///   path n              -- path with n edges
///   cycle m             -- planar m-cycle C_m (m >= 2)
///   dipole n            -- planar dipole D_n (n >= 1)
///   ex21_g2 ex21_g1
///   ex21_h ex21_g       -- the series-parallel chain graphs (fan graphs)
///   sec3_g              -- two triangles sharing a vertex plus a twisted
///                          edge e joining the outer vertices (7 edges)
///   sec3_g_over_e1      -- sec3_g with edge e1 contracted
///   sec3_g_plus n       -- sec3_g with n parallel edges added at e1
///   sec4_g              -- planar K4 minus an edge, distinguished edge e
///   sec4_g_plus n       -- sec4_g with n parallel edges added at e
///   c4_plus n           -- planar C4 with n parallel edges added at e1
///
/// Graphs come out in normalized presentation (vertices sorted by name,
/// rotations starting at their smallest dart) so rendering round-trips.
RibbonGraph build_catalog(std::string_view key, std::optional<int> n = std::nullopt);

/// All keys, with whether they take the size parameter n.
struct CatalogKey {
    std::string key;
    bool takes_n;
};
std::vector<CatalogKey> catalog_keys();

/// Representative instances for sweep-style tests: every parameterless key
/// plus pinned sizes of the parametrised ones.
std::vector<std::pair<std::string, RibbonGraph>> catalog_instances();

/// Reorder vertices by name and rotate each rotation so its smallest dart
/// (by edge name, then end) comes first. Purely presentational.
RibbonGraph normalize_presentation(const RibbonGraph& g);

}  // namespace rgt
