#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rgt/errors.hpp"

namespace rgt {

/// One end of an edge. A loop contributes both ends to the same vertex.
struct Dart {
    std::uint32_t edge = 0;
    std::uint8_t end = 0;  // 0 or 1

    friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// A ribbon graph as a signed rotation system: a cyclic order of darts at
/// each vertex plus a twist bit per edge. Values are immutable after
/// construction; every operation below returns a fresh graph.
class RibbonGraph {
public:
    RibbonGraph() = default;

    /// Validates and adopts the rotation system. Every edge id in
    /// [0, twists.size()) must contribute exactly its two darts, each
    /// appearing exactly once across all rotations.
    static RibbonGraph from_rotations(std::vector<std::vector<Dart>> rotations,
                                      std::vector<bool> twists);

    /// Same, with explicit vertex and edge names (sizes must match).
    static RibbonGraph from_rotations(std::vector<std::vector<Dart>> rotations,
                                      std::vector<bool> twists,
                                      std::vector<std::string> vertex_names,
                                      std::vector<std::string> edge_names);

    std::size_t vertex_count() const { return rotations_.size(); }
    std::size_t edge_count() const { return twists_.size(); }

    const std::vector<Dart>& rotation(std::size_t v) const;
    const std::vector<std::vector<Dart>>& rotations() const { return rotations_; }
    bool twisted(std::size_t e) const;
    const std::vector<bool>& twists() const { return twists_; }

    const std::string& vertex_name(std::size_t v) const;
    const std::string& edge_name(std::size_t e) const;
    const std::vector<std::string>& vertex_names() const { return vertex_names_; }
    const std::vector<std::string>& edge_names() const { return edge_names_; }

    /// Index of the named edge, or throws ArgumentError.
    std::size_t edge_by_name(const std::string& name) const;
    /// Index of the named vertex, or throws ArgumentError.
    std::size_t vertex_by_name(const std::string& name) const;

    /// Degree of v counting loops twice.
    std::size_t degree(std::size_t v) const { return rotation(v).size(); }

    /// The two vertices carrying the darts of e (equal for a loop).
    std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const;
    bool is_loop(std::size_t e) const;

    /// Structural equality of the stored presentation (names ignored).
    bool operator==(const RibbonGraph& other) const {
        return rotations_ == other.rotations_ && twists_ == other.twists_;
    }

private:
    std::vector<std::vector<Dart>> rotations_;
    std::vector<bool> twists_;
    std::vector<std::string> vertex_names_;
    std::vector<std::string> edge_names_;

    void validate() const;
    friend RibbonGraph with_default_names(std::vector<std::vector<Dart>>,
                                          std::vector<bool>);
};

/// Flag ids: each edge owns four flags, two sides per dart.
/// flag = 4*edge + 2*end + side.
inline std::uint32_t flag_id(const Dart& d, unsigned side) {
    return 4 * d.edge + 2 * d.end + side;
}

/// One boundary component: the flags it traverses, in walk order.
/// All walks of a graph together visit each of the 4*e flags exactly once.
struct FaceWalk {
    std::vector<std::uint32_t> flags;
};

/// Boundary components of the ribbon surface, deterministic order: each
/// walk starts from the numerically smallest flag not yet traversed.
/// Degree-0 vertices contribute one (empty) walk each, listed last.
std::vector<FaceWalk> trace_faces(const RibbonGraph& g);

/// f(G): number of boundary components.
std::size_t face_count(const RibbonGraph& g);

/// c(G): connected components of the underlying abstract graph.
std::size_t components(const RibbonGraph& g);

/// eu(G) = 2c(G) + e(G) - v(G) - f(G).
std::size_t euler_genus(const RibbonGraph& g);

/// beta(G) = e - v + c, the GF(2) cycle-space dimension.
std::size_t cycle_rank(const RibbonGraph& g);

/// True iff some set of vertex flips clears every twist bit, decided by
/// spanning-tree parity propagation in linear time.
bool is_orientable(const RibbonGraph& g);

/// Reverse the rotation at v and toggle the twist of each non-loop edge
/// incident to v. Preserves v, e, c, f, eu, and orientability.
RibbonGraph vertex_flip(const RibbonGraph& g, std::size_t v);

/// A canonical presentation of the same embedded graph, computed by
/// canonically relabelling the underlying flag system (smallest relabelling
/// over the possible breadth-first starts) and rebuilding the rotation
/// system from it. Two presentations of one embedded graph with the same
/// edge ids -- differing by vertex order, rotation shifts, vertex flips, or
/// end relabelling -- map to equal canonical forms.
RibbonGraph canonical_form(const RibbonGraph& g);

}  // namespace rgt
