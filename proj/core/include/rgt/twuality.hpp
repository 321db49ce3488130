#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rgt/edge_subset.hpp"
#include "rgt/ribbon_graph.hpp"

namespace rgt {

/// One of the five partial-twuality operators: a word over {dual, petrial}
/// of length 1 to 3, i.e. *, x, x*, *x or *x* ('x' denotes the Petrial).
/// Per edge the word applies left to right; operators on distinct edges
/// commute.
class TwualityWord {
public:
    enum class Op { dual, petrial };

    /// Accepts "*", "x", "x*", "*x", "*x*".
    static TwualityWord parse(std::string_view text);

    const std::vector<Op>& ops() const { return ops_; }
    std::string to_string() const;

    bool operator==(const TwualityWord&) const = default;

private:
    std::vector<Op> ops_;
};

/// G^{x|A}: toggle the twist bit on exactly the edges of A.
/// Involutive; rotations unchanged.
RibbonGraph partial_petrial(const RibbonGraph& g, const EdgeSubset& a);

/// f(A): boundary components of the spanning ribbon subgraph (V(G), A).
std::size_t spanning_subgraph_faces(const RibbonGraph& g, const EdgeSubset& a);

/// eu(G^{*|A}) = 2c(G) + e(G) - f(A) - f(A^c), without building the dual.
std::size_t partial_dual_euler_genus(const RibbonGraph& g, const EdgeSubset& a);

/// G^{*|A} by flag surgery. Preserves e and c; v(G^{*|A}) = f(A) and
/// f(G^{*|A}) = f(A^c); involutive up to presentation (see canonical_form);
/// A = E gives the geometric dual.
RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& a);

/// G^{w|A} for any of the five twuality words, edge by edge over A in
/// ascending edge order.
RibbonGraph apply_twuality(const RibbonGraph& g, const TwualityWord& w,
                           const EdgeSubset& a);

/// is_orientable(G^{x|A}) without materialising the Petrial.
bool is_orientable_petrial(const RibbonGraph& g, const EdgeSubset& a);

}  // namespace rgt
