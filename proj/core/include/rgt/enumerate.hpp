#pragma once

#include <functional>

#include "rgt/genus_polynomial.hpp"
#include "rgt/ribbon_graph.hpp"
#include "rgt/twuality.hpp"

namespace rgt {

/// Controls for the subset enumerations. The cap bounds log2 of the number
/// of states an enumeration may visit (2^e full sweeps, 2^{v-c} restricted
/// cosets); raising it is an explicit opt-in.
struct EnumerateOptions {
    unsigned threads = 1;
    unsigned cap = 28;
    bool override_cap = false;
};

/// Partial-dual Euler-genus polynomial: sum over all A of z^{eu(G^{*|A})},
/// each term via the face-count formula, complement pairs sharing tracings.
GenusPolynomial partial_star_polynomial(const RibbonGraph& g,
                                        const EnumerateOptions& opts = {});

/// Partial-Petrial Euler-genus polynomial: sum over all A of z^{eu(G^{x|A})},
/// visiting subsets in Gray-code order and retracing only boundary walks
/// through the toggled edge.
GenusPolynomial partial_petrial_polynomial(const RibbonGraph& g,
                                           const EnumerateOptions& opts = {});

/// Restricted orientable partial-Petrial polynomial: the same sum over only
/// those A with G^{x|A} orientable. Fast path: the orientable Petrials are
/// exactly the coset of the GF(2) cut space through the twist vector, of
/// size 2^{v-c}, enumerated directly.
GenusPolynomial restricted_orientable_petrial_polynomial(
    const RibbonGraph& g, const EnumerateOptions& opts = {});

/// Slow path for the restricted polynomial: filter all 2^e subsets by an
/// orientability test. Kept as the independent cross-check of the coset path.
GenusPolynomial restricted_orientable_petrial_polynomial_filtered(
    const RibbonGraph& g, const EnumerateOptions& opts = {});

/// GF(2) cut-space basis as edge bitmasks: the vertex stars of all but one
/// vertex per component. The orientable-Petrial subsets are exactly the
/// coset of its span through the twist vector.
std::vector<std::uint64_t> cut_space_basis(const RibbonGraph& g);

/// Sweep that coset: fn(subset_bits, faces) for every A with G^{x|A}
/// orientable, faces the boundary count of G^{x|A}. Deterministic Gray-code
/// order, single-threaded.
void for_each_orientable_petrial(
    const RibbonGraph& g, const EnumerateOptions& opts,
    const std::function<void(std::uint64_t, std::size_t)>& fn);

/// Number of A with G^{x|A} orientable: 2^{v-c} (2^{v-1} when connected).
GenusPolynomial::Int count_orientable_petrials(const RibbonGraph& g);

/// Generic five-operator spectrum: sum over all A of z^{eu(G^{w|A})}, each
/// term by constructing G^{w|A}. This is the construction-based route the
/// formula-based paths are checked against.
GenusPolynomial enumerate_euler_spectrum(const RibbonGraph& g,
                                         const TwualityWord& w,
                                         const EnumerateOptions& opts = {});

}  // namespace rgt
