#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rgt/enumerate.hpp"
#include "rgt/genus_polynomial.hpp"
#include "rgt/ribbon_graph.hpp"

namespace rgt {

/// Extrema of face count and Euler genus over the orientable Petrials of G,
/// split by whether the distinguished edge lies in the toggled subset
/// (superscript 0: e in A, superscript 1: e not in A).
struct FaceStats {
    std::size_t f0_max = 0;
    std::size_t f1_min = 0;
    std::size_t eu0_min = 0;
    std::size_t eu1_max = 0;
};

/// Outcome of one identity check. `advisory` marks checks whose hypothesis
/// the engine cannot decide (the parallel-Petrial recursion on random
/// graphs); their failures are flagged, not fatal.
struct VerificationReport {
    std::string identity;
    std::string descriptor;
    GenusPolynomial lhs;
    GenusPolynomial rhs;
    bool pass = false;
    bool advisory = false;
};

enum class PetrialFlavor { full, restricted };

/// Predicted partial-* polynomial of the subdivision of G at e:
/// doubling for a cut ribbon, else dEu*_G + 2 z^2 dEu*_{G-e}.
GenusPolynomial star_subdivision_rhs(const RibbonGraph& g, std::size_t e,
                                     const EnumerateOptions& opts = {});

/// Predicted partial-x polynomial of G with an edge added parallel to the
/// proper edge e: (1+2z) dEux_{G/e} + z^2 dEux_{G-e}. Holds only for the
/// externally defined hypothesis class; see verify_identity("eq2").
GenusPolynomial petrial_parallel_rhs(const RibbonGraph& g, std::size_t e,
                                     const EnumerateOptions& opts = {});

/// Predicted partial-x polynomial of any subdivision of G: 2 dEux_G.
/// The restricted flavor doubles the restricted polynomial instead.
GenusPolynomial petrial_subdivision_rhs(const RibbonGraph& g,
                                        PetrialFlavor flavor = PetrialFlavor::full,
                                        const EnumerateOptions& opts = {});

/// Predicted partial-* polynomial of G with one parallel edge at the proper
/// edge e: dEu*_G + 2 z^2 dEu*_{G/e}.
GenusPolynomial star_parallel_rhs(const RibbonGraph& g, std::size_t e,
                                  const EnumerateOptions& opts = {});

/// n parallel edges at the proper edge e: dEu*_G + (2^{n+1}-2) z^2 dEu*_{G/e}.
GenusPolynomial star_multi_parallel_rhs(const RibbonGraph& g, std::size_t e,
                                        unsigned n,
                                        const EnumerateOptions& opts = {});

/// Product of the factors' partial-x (or restricted) polynomials, the
/// predicted polynomial of any one-vertex join of g1 and g2.
GenusPolynomial join_product_rhs(const RibbonGraph& g1, const RibbonGraph& g2,
                                 PetrialFlavor flavor,
                                 const EnumerateOptions& opts = {});

/// Exact extrema over the orientable-Petrial coset, split by e. Throws
/// PreconditionError if either side of the split is empty (cannot happen
/// for a proper edge of a connected graph).
FaceStats face_stats(const RibbonGraph& g, std::size_t e,
                     const EnumerateOptions& opts = {});

/// The sufficient threshold n*: for all n >= n*, the restricted polynomial
/// of G with n parallel edges at e is not even-interpolating. Single-term
/// case: 4 or 3 by whether f0_max(G+e1) is f0+1 or f0-1 (anything else is
/// an inconsistency and throws); multi-term case:
/// min{f0_max(G+e1) - f1_min(G) + 4, f0_max(G) - f1_min(G) + 4}.
std::size_t tm_bound(const RibbonGraph& g, std::size_t e,
                     const EnumerateOptions& opts = {});

/// Smallest n <= n_max whose restricted polynomial is not
/// even-interpolating, by direct search; empty if none.
std::optional<unsigned> min_n_not_even_interpolating(
    const RibbonGraph& g, std::size_t e, unsigned n_max,
    const EnumerateOptions& opts = {});

/// Seed-reproducible random signed rotation system with 1..max_edges edges.
RibbonGraph random_ribbon_graph(std::mt19937_64& rng, unsigned max_edges);

/// Randomized checks of the paper's identities. Names: eq1 eq3 eq5 eq7
/// (partial-* recursions), eq2 (advisory), eq4 (formula vs constructed
/// dual, all subsets), join, lemma41, lemma42, remark21, remark42.
std::vector<VerificationReport> verify_identity(const std::string& name,
                                                unsigned trials,
                                                std::uint64_t seed,
                                                unsigned max_edges,
                                                const EnumerateOptions& opts = {});

/// The Example 2.1 series-parallel computation, end to end.
struct Example21Report {
    GenusPolynomial brute_force;        // dEu* of the 9-edge chain graph
    GenusPolynomial pipeline;           // via the three-step recursion
    GenusPolynomial combined_true;      // (32z^6+..)K3 - (48z^8+32z^6+4z^4)K2
    GenusPolynomial combined_as_printed;  // with the printed 332z^6 factor
    bool printed_factor_matches = false;  // the suspected typo check
};
Example21Report example21_report(const EnumerateOptions& opts = {});

}  // namespace rgt
