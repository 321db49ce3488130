#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "rgt/errors.hpp"

namespace rgt {

/// A subset of E(G) as a bitmask over edge ids, tagged with the edge count
/// of the owning graph so complements are well-defined.
class EdgeSubset {
public:
    EdgeSubset() = default;
    EdgeSubset(std::uint64_t bits, std::size_t universe) : bits_(bits), universe_(universe) {
        if (universe > 63) throw ArgumentError("edge universe exceeds 63");
        if (universe < 64 && (bits >> universe) != 0)
            throw ArgumentError("subset references an edge outside the graph");
    }

    static EdgeSubset empty(std::size_t universe) { return EdgeSubset(0, universe); }
    static EdgeSubset full(std::size_t universe) {
        return EdgeSubset(universe == 0 ? 0 : (~std::uint64_t{0} >> (64 - universe)),
                          universe);
    }
    static EdgeSubset of(std::initializer_list<std::size_t> edges, std::size_t universe) {
        std::uint64_t b = 0;
        for (std::size_t e : edges) {
            if (e >= universe) throw ArgumentError("subset references an unknown edge");
            b |= std::uint64_t{1} << e;
        }
        return EdgeSubset(b, universe);
    }

    std::uint64_t bits() const { return bits_; }
    std::size_t universe() const { return universe_; }
    std::size_t size() const { return std::popcount(bits_); }
    bool contains(std::size_t e) const { return e < universe_ && (bits_ >> e & 1); }

    EdgeSubset complement() const {
        return EdgeSubset(full(universe_).bits_ ^ bits_, universe_);
    }
    EdgeSubset with(std::size_t e) const {
        if (e >= universe_) throw ArgumentError("unknown edge in subset");
        return EdgeSubset(bits_ | (std::uint64_t{1} << e), universe_);
    }
    EdgeSubset symmetric_difference(const EdgeSubset& other) const {
        return EdgeSubset(bits_ ^ other.bits_, universe_);
    }

    /// Member edges in ascending rank order.
    std::vector<std::size_t> members() const {
        std::vector<std::size_t> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b; b &= b - 1)
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        return out;
    }

    bool operator==(const EdgeSubset&) const = default;

private:
    std::uint64_t bits_ = 0;
    std::size_t universe_ = 0;
};

}  // namespace rgt
