#include "rgt/flag_system.hpp"

#include <algorithm>
#include <utility>

namespace rgt {

FlagSystem FlagSystem::of(const RibbonGraph& g) {
    FlagSystem fs;
    fs.edge_count = g.edge_count();
    const std::size_t nf = 4 * fs.edge_count;
    fs.corner.assign(nf, 0);
    fs.dart.assign(nf, 0);
    fs.band.assign(nf, 0);
    for (const auto& rot : g.rotations()) {
        if (rot.empty()) ++fs.isolated_vertices;
        const std::size_t k = rot.size();
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t a = flag_id(rot[j], 1);
            const std::uint32_t b = flag_id(rot[(j + 1) % k], 0);
            fs.corner[a] = b;
            fs.corner[b] = a;
        }
    }
    for (std::size_t e = 0; e < fs.edge_count; ++e) {
        const std::uint32_t f0 = 4 * static_cast<std::uint32_t>(e);
        fs.dart[f0] = f0 + 1; fs.dart[f0 + 1] = f0;
        fs.dart[f0 + 2] = f0 + 3; fs.dart[f0 + 3] = f0 + 2;
        if (g.twists()[e]) {
            fs.band[f0] = f0 + 2; fs.band[f0 + 2] = f0;
            fs.band[f0 + 1] = f0 + 3; fs.band[f0 + 3] = f0 + 1;
        } else {
            fs.band[f0] = f0 + 3; fs.band[f0 + 3] = f0;
            fs.band[f0 + 1] = f0 + 2; fs.band[f0 + 2] = f0 + 1;
        }
    }
    return fs;
}

void FlagSystem::swap_dual(std::size_t e) {
    const std::uint32_t f0 = 4 * static_cast<std::uint32_t>(e);
    for (std::uint32_t f = f0; f < f0 + 4; ++f) std::swap(dart[f], band[f]);
}

void FlagSystem::compose_petrial(std::size_t e) {
    // band' = band o dart on the four flags of e (dart and band commute there)
    const std::uint32_t f0 = 4 * static_cast<std::uint32_t>(e);
    std::uint32_t nb[4];
    for (std::uint32_t i = 0; i < 4; ++i) nb[i] = band[dart[f0 + i]];
    for (std::uint32_t i = 0; i < 4; ++i) band[f0 + i] = nb[i];
}

RibbonGraph FlagSystem::to_ribbon_graph() const {
    const std::size_t nf = 4 * edge_count;
    std::vector<bool> visited(nf, false);

    // vertex cycles alternate dart and corner arcs; start each at its
    // smallest flag, dart arc first, which reproduces the original rotation
    // direction for an unsurgered system
    struct Occurrence {
        std::size_t vertex, pos;
        std::uint32_t first, second;  // flags in traversal order
    };
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> cycles;
    for (std::uint32_t s = 0; s < nf; ++s) {
        if (visited[s]) continue;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> cyc;
        std::uint32_t x = s;
        while (!visited[x]) {
            const std::uint32_t y = dart[x];
            visited[x] = visited[y] = true;
            cyc.push_back({x, y});
            x = corner[y];
        }
        cycles.push_back(std::move(cyc));
    }

    std::vector<std::vector<Occurrence>> occ_of_edge(edge_count);
    for (std::size_t v = 0; v < cycles.size(); ++v)
        for (std::size_t pos = 0; pos < cycles[v].size(); ++pos) {
            const auto [x, y] = cycles[v][pos];
            occ_of_edge[x / 4].push_back({v, pos, x, y});
        }

    std::vector<std::vector<Dart>> rots(cycles.size());
    for (std::size_t v = 0; v < cycles.size(); ++v)
        rots[v].resize(cycles[v].size());
    std::vector<bool> twists(edge_count, false);
    for (std::size_t e = 0; e < edge_count; ++e) {
        auto& occ = occ_of_edge[e];
        std::sort(occ.begin(), occ.end(), [](const Occurrence& a, const Occurrence& b) {
            return std::min(a.first, a.second) < std::min(b.first, b.second);
        });
        for (std::uint8_t end = 0; end < 2; ++end)
            rots[occ[end].vertex][occ[end].pos] =
                Dart{static_cast<std::uint32_t>(e), end};
        // the first-traversed flag of each occurrence plays the minus side;
        // minus-to-minus band pairing means a twist
        if (band[occ[0].first] == occ[1].first) {
            twists[e] = true;
        } else {
            twists[e] = false;  // band[occ[0].first] == occ[1].second
        }
    }

    for (std::size_t i = 0; i < isolated_vertices; ++i) rots.push_back({});
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists));
}

}  // namespace rgt
