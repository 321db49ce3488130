#include "rgt/ribbon_graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "rgt/flag_system.hpp"

namespace rgt {

namespace {

std::vector<std::string> default_names(const char* prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        names.push_back(prefix + std::to_string(i));
    return names;
}

}  // namespace

RibbonGraph RibbonGraph::from_rotations(std::vector<std::vector<Dart>> rotations,
                                        std::vector<bool> twists) {
    return from_rotations(std::move(rotations), std::move(twists), {}, {});
}

RibbonGraph RibbonGraph::from_rotations(std::vector<std::vector<Dart>> rotations,
                                        std::vector<bool> twists,
                                        std::vector<std::string> vertex_names,
                                        std::vector<std::string> edge_names) {
    RibbonGraph g;
    g.rotations_ = std::move(rotations);
    g.twists_ = std::move(twists);
    g.vertex_names_ = std::move(vertex_names);
    g.edge_names_ = std::move(edge_names);
    if (g.vertex_names_.size() != g.rotations_.size())
        g.vertex_names_ = default_names("v", g.rotations_.size());
    if (g.edge_names_.size() != g.twists_.size())
        g.edge_names_ = default_names("e", g.twists_.size());
    g.validate();
    return g;
}

void RibbonGraph::validate() const {
    std::vector<int> seen(2 * twists_.size(), 0);
    for (const auto& rot : rotations_) {
        for (const Dart& d : rot) {
            if (d.edge >= twists_.size() || d.end > 1)
                throw StructuralError("rotation references unknown half-edge " +
                                      std::to_string(d.edge) + "." +
                                      std::to_string(d.end));
            if (++seen[2 * d.edge + d.end] > 1)
                throw StructuralError("half-edge " + std::to_string(d.edge) + "." +
                                      std::to_string(d.end) +
                                      " appears more than once");
        }
    }
    for (std::size_t e = 0; e < twists_.size(); ++e)
        for (unsigned s = 0; s < 2; ++s)
            if (!seen[2 * e + s])
                throw StructuralError("half-edge " + std::to_string(e) + "." +
                                      std::to_string(s) + " missing from rotations");
}

const std::vector<Dart>& RibbonGraph::rotation(std::size_t v) const {
    if (v >= rotations_.size())
        throw ArgumentError("unknown vertex " + std::to_string(v));
    return rotations_[v];
}

bool RibbonGraph::twisted(std::size_t e) const {
    if (e >= twists_.size())
        throw ArgumentError("unknown edge " + std::to_string(e));
    return twists_[e];
}

const std::string& RibbonGraph::vertex_name(std::size_t v) const {
    if (v >= vertex_names_.size())
        throw ArgumentError("unknown vertex " + std::to_string(v));
    return vertex_names_[v];
}

const std::string& RibbonGraph::edge_name(std::size_t e) const {
    if (e >= edge_names_.size())
        throw ArgumentError("unknown edge " + std::to_string(e));
    return edge_names_[e];
}

std::size_t RibbonGraph::edge_by_name(const std::string& name) const {
    for (std::size_t e = 0; e < edge_names_.size(); ++e)
        if (edge_names_[e] == name) return e;
    throw ArgumentError("unknown edge '" + name + "'");
}

std::size_t RibbonGraph::vertex_by_name(const std::string& name) const {
    for (std::size_t v = 0; v < vertex_names_.size(); ++v)
        if (vertex_names_[v] == name) return v;
    throw ArgumentError("unknown vertex '" + name + "'");
}

std::pair<std::size_t, std::size_t> RibbonGraph::endpoints(std::size_t e) const {
    if (e >= twists_.size())
        throw ArgumentError("unknown edge " + std::to_string(e));
    std::size_t at0 = rotations_.size(), at1 = rotations_.size();
    for (std::size_t v = 0; v < rotations_.size(); ++v)
        for (const Dart& d : rotations_[v])
            if (d.edge == e) (d.end == 0 ? at0 : at1) = v;
    return {at0, at1};
}

bool RibbonGraph::is_loop(std::size_t e) const {
    auto [u, v] = endpoints(e);
    return u == v;
}

// ---------------------------------------------------------------------------
// face tracing
// ---------------------------------------------------------------------------

namespace {

// corner matching: around each vertex disk, the plus side of a dart meets
// the minus side of the next dart in rotation
std::vector<std::uint32_t> corner_matching(const RibbonGraph& g) {
    std::vector<std::uint32_t> corner(4 * g.edge_count(), 0);
    for (const auto& rot : g.rotations()) {
        const std::size_t k = rot.size();
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t a = flag_id(rot[j], 1);
            const std::uint32_t b = flag_id(rot[(j + 1) % k], 0);
            corner[a] = b;
            corner[b] = a;
        }
    }
    return corner;
}

std::vector<std::uint32_t> band_matching(const RibbonGraph& g) {
    std::vector<std::uint32_t> band(4 * g.edge_count(), 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const std::uint32_t f0 = 4 * static_cast<std::uint32_t>(e);
        if (g.twists()[e]) {
            band[f0] = f0 + 2; band[f0 + 2] = f0;
            band[f0 + 1] = f0 + 3; band[f0 + 3] = f0 + 1;
        } else {
            band[f0] = f0 + 3; band[f0 + 3] = f0;
            band[f0 + 1] = f0 + 2; band[f0 + 2] = f0 + 1;
        }
    }
    return band;
}

}  // namespace

std::vector<FaceWalk> trace_faces(const RibbonGraph& g) {
    const std::size_t nf = 4 * g.edge_count();
    const auto corner = corner_matching(g);
    const auto band = band_matching(g);
    std::vector<bool> seen(nf, false);
    std::vector<FaceWalk> walks;
    for (std::uint32_t start = 0; start < nf; ++start) {
        if (seen[start]) continue;
        FaceWalk w;
        std::uint32_t x = start;
        while (!seen[x]) {
            const std::uint32_t y = band[x];
            seen[x] = seen[y] = true;
            w.flags.push_back(x);
            w.flags.push_back(y);
            x = corner[y];
        }
        walks.push_back(std::move(w));
    }
    for (const auto& rot : g.rotations())
        if (rot.empty()) walks.push_back(FaceWalk{});
    return walks;
}

std::size_t face_count(const RibbonGraph& g) {
    return trace_faces(g).size();
}

std::size_t components(const RibbonGraph& g) {
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> first_end(g.edge_count(), g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (const Dart& d : g.rotation(v)) {
            if (first_end[d.edge] == g.vertex_count()) {
                first_end[d.edge] = v;
            } else {
                const std::size_t a = find(first_end[d.edge]);
                const std::size_t b = find(v);
                if (a != b) parent[a] = b;
            }
        }
    }
    std::size_t c = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (find(v) == v) ++c;
    return c;
}

std::size_t euler_genus(const RibbonGraph& g) {
    return 2 * components(g) + g.edge_count() - g.vertex_count() - face_count(g);
}

std::size_t cycle_rank(const RibbonGraph& g) {
    return g.edge_count() + components(g) - g.vertex_count();
}

bool is_orientable(const RibbonGraph& g) {
    // flip parities propagate over a spanning forest; any inconsistent
    // non-tree edge (or twisted loop) is a cycle-space obstruction
    const std::size_t nv = g.vertex_count();
    std::vector<std::pair<std::size_t, std::size_t>> ends(g.edge_count(),
                                                          {nv, nv});
    for (std::size_t v = 0; v < nv; ++v)
        for (const Dart& d : g.rotation(v))
            (d.end == 0 ? ends[d.edge].first : ends[d.edge].second) = v;

    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(nv);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = ends[e];
        if (u == v) {
            if (g.twists()[e]) return false;  // twisted loop
            continue;
        }
        adj[u].push_back({v, e});
        adj[v].push_back({u, e});
    }
    std::vector<int> parity(nv, -1);
    std::vector<std::size_t> stack;
    for (std::size_t root = 0; root < nv; ++root) {
        if (parity[root] != -1) continue;
        parity[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            const std::size_t u = stack.back();
            stack.pop_back();
            for (auto [v, e] : adj[u]) {
                const int t = g.twists()[e] ? 1 : 0;
                if (parity[v] == -1) {
                    parity[v] = parity[u] ^ t;
                    stack.push_back(v);
                }
            }
        }
    }
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = ends[e];
        if (u == v) continue;
        if ((parity[u] ^ parity[v]) != (g.twists()[e] ? 1 : 0)) return false;
    }
    return true;
}

RibbonGraph vertex_flip(const RibbonGraph& g, std::size_t v) {
    if (v >= g.vertex_count())
        throw ArgumentError("unknown vertex " + std::to_string(v));
    auto rots = g.rotations();
    auto twists = g.twists();
    std::reverse(rots[v].begin(), rots[v].end());
    for (const Dart& d : rots[v]) {
        if (!g.is_loop(d.edge)) twists[d.edge] = !twists[d.edge];
        // loop darts toggle twice, i.e. not at all
    }
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists),
                                       g.vertex_names(), g.edge_names());
}

// ---------------------------------------------------------------------------
// canonical presentation
// ---------------------------------------------------------------------------
// Two presentations of one embedded graph (same edge ids) have isomorphic
// flag systems, where the isomorphism fixes each edge's block of four flags
// setwise. A BFS through the corner/dart/band arcs relabels every flag by
// its visit rank within its edge; taking the lexicographically smallest
// relabelled system over the four possible start flags of the component's
// smallest edge gives a canonical system, and rebuilding a rotation system
// from it gives a canonical presentation.

namespace {

struct CanonComponent {
    std::vector<std::uint32_t> edges;          // ascending
    std::vector<std::uint32_t> relabel;        // old flag -> new flag (component only)
    std::vector<std::uint32_t> cert;           // relabelled arrays, flag-major
};

}  // namespace

RibbonGraph canonical_form(const RibbonGraph& g) {
    const std::size_t ne = g.edge_count();
    std::size_t isolated = 0;
    for (const auto& rot : g.rotations())
        if (rot.empty()) ++isolated;
    if (ne == 0) {
        std::vector<std::vector<Dart>> rots(g.vertex_count());
        return RibbonGraph::from_rotations(std::move(rots), {});
    }

    FlagSystem fs = FlagSystem::of(g);
    const std::size_t nf = 4 * ne;

    // flag components (= graph components that carry edges)
    std::vector<std::uint32_t> comp_of(nf, std::uint32_t(-1));
    std::vector<std::vector<std::uint32_t>> comp_edges;
    for (std::uint32_t f = 0; f < nf; ++f) {
        if (comp_of[f] != std::uint32_t(-1)) continue;
        const auto id = static_cast<std::uint32_t>(comp_edges.size());
        comp_edges.push_back({});
        std::vector<std::uint32_t> stack{f};
        comp_of[f] = id;
        std::vector<bool> edge_seen_local(ne, false);
        while (!stack.empty()) {
            const std::uint32_t x = stack.back();
            stack.pop_back();
            if (!edge_seen_local[x / 4]) {
                edge_seen_local[x / 4] = true;
                comp_edges.back().push_back(x / 4);
            }
            for (std::uint32_t y : {fs.corner[x], fs.dart[x], fs.band[x]}) {
                if (comp_of[y] == std::uint32_t(-1)) {
                    comp_of[y] = id;
                    stack.push_back(y);
                }
            }
        }
        std::sort(comp_edges.back().begin(), comp_edges.back().end());
    }

    // per component: BFS relabel from each flag of its smallest edge,
    // keep the candidate whose relabelled arrays are smallest
    auto relabel_from = [&](std::uint32_t start, CanonComponent& out) {
        out.relabel.assign(nf, std::uint32_t(-1));
        std::vector<std::uint8_t> edge_rank(ne, 0);
        std::vector<std::uint32_t> queue{start};
        std::size_t head = 0;
        std::vector<std::uint32_t> visit_order;
        std::vector<bool> seen(nf, false);
        seen[start] = true;
        while (head < queue.size()) {
            const std::uint32_t x = queue[head++];
            visit_order.push_back(x);
            for (std::uint32_t y : {fs.dart[x], fs.band[x], fs.corner[x]}) {
                if (!seen[y]) {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        for (std::uint32_t x : visit_order)
            out.relabel[x] = 4 * (x / 4) + edge_rank[x / 4]++;
        out.cert.clear();
        out.cert.reserve(visit_order.size() * 3);
        // certificate in new-flag order over the component's edges
        for (std::uint32_t e : out.edges) {
            std::array<std::uint32_t, 4> inv{};  // new rank -> old flag
            for (std::uint32_t f = 4 * e; f < 4 * e + 4; ++f)
                inv[out.relabel[f] % 4] = f;
            for (std::uint32_t r = 0; r < 4; ++r) {
                const std::uint32_t x = inv[r];
                out.cert.push_back(out.relabel[fs.corner[x]]);
                out.cert.push_back(out.relabel[fs.dart[x]]);
                out.cert.push_back(out.relabel[fs.band[x]]);
            }
        }
    };

    std::vector<std::uint32_t> total_relabel(nf, 0);
    for (auto& edges : comp_edges) {
        CanonComponent best;
        best.edges = edges;
        bool have = false;
        CanonComponent cand;
        cand.edges = edges;
        for (std::uint32_t s = 4 * edges.front(); s < 4 * edges.front() + 4; ++s) {
            relabel_from(s, cand);
            if (!have || cand.cert < best.cert) {
                best = cand;
                have = true;
            }
        }
        for (std::uint32_t e : edges)
            for (std::uint32_t f = 4 * e; f < 4 * e + 4; ++f)
                total_relabel[f] = best.relabel[f];
    }

    FlagSystem canon;
    canon.edge_count = ne;
    canon.isolated_vertices = isolated;
    canon.corner.assign(nf, 0);
    canon.dart.assign(nf, 0);
    canon.band.assign(nf, 0);
    for (std::uint32_t f = 0; f < nf; ++f) {
        canon.corner[total_relabel[f]] = total_relabel[fs.corner[f]];
        canon.dart[total_relabel[f]] = total_relabel[fs.dart[f]];
        canon.band[total_relabel[f]] = total_relabel[fs.band[f]];
    }
    RibbonGraph out = canon.to_ribbon_graph();
    return RibbonGraph::from_rotations(out.rotations(), out.twists(),
                                       out.vertex_names(), g.edge_names());
}

}  // namespace rgt
