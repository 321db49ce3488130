#include "rgt/edit.hpp"

#include <algorithm>

namespace rgt {

namespace {

std::string unique_name(std::string base, const std::vector<std::string>& taken) {
    auto used = [&](const std::string& s) {
        return std::find(taken.begin(), taken.end(), s) != taken.end();
    };
    if (!used(base)) return base;
    for (int k = 2;; ++k) {
        std::string cand = base + std::to_string(k);
        if (!used(cand)) return cand;
    }
}

struct DartPos {
    std::size_t vertex = 0, index = 0;
    bool found = false;
};

// positions of (e,0) and (e,1)
std::pair<DartPos, DartPos> locate(const RibbonGraph& g, std::size_t e) {
    if (e >= g.edge_count())
        throw ArgumentError("unknown edge " + std::to_string(e));
    DartPos p0, p1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto& rot = g.rotation(v);
        for (std::size_t j = 0; j < rot.size(); ++j) {
            if (rot[j].edge != e) continue;
            DartPos& p = rot[j].end == 0 ? p0 : p1;
            p = {v, j, true};
        }
    }
    return {p0, p1};
}

std::vector<std::string> drop_edge_name(const RibbonGraph& g, std::size_t e) {
    auto names = g.edge_names();
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(e));
    return names;
}

std::vector<std::vector<Dart>> without_edge(std::vector<std::vector<Dart>> rots,
                                            std::size_t e) {
    for (auto& rot : rots) {
        std::erase_if(rot, [e](const Dart& d) { return d.edge == e; });
        for (Dart& d : rot)
            if (d.edge > e) --d.edge;
    }
    return rots;
}

std::vector<bool> without_twist(const std::vector<bool>& twists, std::size_t e) {
    std::vector<bool> out;
    out.reserve(twists.size() - 1);
    for (std::size_t i = 0; i < twists.size(); ++i)
        if (i != e) out.push_back(twists[i]);
    return out;
}

}  // namespace

RibbonGraph add_parallel_edge(const RibbonGraph& g, std::size_t e) {
    auto [p0, p1] = locate(g, e);
    if (p0.vertex == p1.vertex)
        throw PreconditionError("cannot add a parallel edge to loop '" +
                                g.edge_name(e) + "'");
    const auto ne = static_cast<std::uint32_t>(g.edge_count());
    auto rots = g.rotations();
    auto twists = g.twists();
    const bool tw = twists[e];
    // end 0 right after e's end 0; end 1 on the side matched by the twist,
    // so that e and the new edge bound a disk
    rots[p0.vertex].insert(rots[p0.vertex].begin() + p0.index + 1, Dart{ne, 0});
    const std::size_t off = tw ? 1 : 0;
    rots[p1.vertex].insert(rots[p1.vertex].begin() + p1.index + off, Dart{ne, 1});
    twists.push_back(tw);
    auto enames = g.edge_names();
    enames.push_back(unique_name(g.edge_name(e) + "'", enames));
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists),
                                       g.vertex_names(), std::move(enames));
}

RibbonGraph subdivide(const RibbonGraph& g, std::size_t e) {
    auto [p0, p1] = locate(g, e);
    const auto nb = static_cast<std::uint32_t>(g.edge_count());
    auto rots = g.rotations();
    auto twists = g.twists();
    // e keeps its end 0 and its twist; its end 1 moves to the new vertex
    rots[p1.vertex][p1.index] = Dart{nb, 1};
    rots.push_back({Dart{static_cast<std::uint32_t>(e), 1}, Dart{nb, 0}});
    twists.push_back(false);
    auto enames = g.edge_names();
    enames.push_back(unique_name(g.edge_name(e) + "b", enames));
    auto vnames = g.vertex_names();
    vnames.push_back(unique_name("w", vnames));
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists),
                                       std::move(vnames), std::move(enames));
}

RibbonGraph delete_edge(const RibbonGraph& g, std::size_t e) {
    locate(g, e);  // validates
    return RibbonGraph::from_rotations(without_edge(g.rotations(), e),
                                       without_twist(g.twists(), e),
                                       g.vertex_names(), drop_edge_name(g, e));
}

RibbonGraph contract(const RibbonGraph& g, std::size_t e) {
    auto [p0, p1] = locate(g, e);
    if (p0.vertex == p1.vertex)
        throw PreconditionError("cannot contract loop '" + g.edge_name(e) + "'");
    if (g.twisted(e)) return contract(vertex_flip(g, p1.vertex), e);

    const auto& ru = g.rotation(p0.vertex);
    const auto& rv = g.rotation(p1.vertex);
    std::vector<Dart> merged;
    merged.reserve(ru.size() + rv.size() - 2);
    for (std::size_t k = 1; k < ru.size(); ++k)
        merged.push_back(ru[(p0.index + k) % ru.size()]);
    for (std::size_t k = 1; k < rv.size(); ++k)
        merged.push_back(rv[(p1.index + k) % rv.size()]);

    std::vector<std::vector<Dart>> rots;
    std::vector<std::string> vnames;
    const std::size_t keep = std::min(p0.vertex, p1.vertex);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (v == keep) {
            rots.push_back(merged);
            vnames.push_back(g.vertex_name(p0.vertex));
        } else if (v == p0.vertex || v == p1.vertex) {
            continue;
        } else {
            rots.push_back(g.rotation(v));
            vnames.push_back(g.vertex_name(v));
        }
    }
    return RibbonGraph::from_rotations(without_edge(std::move(rots), e),
                                       without_twist(g.twists(), e),
                                       std::move(vnames), drop_edge_name(g, e));
}

RibbonGraph join(const RibbonGraph& g1, std::size_t v1, std::size_t p1,
                 const RibbonGraph& g2, std::size_t v2, std::size_t p2) {
    if (v1 >= g1.vertex_count() || v2 >= g2.vertex_count())
        throw ArgumentError("unknown join vertex");
    if (p1 > g1.rotation(v1).size() || p2 > g2.rotation(v2).size())
        throw ArgumentError("join gap index out of range");

    const auto shift = static_cast<std::uint32_t>(g1.edge_count());
    auto rots = g1.rotations();
    auto twists = g1.twists();
    for (bool t : g2.twists()) twists.push_back(t);

    auto shifted = [&](Dart d) { return Dart{d.edge + shift, d.end}; };
    const auto& r2 = g2.rotation(v2);
    std::vector<Dart> merged;
    merged.reserve(rots[v1].size() + r2.size());
    merged.insert(merged.end(), rots[v1].begin(), rots[v1].begin() + p1);
    for (std::size_t k = 0; k < r2.size(); ++k)
        merged.push_back(shifted(r2[(p2 + k) % r2.size()]));
    merged.insert(merged.end(), rots[v1].begin() + p1, rots[v1].end());
    rots[v1] = std::move(merged);

    auto vnames = g1.vertex_names();
    auto enames = g1.edge_names();
    for (std::size_t v = 0; v < g2.vertex_count(); ++v) {
        if (v == v2) continue;
        std::vector<Dart> rot;
        rot.reserve(g2.rotation(v).size());
        for (Dart d : g2.rotation(v)) rot.push_back(shifted(d));
        rots.push_back(std::move(rot));
        vnames.push_back(unique_name(g2.vertex_name(v), vnames));
    }
    for (std::size_t e = 0; e < g2.edge_count(); ++e)
        enames.push_back(unique_name(g2.edge_name(e), enames));
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists),
                                       std::move(vnames), std::move(enames));
}

bool is_bridge(const RibbonGraph& g, std::size_t e) {
    return components(delete_edge(g, e)) > components(g);
}

}  // namespace rgt
