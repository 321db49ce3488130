#include "rgt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "rgt/edit.hpp"

namespace rgt {

namespace {

RibbonGraph make(std::vector<std::vector<Dart>> rots, std::vector<bool> twists,
                 std::vector<std::string> vnames, std::vector<std::string> enames) {
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists),
                                       std::move(vnames), std::move(enames));
}

RibbonGraph k2() {
    return make({{{0, 0}}, {{0, 1}}}, {false}, {"u", "v"}, {"e1"});
}

RibbonGraph path_graph(int n) {
    if (n < 1) throw ArgumentError("path needs n >= 1 edges");
    std::vector<std::vector<Dart>> rots;
    rots.push_back({Dart{0, 0}});
    for (std::uint32_t i = 1; i < static_cast<std::uint32_t>(n); ++i)
        rots.push_back({Dart{i - 1, 1}, Dart{i, 0}});
    rots.push_back({Dart{static_cast<std::uint32_t>(n) - 1, 1}});
    std::vector<std::string> vnames, enames;
    for (int v = 0; v <= n; ++v) vnames.push_back("v" + std::to_string(v + 1));
    for (int e = 0; e < n; ++e) enames.push_back("e" + std::to_string(e + 1));
    return make(std::move(rots), std::vector<bool>(n, false), std::move(vnames),
                std::move(enames));
}

RibbonGraph cycle_graph(int m) {
    if (m < 2) throw ArgumentError("cycle needs m >= 2");
    std::vector<std::vector<Dart>> rots;
    for (std::uint32_t v = 0; v < static_cast<std::uint32_t>(m); ++v) {
        const std::uint32_t prev = (v + m - 1) % m;
        rots.push_back({Dart{prev, 1}, Dart{v, 0}});
    }
    std::vector<std::string> vnames, enames;
    for (int v = 0; v < m; ++v) vnames.push_back("v" + std::to_string(v + 1));
    for (int e = 0; e < m; ++e) enames.push_back("e" + std::to_string(e + 1));
    return make(std::move(rots), std::vector<bool>(m, false), std::move(vnames),
                std::move(enames));
}

RibbonGraph dipole_graph(int n) {
    if (n < 1) throw ArgumentError("dipole needs n >= 1");
    std::vector<Dart> u, v;
    for (std::uint32_t e = 0; e < static_cast<std::uint32_t>(n); ++e)
        u.push_back(Dart{e, 0});
    for (std::uint32_t e = static_cast<std::uint32_t>(n); e-- > 0;)
        v.push_back(Dart{e, 1});  // reversed order embeds in the sphere
    std::vector<std::string> enames;
    for (int e = 0; e < n; ++e) enames.push_back("e" + std::to_string(e + 1));
    return make({std::move(u), std::move(v)}, std::vector<bool>(n, false),
                {"u", "v"}, std::move(enames));
}

// the series-parallel chain of Example 2.1: each round adds an edge parallel
// to the newest path edge and subdivides the addition; k rounds from K2 give
// the fan with 2k+1 edges (k = 2,3,4 are G2, G1, G)
RibbonGraph ex21_chain(int rounds, bool stop_before_last_subdivision) {
    RibbonGraph g = k2();
    std::size_t doubling_edge = 0;
    for (int r = 0; r < rounds; ++r) {
        const std::size_t fresh = g.edge_count();
        g = add_parallel_edge(g, doubling_edge);
        if (stop_before_last_subdivision && r + 1 == rounds) break;
        g = subdivide(g, fresh);
        doubling_edge = fresh;
    }
    // systematic names for the finished graph
    std::vector<std::string> enames, vnames;
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        enames.push_back("e" + std::to_string(e + 1));
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        vnames.push_back("v" + std::to_string(v + 1));
    return make(g.rotations(), g.twists(), std::move(vnames), std::move(enames));
}

// two planar triangles sharing the hub x, plus the twisted edge e between
// the outer vertices u2 and w2; labels transcribed from the figure:
//   e1 = u2-u3, e2 = x-u2, e3 = u3-x, e4 = x-w2, e5 = w2-w3, e6 = w3-x
RibbonGraph sec3_g() {
    const std::uint32_t E1 = 0, E2 = 1, E3 = 2, E4 = 3, E5 = 4, E6 = 5, E = 6;
    std::vector<std::vector<Dart>> rots = {
        /* x  */ {{E2, 0}, {E3, 1}, {E4, 0}, {E6, 1}},
        /* u2 */ {{E2, 1}, {E1, 0}, {E, 0}},
        /* u3 */ {{E1, 1}, {E3, 0}},
        /* w2 */ {{E4, 1}, {E5, 0}, {E, 1}},
        /* w3 */ {{E5, 1}, {E6, 0}},
    };
    std::vector<bool> twists(7, false);
    twists[E] = true;
    return make(std::move(rots), std::move(twists), {"x", "u2", "u3", "w2", "w3"},
                {"e1", "e2", "e3", "e4", "e5", "e6", "e"});
}

// planar K4 minus an edge; e3 is the chord, e the distinguished 4-cycle edge
RibbonGraph sec4_g() {
    const std::uint32_t E1 = 0, E2 = 1, E3 = 2, E4 = 3, E = 4;
    std::vector<std::vector<Dart>> rots = {
        /* a */ {{E1, 0}, {E2, 0}},
        /* b */ {{E4, 0}, {E, 0}},
        /* c */ {{E1, 1}, {E3, 0}, {E, 1}},
        /* d */ {{E2, 1}, {E4, 1}, {E3, 1}},
    };
    return make(std::move(rots), std::vector<bool>(5, false), {"a", "b", "c", "d"},
                {"e1", "e2", "e3", "e4", "e"});
}

RibbonGraph add_parallels(RibbonGraph g, std::size_t e, int n) {
    for (int i = 0; i < n; ++i) g = add_parallel_edge(g, e);
    return g;
}

int require_n(std::optional<int> n, std::string_view key) {
    if (!n)
        throw ArgumentError("catalog key '" + std::string(key) +
                            "' needs the size parameter n");
    return *n;
}

}  // namespace

RibbonGraph normalize_presentation(const RibbonGraph& g) {
    std::vector<std::size_t> order(g.vertex_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return g.vertex_name(a) < g.vertex_name(b);
    });
    auto dart_key = [&](const Dart& d) {
        return std::pair<std::string, unsigned>(g.edge_name(d.edge), d.end);
    };
    std::vector<std::vector<Dart>> rots;
    std::vector<std::string> vnames;
    for (std::size_t i : order) {
        auto rot = g.rotation(i);
        if (!rot.empty()) {
            auto it = std::min_element(rot.begin(), rot.end(),
                                       [&](const Dart& a, const Dart& b) {
                                           return dart_key(a) < dart_key(b);
                                       });
            std::rotate(rot.begin(), it, rot.end());
        }
        rots.push_back(std::move(rot));
        vnames.push_back(g.vertex_name(i));
    }
    // renumber edge ids by first appearance in the normalized reading order,
    // so parsing a rendering reproduces the ids as well
    std::vector<std::uint32_t> remap(g.edge_count(), std::uint32_t(-1));
    std::uint32_t next = 0;
    for (const auto& rot : rots)
        for (const Dart& d : rot)
            if (remap[d.edge] == std::uint32_t(-1)) remap[d.edge] = next++;
    std::vector<bool> twists(g.edge_count());
    std::vector<std::string> enames(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        twists[remap[e]] = g.twists()[e];
        enames[remap[e]] = g.edge_name(e);
    }
    for (auto& rot : rots)
        for (Dart& d : rot) d.edge = remap[d.edge];
    return RibbonGraph::from_rotations(std::move(rots), std::move(twists),
                                       std::move(vnames), std::move(enames));
}

RibbonGraph build_catalog(std::string_view key, std::optional<int> n) {
    std::string k(key);
    std::transform(k.begin(), k.end(), k.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    RibbonGraph g;
    if (k == "k2") {
        g = k2();
    } else if (k == "k3") {
        g = cycle_graph(3);
    } else if (k == "path") {
        g = path_graph(require_n(n, key));
    } else if (k == "cycle") {
        g = cycle_graph(require_n(n, key));
    } else if (k == "dipole") {
        g = dipole_graph(require_n(n, key));
    } else if (k == "ex21_g2") {
        g = ex21_chain(2, false);
    } else if (k == "ex21_g1") {
        g = ex21_chain(3, false);
    } else if (k == "ex21_h") {
        g = ex21_chain(4, true);
    } else if (k == "ex21_g") {
        g = ex21_chain(4, false);
    } else if (k == "sec3_g") {
        g = sec3_g();
    } else if (k == "sec3_g_over_e1") {
        g = contract(sec3_g(), sec3_g().edge_by_name("e1"));
    } else if (k == "sec3_g_plus") {
        g = sec3_g();
        g = add_parallels(g, g.edge_by_name("e1"), require_n(n, key));
    } else if (k == "sec4_g") {
        g = sec4_g();
    } else if (k == "sec4_g_plus") {
        g = sec4_g();
        g = add_parallels(g, g.edge_by_name("e"), require_n(n, key));
    } else if (k == "c4_plus") {
        g = cycle_graph(4);
        g = add_parallels(g, g.edge_by_name("e1"), require_n(n, key));
    } else {
        throw ArgumentError("unknown catalog key '" + std::string(key) + "'");
    }
    return normalize_presentation(g);
}

std::vector<CatalogKey> catalog_keys() {
    return {
        {"k2", false},          {"k3", false},
        {"path", true},         {"cycle", true},
        {"dipole", true},       {"ex21_g2", false},
        {"ex21_g1", false},     {"ex21_h", false},
        {"ex21_g", false},      {"sec3_g", false},
        {"sec3_g_over_e1", false}, {"sec3_g_plus", true},
        {"sec4_g", false},      {"sec4_g_plus", true},
        {"c4_plus", true},
    };
}

std::vector<std::pair<std::string, RibbonGraph>> catalog_instances() {
    std::vector<std::pair<std::string, RibbonGraph>> out;
    auto add = [&](const std::string& key, std::optional<int> n = std::nullopt) {
        std::string label = key;
        if (n) label += "(" + std::to_string(*n) + ")";
        out.push_back({label, build_catalog(key, n)});
    };
    add("k2");
    add("k3");
    add("path", 2);
    add("path", 3);
    add("cycle", 2);
    add("cycle", 4);
    add("cycle", 5);
    add("dipole", 2);
    add("dipole", 3);
    add("dipole", 5);
    add("ex21_g2");
    add("ex21_g1");
    add("ex21_h");
    add("ex21_g");
    add("sec3_g");
    add("sec3_g_over_e1");
    add("sec3_g_plus", 1);
    add("sec4_g");
    add("sec4_g_plus", 1);
    add("c4_plus", 1);
    return out;
}

}  // namespace rgt
