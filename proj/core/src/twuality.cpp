#include "rgt/twuality.hpp"

#include "rgt/flag_system.hpp"

namespace rgt {

TwualityWord TwualityWord::parse(std::string_view text) {
    TwualityWord w;
    for (char ch : text) {
        switch (ch) {
            case '*': w.ops_.push_back(Op::dual); break;
            case 'x': case 'X': w.ops_.push_back(Op::petrial); break;
            default:
                throw ArgumentError("invalid twuality word character '" +
                                    std::string(1, ch) + "'");
        }
    }
    const bool known = w.ops_.size() == 1 ||
                       (w.ops_.size() == 2 && w.ops_[0] != w.ops_[1]) ||
                       (w.ops_.size() == 3 && w.ops_[0] == Op::dual &&
                        w.ops_[1] == Op::petrial && w.ops_[2] == Op::dual);
    if (!known)
        throw ArgumentError("'" + std::string(text) +
                            "' is not one of the five twuality words "
                            "*, x, x*, *x, *x*");
    return w;
}

std::string TwualityWord::to_string() const {
    std::string s;
    for (Op op : ops_) s += (op == Op::dual ? '*' : 'x');
    return s;
}

namespace {

void check_subset(const RibbonGraph& g, const EdgeSubset& a) {
    if (a.universe() != g.edge_count())
        throw ArgumentError("edge subset universe does not match the graph");
}

}  // namespace

RibbonGraph partial_petrial(const RibbonGraph& g, const EdgeSubset& a) {
    check_subset(g, a);
    auto twists = g.twists();
    for (std::size_t e : a.members()) twists[e] = !twists[e];
    return RibbonGraph::from_rotations(g.rotations(), std::move(twists),
                                       g.vertex_names(), g.edge_names());
}

std::size_t spanning_subgraph_faces(const RibbonGraph& g, const EdgeSubset& a) {
    check_subset(g, a);
    const std::size_t nf = 4 * g.edge_count();
    std::vector<std::uint32_t> corner(nf, 0);
    std::size_t faceless_vertices = 0;
    std::vector<Dart> present;
    for (const auto& rot : g.rotations()) {
        present.clear();
        for (const Dart& d : rot)
            if (a.contains(d.edge)) present.push_back(d);
        if (present.empty()) {
            ++faceless_vertices;
            continue;
        }
        const std::size_t k = present.size();
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t x = flag_id(present[j], 1);
            const std::uint32_t y = flag_id(present[(j + 1) % k], 0);
            corner[x] = y;
            corner[y] = x;
        }
    }
    std::vector<bool> seen(nf, false);
    std::size_t count = faceless_vertices;
    for (std::size_t e : a.members()) {
        const std::uint32_t f0 = 4 * static_cast<std::uint32_t>(e);
        for (std::uint32_t start = f0; start < f0 + 4; ++start) {
            if (seen[start]) continue;
            ++count;
            std::uint32_t x = start;
            while (!seen[x]) {
                std::uint32_t y;  // band partner under this edge's twist
                const std::uint32_t base = (x / 4) * 4;
                const std::uint32_t off = x % 4;
                if (g.twists()[x / 4]) {
                    y = base + (off ^ 2u);
                } else {
                    y = base + (3u - off);
                }
                seen[x] = seen[y] = true;
                x = corner[y];
            }
        }
    }
    return count;
}

std::size_t partial_dual_euler_genus(const RibbonGraph& g, const EdgeSubset& a) {
    check_subset(g, a);
    return 2 * components(g) + g.edge_count() - spanning_subgraph_faces(g, a) -
           spanning_subgraph_faces(g, a.complement());
}

RibbonGraph partial_dual(const RibbonGraph& g, const EdgeSubset& a) {
    check_subset(g, a);
    FlagSystem fs = FlagSystem::of(g);
    for (std::size_t e : a.members()) fs.swap_dual(e);
    RibbonGraph out = fs.to_ribbon_graph();
    return RibbonGraph::from_rotations(out.rotations(), out.twists(),
                                       out.vertex_names(), g.edge_names());
}

RibbonGraph apply_twuality(const RibbonGraph& g, const TwualityWord& w,
                           const EdgeSubset& a) {
    check_subset(g, a);
    if (w.ops().size() == 1) {
        if (w.ops()[0] == TwualityWord::Op::petrial) return partial_petrial(g, a);
        return partial_dual(g, a);
    }
    FlagSystem fs = FlagSystem::of(g);
    for (std::size_t e : a.members()) {
        for (TwualityWord::Op op : w.ops()) {
            if (op == TwualityWord::Op::dual)
                fs.swap_dual(e);
            else
                fs.compose_petrial(e);
        }
    }
    RibbonGraph out = fs.to_ribbon_graph();
    return RibbonGraph::from_rotations(out.rotations(), out.twists(),
                                       out.vertex_names(), g.edge_names());
}

bool is_orientable_petrial(const RibbonGraph& g, const EdgeSubset& a) {
    check_subset(g, a);
    return is_orientable(partial_petrial(g, a));
}

}  // namespace rgt
