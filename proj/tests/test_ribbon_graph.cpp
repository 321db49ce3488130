#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rgt/catalog.hpp"
#include "rgt/recursions.hpp"
#include "rgt/ribbon_graph.hpp"

using namespace rgt;

namespace {

RibbonGraph twisted_loop() {
    return RibbonGraph::from_rotations({{{0, 0}, {0, 1}}}, {true});
}

RibbonGraph with_twists(const RibbonGraph& g, std::vector<bool> twists) {
    return RibbonGraph::from_rotations(g.rotations(), std::move(twists),
                                       g.vertex_names(), g.edge_names());
}

}  // namespace

TEST_CASE("face tracing on the pinned small graphs") {
    CHECK(face_count(build_catalog("k3")) == 2);
    CHECK(face_count(twisted_loop()) == 1);

    const RibbonGraph d5 = build_catalog("dipole", 5);
    CHECK(face_count(d5) == 5);
    CHECK(face_count(with_twists(d5, std::vector<bool>(5, true))) == 1);
}

TEST_CASE("flag conservation and determinism") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 100; ++t) {
        const RibbonGraph g = random_ribbon_graph(rng, 8);
        const auto walks = trace_faces(g);
        std::size_t flags = 0;
        std::vector<bool> seen(4 * g.edge_count(), false);
        for (const auto& w : walks) {
            flags += w.flags.size();
            for (auto f : w.flags) {
                CHECK_FALSE(seen[f]);
                seen[f] = true;
            }
        }
        CHECK(flags == 4 * g.edge_count());
        CHECK(face_count(g) == testing::oracle_face_count(g));
        // deterministic start: each walk begins at its smallest flag
        for (const auto& w : walks)
            if (!w.flags.empty())
                CHECK(w.flags.front() ==
                      *std::min_element(w.flags.begin(), w.flags.end()));
    }
}

TEST_CASE("euler genus") {
    CHECK(euler_genus(build_catalog("k3")) == 0);
    const RibbonGraph c3t = with_twists(build_catalog("k3"), {true, false, false});
    CHECK(face_count(c3t) == 1);
    CHECK(euler_genus(c3t) == 1);
    const RibbonGraph d5x =
        with_twists(build_catalog("dipole", 5), std::vector<bool>(5, true));
    CHECK(euler_genus(d5x) == 4);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const RibbonGraph g = random_ribbon_graph(rng, 9);
        CHECK(euler_genus(g) >= 0);  // size_t, but must not wrap either
        CHECK(2 * components(g) + g.edge_count() >=
              g.vertex_count() + face_count(g));
        if (is_orientable(g)) CHECK(euler_genus(g) % 2 == 0);
    }
}

TEST_CASE("components") {
    CHECK(components(RibbonGraph::from_rotations({{}, {}}, {})) == 2);
    CHECK(components(build_catalog("k3")) == 1);
    // C3 plus a disjoint K2
    RibbonGraph both = RibbonGraph::from_rotations(
        {{{0, 0}, {2, 1}}, {{0, 1}, {1, 0}}, {{1, 1}, {2, 0}}, {{3, 0}}, {{3, 1}}},
        {false, false, false, false});
    CHECK(components(both) == 2);
    CHECK(euler_genus(both) == 0);
}

TEST_CASE("orientability") {
    CHECK(is_orientable(build_catalog("k3")));
    CHECK_FALSE(is_orientable(twisted_loop()));
    RibbonGraph d5one = with_twists(build_catalog("dipole", 5),
                                    {true, false, false, false, false});
    CHECK_FALSE(is_orientable(d5one));

    std::mt19937_64 rng(17);
    for (int t = 0; t < 120; ++t) {
        const RibbonGraph g = random_ribbon_graph(rng, 8);
        CHECK(is_orientable(g) == testing::oracle_is_orientable(g));
    }
}

TEST_CASE("vertex flips") {
    const RibbonGraph k2 = build_catalog("k2");
    const RibbonGraph f0 = vertex_flip(k2, 0);
    CHECK(face_count(f0) == 1);
    CHECK(euler_genus(f0) == 0);

    const RibbonGraph c3t = with_twists(build_catalog("k3"), {true, false, false});
    CHECK(euler_genus(vertex_flip(c3t, 0)) == 1);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        const RibbonGraph g = random_ribbon_graph(rng, 8);
        const std::size_t v = rng() % g.vertex_count();
        const RibbonGraph h = vertex_flip(g, v);
        CHECK(h.vertex_count() == g.vertex_count());
        CHECK(h.edge_count() == g.edge_count());
        CHECK(components(h) == components(g));
        CHECK(face_count(h) == face_count(g));
        CHECK(euler_genus(h) == euler_genus(g));
        CHECK(is_orientable(h) == is_orientable(g));
        // double flip returns the original up to rotation reflection
        const RibbonGraph hh = vertex_flip(h, v);
        CHECK(hh == g);
    }
    CHECK_THROWS_AS(vertex_flip(k2, 9), ArgumentError);
}

TEST_CASE("structural validation") {
    CHECK_THROWS_AS(
        RibbonGraph::from_rotations({{{0, 0}, {0, 0}}, {{0, 1}}}, {false}),
        StructuralError);
    CHECK_THROWS_AS(RibbonGraph::from_rotations({{{0, 0}}}, {false}),
                    StructuralError);
    CHECK_THROWS_AS(RibbonGraph::from_rotations({{{1, 0}}}, {false}),
                    StructuralError);
}

TEST_CASE("canonical form identifies presentations of one embedding") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; ++t) {
        const RibbonGraph g = random_ribbon_graph(rng, 7);
        RibbonGraph h = g;
        for (int k = 0; k < 3; ++k) h = vertex_flip(h, rng() % h.vertex_count());
        CHECK(canonical_form(h) == canonical_form(g));
        CHECK(canonical_form(canonical_form(g)) == canonical_form(g));
    }
    // graphs that differ stay apart: one twist on a cycle edge
    const RibbonGraph k3 = build_catalog("k3");
    const RibbonGraph k3t = with_twists(k3, {true, false, false});
    CHECK_FALSE(canonical_form(k3) == canonical_form(k3t));
}
