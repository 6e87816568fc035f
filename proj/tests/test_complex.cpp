#include <random>

#include "doctest.h"
#include "simplet/complex.hpp"
#include "simplet/errors.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace simplet;
using namespace simplet::testing;

TEST_CASE("build_complex keeps only maximal facets")
{
    auto tri = filled_triangle();
    CHECK(tri.facets().size() == 1);
    CHECK(tri.edge_count() == 3);
    CHECK(tri.max_degree() == 2);

    auto reduced = build_complex({{0, 1}, {1, 2}, {0, 1, 2}}, 3);
    REQUIRE(reduced.facets().size() == 1);
    CHECK(reduced.facets()[0] == VertexSet{0, 1, 2});

    auto dup = build_complex({{2, 1}, {1, 2}, {1, 2, 2}}, 3);
    CHECK(dup.facets() == std::vector<VertexSet>{{1, 2}});

    auto split = build_complex({{0, 1}, {2, 3}}, 4);
    CHECK(split.facets().size() == 2);
    CHECK(split.edge_count() == 2);
    CHECK_THROWS_AS(skeleton_diameter(split), StructuralError);
}

TEST_CASE("build_complex rejects bad input")
{
    CHECK_THROWS_AS(build_complex({{0, 3}}, 3), InputError);
    CHECK_THROWS_AS(build_complex({{0, 1}, {}}, 3), InputError);
}

TEST_CASE("contains_simplex")
{
    auto tri = filled_triangle();
    CHECK(tri.contains_simplex(VertexSet{0, 1}));
    CHECK(tri.contains_simplex(VertexSet{0, 1, 2}));
    CHECK(tri.contains_simplex(VertexSet{2}));
    CHECK_FALSE(empty_triangle().contains_simplex(VertexSet{0, 1, 2}));
    CHECK_THROWS_AS(tri.contains_simplex(VertexSet{0, 5}), InputError);
    CHECK_THROWS_AS(tri.contains_simplex(VertexSet{}), InputError);
}

TEST_CASE("induced_subcomplex")
{
    auto tri = filled_triangle();
    auto edge = induced_subcomplex(tri, {0, 1});
    REQUIRE(edge);
    CHECK(edge->simplices() == std::vector<VertexSet>{{0}, {0, 1}, {1}});

    auto p = path(3);
    CHECK_FALSE(induced_subcomplex(p, {0, 2}).has_value());

    auto tail = triangle_with_tail();
    auto whole = induced_subcomplex(tail, {3, 1, 0, 2});
    REQUIRE(whole);
    CHECK(whole->vertices() == VertexSet{0, 1, 2, 3});
    CHECK(whole->simplices() == naive_simplices(tail, {0, 1, 2, 3}));
    CHECK(whole->simplices().size() == 4 + 4 + 1);  // vertices, 3 + 1 edges, one triangle

    CHECK_THROWS_AS(induced_subcomplex(tail, {1}), InputError);
    CHECK_THROWS_AS(induced_subcomplex(tail, {1, 9}), InputError);
}

TEST_CASE("skeleton_diameter examples")
{
    CHECK(skeleton_diameter(filled_triangle()).value == 1);
    CHECK(skeleton_diameter(path(4)).value == 3);
    CHECK(skeleton_diameter(cycle(4)).value == 2);
    CHECK_FALSE(skeleton_diameter(cycle(4)).estimated);

    // Above the threshold the double sweep is a lower bound at least the
    // eccentricity of the sweep start.
    auto p = path(9);
    auto est = skeleton_diameter(p, 4);
    CHECK(est.estimated);
    CHECK(est.value == 8);
    CHECK(skeleton_diameter(cycle(9), 4).value == 4);
}

TEST_CASE("properties on random complexes")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto k = random_small(seed, 7 + seed % 4);
        CAPTURE(seed);

        // Facets form an antichain.
        const auto& facets = k.facets();
        for (std::size_t i = 0; i < facets.size(); ++i) {
            for (std::size_t j = 0; j < facets.size(); ++j) {
                if (i != j) {
                    CHECK_FALSE(std::includes(facets[j].begin(), facets[j].end(), facets[i].begin(),
                                              facets[i].end()));
                }
            }
        }

        // Downward closure over every facet.
        for (const auto& f : facets) {
            for (std::uint32_t sub = 1; sub < (1u << f.size()); ++sub) {
                VertexSet s;
                for (std::size_t b = 0; b < f.size(); ++b) {
                    if ((sub >> b) & 1u) {
                        s.push_back(f[b]);
                    }
                }
                CHECK(k.contains_simplex(s));
            }
        }

        // Adjacency is symmetric, matches the 1-simplices, and max_degree agrees.
        std::size_t max_deg = 0;
        for (Vertex u = 0; u < k.vertex_count(); ++u) {
            max_deg = std::max(max_deg, k.degree(u));
            for (Vertex v = 0; v < k.vertex_count(); ++v) {
                if (u != v) {
                    CHECK(k.adjacent(u, v) == naive_edge(k, u, v));
                    CHECK(k.adjacent(u, v) == k.adjacent(v, u));
                }
            }
        }
        CHECK(max_deg == k.max_degree());

        // Induced sub-complexes match exhaustive subset enumeration.
        std::mt19937_64 rng(seed);
        for (int trial = 0; trial < 40; ++trial) {
            VertexSet s;
            for (Vertex v = 0; v < k.vertex_count(); ++v) {
                if (rng() % 3 == 0 && s.size() < 6) {
                    s.push_back(v);
                }
            }
            if (s.size() < 2) {
                continue;
            }
            auto simplet = induced_subcomplex(k, s);
            CHECK(simplet.has_value() == naive_connected(k, s));
            if (simplet) {
                CHECK(simplet->simplices() == naive_simplices(k, s));
                auto local = simplet->local_structure();
                for (unsigned sub = 0; sub < (1u << s.size()); ++sub) {
                    if (std::popcount(sub) < 2) {
                        continue;
                    }
                    VertexSet t;
                    for (std::size_t b = 0; b < s.size(); ++b) {
                        if ((sub >> b) & 1u) {
                            t.push_back(s[b]);
                        }
                    }
                    CHECK(local.has(sub) == naive_is_simplex(k, t));
                }
            }
        }

        // Exact diameter agrees with Floyd-Warshall.
        auto fw = naive_diameter(k);
        if (fw == SIZE_MAX) {
            CHECK_THROWS_AS(skeleton_diameter(k), StructuralError);
        } else {
            CHECK(skeleton_diameter(k).value == fw);
        }
    }
}

TEST_CASE("double sweep bound on connected random complexes")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto k = random_small(seed, 12);
        auto exact = naive_diameter(k);
        if (exact == SIZE_MAX) {
            continue;
        }
        auto est = skeleton_diameter(k, 1);
        CHECK(est.estimated);
        CHECK(est.value <= exact);
        CHECK(2 * est.value >= exact);
    }
}

TEST_CASE("skeleton_components orders ids by lowest vertex")
{
    auto k = build_complex({{3, 4}, {0, 2}, {1}}, 5);
    CHECK(skeleton_components(k) == std::vector<std::size_t>{0, 1, 0, 2, 2});
}
