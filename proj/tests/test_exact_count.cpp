#include <random>
#include <set>

#include "doctest.h"
#include "simplet/catalog.hpp"
#include "simplet/errors.hpp"
#include "simplet/exact_count.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace simplet;
using namespace simplet::testing;

namespace {

std::size_t index_of(const SimpletCatalog& catalog, const SimplicialComplex& k, const VertexSet& s)
{
    return catalog.type_index(naive_key_of(k, s));
}

SimplicialComplex relabeled(const SimplicialComplex& k, const std::vector<Vertex>& perm)
{
    std::vector<VertexSet> facets;
    for (const auto& f : k.facets()) {
        VertexSet g;
        for (Vertex v : f) {
            g.push_back(perm[v]);
        }
        facets.push_back(g);
    }
    return build_complex(facets, k.vertex_count());
}

}  // namespace

TEST_CASE("enumerate_connected_subsets examples")
{
    auto sorted = [](std::vector<VertexSet> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(enumerate_connected_subsets(filled_triangle(), 3)) ==
          std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {0, 2}, {1, 2}});
    CHECK(sorted(enumerate_connected_subsets(path(3), 3)) == std::vector<VertexSet>{{0, 1}, {0, 1, 2}, {1, 2}});
    CHECK(enumerate_connected_subsets(complete_graph(4), 4).size() == 11);
    CHECK(enumerate_connected_subsets(filled_triangle(), 1).empty());
}

TEST_CASE("enumeration is unique and matches all-subsets oracle")
{
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto k = random_small(seed, 8 + seed % 5);
        for (int m = 2; m <= 5; ++m) {
            auto got = enumerate_connected_subsets(k, m);
            std::set<VertexSet> unique(got.begin(), got.end());
            CHECK(unique.size() == got.size());
            std::sort(got.begin(), got.end());
            CHECK(got == naive_connected_subsets(k, m));
        }
    }
}

TEST_CASE("enumeration order is deterministic")
{
    auto k = random_small(3, 11);
    CHECK(enumerate_connected_subsets(k, 4) == enumerate_connected_subsets(k, 4));
}

TEST_CASE("exact_counts examples")
{
    auto catalog = generate_catalog(4);
    auto tri = filled_triangle();
    auto sfd = exact_counts(tri, catalog);
    const auto edge = index_of(catalog, tri, {0, 1});
    const auto filled = index_of(catalog, tri, {0, 1, 2});
    REQUIRE(sfd.counts);
    CHECK(sfd.total == 4);
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        std::uint64_t expected = i == edge ? 3 : i == filled ? 1 : 0;
        CHECK((*sfd.counts)[i] == expected);
    }
    CHECK(sfd.frequencies[edge] == doctest::Approx(0.75));
    CHECK(sfd.frequencies[filled] == doctest::Approx(0.25));
    CHECK(sfd.mode == "exact");

    // Simplets are induced: the only 3-vertex simplet of an empty triangle is
    // the empty triangle itself, so no 2-path is counted.
    auto hollow = empty_triangle();
    auto sfd2 = exact_counts(hollow, catalog);
    CHECK(sfd2.total == 4);
    CHECK(sfd2.total == naive_connected_subsets(hollow, 4).size());
    CHECK((*sfd2.counts)[edge] == 3);
    CHECK((*sfd2.counts)[index_of(catalog, hollow, {0, 1, 2})] == 1);
    CHECK((*sfd2.counts)[index_of(catalog, path(3), {0, 1, 2})] == 0);

    auto single = exact_counts(build_complex({{0, 1}}, 2), catalog);
    CHECK(single.total == 1);
    CHECK(single.frequencies[0] == 1.0);
}

TEST_CASE("exact_counts errors on complexes without simplets")
{
    auto catalog = generate_catalog(3);
    CHECK_THROWS_AS(exact_counts(build_complex({{0}, {1}}, 2), catalog), StructuralError);
}

TEST_CASE("exact_counts equals the naive all-subsets classifier")
{
    auto c3 = generate_catalog(3);
    auto c4 = generate_catalog(4);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto k = random_small(seed, 6 + seed % 7);
        CAPTURE(seed);
        if (k.edge_count() == 0) {
            continue;
        }
        for (const auto* catalog : {&c3, &c4}) {
            auto sfd = exact_counts(k, *catalog);
            CHECK(*sfd.counts == naive_counts(k, *catalog));
        }
    }
}

TEST_CASE("exact_counts is independent of thread count")
{
    auto catalog = generate_catalog(4);
    GenSpec spec{GenModel::flag, 40, 0.2, 0, 0, 9};
    auto k = generate(spec);
    auto one = exact_counts(k, catalog, 1);
    for (unsigned t : {2u, 3u, 8u}) {
        CHECK(*exact_counts(k, catalog, t).counts == *one.counts);
    }
}

TEST_CASE("exact_counts is invariant under vertex relabeling")
{
    auto catalog = generate_catalog(4);
    std::mt19937_64 rng(5);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto k = random_small(seed + 100, 10);
        if (k.edge_count() == 0) {
            continue;
        }
        auto base = *exact_counts(k, catalog).counts;
        std::vector<Vertex> perm(k.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        for (int t = 0; t < 10; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(*exact_counts(relabeled(k, perm), catalog).counts == base);
        }
    }
}

TEST_CASE("adding a facet never lowers the total")
{
    auto catalog = generate_catalog(4);
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        auto k = random_small(seed + 200, 9);
        if (k.edge_count() == 0) {
            continue;
        }
        auto before = exact_counts(k, catalog).total;
        auto facets = k.facets();
        VertexSet extra{static_cast<Vertex>(rng() % 9), static_cast<Vertex>(rng() % 9), static_cast<Vertex>(rng() % 9)};
        facets.push_back(extra);
        auto after = exact_counts(build_complex(facets, 9), catalog).total;
        CHECK(after >= before);
    }
}

TEST_CASE("sfd_from_counts")
{
    auto a = sfd_from_counts({3, 1, 0, 0}, 3);
    CHECK(a.frequencies == std::vector<double>{0.75, 0.25, 0.0, 0.0});
    CHECK(a.total == 4);
    auto b = sfd_from_counts({5, 0, 0}, 3);
    CHECK(b.frequencies == std::vector<double>{1.0, 0.0, 0.0});
    auto c = sfd_from_counts({1, 1, 1, 1}, 3);
    for (double f : c.frequencies) {
        CHECK(f == 0.25);
    }
    CHECK_THROWS_AS(sfd_from_counts({0, 0, 0}, 3), InputError);
    CHECK_THROWS_AS(sfd_from_counts({}, 3), InputError);
}

TEST_CASE("exact frequencies sum to one")
{
    auto catalog = generate_catalog(4);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto k = random_small(seed, 12);
        if (k.edge_count() == 0) {
            continue;
        }
        auto sfd = exact_counts(k, catalog);
        double sum = 0.0;
        for (std::size_t i = 0; i < sfd.frequencies.size(); ++i) {
            CHECK(sfd.frequencies[i] >= 0.0);
            CHECK(sfd.frequencies[i] ==
                  static_cast<double>((*sfd.counts)[i]) / static_cast<double>(sfd.total));
            sum += sfd.frequencies[i];
        }
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}
