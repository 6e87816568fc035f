#pragma once

#include <vector>

#include "simplet/complex.hpp"
#include "simplet/generate.hpp"

namespace simplet::testing {

inline SimplicialComplex filled_triangle() { return build_complex({{0, 1, 2}}, 3); }

inline SimplicialComplex empty_triangle() { return build_complex({{0, 1}, {1, 2}, {0, 2}}, 3); }

inline SimplicialComplex path(Vertex n)
{
    std::vector<VertexSet> facets;
    for (Vertex v = 0; v + 1 < n; ++v) {
        facets.push_back({v, v + 1});
    }
    return build_complex(facets, n);
}

inline SimplicialComplex cycle(Vertex n)
{
    std::vector<VertexSet> facets;
    for (Vertex v = 0; v < n; ++v) {
        facets.push_back({v, (v + 1) % n});
    }
    return build_complex(facets, n);
}

/// Centre 0, leaves 1..leaves.
inline SimplicialComplex star(Vertex leaves)
{
    std::vector<VertexSet> facets;
    for (Vertex v = 1; v <= leaves; ++v) {
        facets.push_back({0, v});
    }
    return build_complex(facets, leaves + 1);
}

/// 4-cycle 0-1-2-3 with chord {0,2}; triangle {0,1,2} filled, {0,2,3} empty.
inline SimplicialComplex diamond_one_filled() { return build_complex({{0, 1, 2}, {2, 3}, {0, 3}}, 4); }

/// Filled triangle {0,1,2} with pendant edge {2,3}.
inline SimplicialComplex triangle_with_tail() { return build_complex({{0, 1, 2}, {2, 3}}, 4); }

/// Filled triangle {0,1,2} with path 2-3-4 attached.
inline SimplicialComplex triangle_with_path() { return build_complex({{0, 1, 2}, {2, 3}, {3, 4}}, 5); }

inline SimplicialComplex complete_graph(Vertex n)
{
    std::vector<VertexSet> facets;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            facets.push_back({u, v});
        }
    }
    return build_complex(facets, n);
}

/// Small random complexes alternating between both generator models.
inline SimplicialComplex random_small(std::uint64_t seed, std::size_t n)
{
    GenSpec spec;
    spec.model = seed % 2 == 0 ? GenModel::flag : GenModel::lm;
    spec.n = n;
    spec.p_edge = 0.3 + 0.05 * static_cast<double>(seed % 7);
    spec.p_tri = 0.6;
    spec.p_tet = 0.5;
    spec.seed = seed;
    return generate(spec);
}

}  // namespace simplet::testing
