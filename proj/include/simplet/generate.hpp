#pragma once

#include <cstdint>
#include <vector>

#include "simplet/complex.hpp"

namespace simplet {

enum class GenModel {
    flag,  ///< clique complex of G(n, p_edge), truncated at dimension 3
    lm,    ///< G(n, p_edge) with triangles filled w.p. p_tri, tetrahedra w.p. p_tet
};

struct GenSpec {
    GenModel model = GenModel::flag;
    std::size_t n = 10;
    double p_edge = 0.5;
    double p_tri = 0.5;
    double p_tet = 0.5;
    std::uint64_t seed = 0;
};

/// Random complex on n vertices; isolated vertices are kept as 0-simplices.
/// Deterministic for a fixed spec. Throws InputError on invalid specs.
SimplicialComplex generate(const GenSpec& spec);

/// Induced sub-complex on the largest skeleton component, ids re-densified
/// in increasing original order. `original_ids[i]` is the source id of new
/// vertex i.
struct Restriction {
    SimplicialComplex complex;
    std::vector<Vertex> original_ids;
};

/// Ties between equally large components go to the one holding the lowest
/// vertex id. Throws StructuralError on a complex without edges.
Restriction largest_connected_restriction(const SimplicialComplex& complex);

}  // namespace simplet
