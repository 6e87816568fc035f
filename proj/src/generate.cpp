#include "simplet/generate.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "simplet/errors.hpp"

namespace simplet {

namespace {

void check_probability(double p, const char* name)
{
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError(std::string(name) + " must lie in [0, 1]");
    }
}

}  // namespace

SimplicialComplex generate(const GenSpec& spec)
{
    if (spec.n < 3) {
        throw InputError("generator needs n >= 3");
    }
    check_probability(spec.p_edge, "p_edge");
    check_probability(spec.p_tri, "p_tri");
    check_probability(spec.p_tet, "p_tet");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto coin = [&](double p) { return unit(rng) < p; };
    const auto n = static_cast<Vertex>(spec.n);

    std::vector<VertexSet> adjacency(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(spec.p_edge)) {
                adjacency[u].push_back(v);
                adjacency[v].push_back(u);
            }
        }
    }
    auto adjacent = [&](Vertex a, Vertex b) { return std::binary_search(adjacency[a].begin(), adjacency[a].end(), b); };

    std::vector<VertexSet> simplices;
    for (Vertex v = 0; v < n; ++v) {
        simplices.push_back({v});
        for (Vertex u : adjacency[v]) {
            if (v < u) {
                simplices.push_back({v, u});
            }
        }
    }

    const bool flag = spec.model == GenModel::flag;
    std::vector<VertexSet> filled_triangles;
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b : adjacency[a]) {
            if (b <= a) {
                continue;
            }
            for (Vertex c : adjacency[b]) {
                if (c <= b || !adjacent(a, c)) {
                    continue;
                }
                if (flag || coin(spec.p_tri)) {
                    filled_triangles.push_back({a, b, c});
                }
            }
        }
    }
    // Enumeration above is lexicographic, so the list is sorted.
    auto filled = [&](Vertex a, Vertex b, Vertex c) {
        return std::binary_search(filled_triangles.begin(), filled_triangles.end(), VertexSet{a, b, c});
    };
    for (const auto& t : filled_triangles) {
        for (Vertex d : adjacency[t[2]]) {
            if (d <= t[2] || !adjacent(t[0], d) || !adjacent(t[1], d)) {
                continue;
            }
            if (!filled(t[0], t[1], d) || !filled(t[0], t[2], d) || !filled(t[1], t[2], d)) {
                continue;
            }
            if (flag || coin(spec.p_tet)) {
                simplices.push_back({t[0], t[1], t[2], d});
            }
        }
    }
    simplices.insert(simplices.end(), filled_triangles.begin(), filled_triangles.end());
    return build_complex(std::move(simplices), spec.n);
}

Restriction largest_connected_restriction(const SimplicialComplex& complex)
{
    if (complex.edge_count() == 0) {
        throw StructuralError("complex has no edges");
    }
    auto comp = skeleton_components(complex);
    const std::size_t components = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<std::size_t> sizes(components, 0);
    for (auto c : comp) {
        ++sizes[c];
    }
    // Component ids follow lowest member vertex, so the first maximum wins ties.
    const auto best = static_cast<std::size_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    Restriction out;
    std::vector<Vertex> new_id(complex.vertex_count(), 0);
    for (Vertex v = 0; v < complex.vertex_count(); ++v) {
        if (comp[v] == best) {
            new_id[v] = static_cast<Vertex>(out.original_ids.size());
            out.original_ids.push_back(v);
        }
    }
    std::vector<VertexSet> facets;
    for (const auto& f : complex.facets()) {
        if (comp[f.front()] != best) {
            continue;
        }
        VertexSet mapped;
        for (Vertex v : f) {
            mapped.push_back(new_id[v]);
        }
        facets.push_back(std::move(mapped));
    }
    out.complex = build_complex(std::move(facets), out.original_ids.size());
    return out;
}

}  // namespace simplet
