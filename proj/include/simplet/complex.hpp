#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace simplet {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted, no duplicates

/// Largest vertex count for which local structure is packed into a bitmask.
inline constexpr int kMaxLocalVertices = 6;

/// Simplices of a small complex on k local vertices [0, k).
///
/// Bit `s` of `mask` is set iff the subset of local vertices whose bitmask
/// is `s` is a simplex. Only subsets with at least two elements are
/// recorded; 0-simplices are implied by `k`.
struct LocalComplex {
    int k = 0;
    std::uint64_t mask = 0;

    bool has(unsigned subset) const { return (mask >> subset) & 1u; }
    friend bool operator==(const LocalComplex&, const LocalComplex&) = default;
};

struct LocalComplexHash {
    std::size_t operator()(const LocalComplex& c) const noexcept
    {
        std::uint64_t h = c.mask * 0x9E3779B97F4A7C15ull;
        return static_cast<std::size_t>(h ^ (h >> 29) ^ static_cast<std::uint64_t>(c.k));
    }
};

/// True iff the 1-skeleton of `c` is connected over all k vertices.
bool skeleton_connected(const LocalComplex& c);

/// A finite abstract simplicial complex stored by its facets.
///
/// Vertices are dense ids [0, vertex_count). Downward closure is implicit: a
/// vertex set is a simplex iff it is a subset of some facet. Immutable after
/// construction; concurrent reads are safe.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds a complex from arbitrary simplices. Non-maximal entries and
    /// duplicates are dropped. Throws InputError on empty entries or ids
    /// outside [0, vertex_count).
    static SimplicialComplex from_facets(std::vector<VertexSet> simplices, std::size_t vertex_count);

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t max_degree() const { return max_degree_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Indices into facets() of the facets containing `v`.
    std::span<const std::uint32_t> incident_facets(Vertex v) const { return incidence_[v]; }

    /// True iff `s` (sorted) spans a simplex. Throws InputError on empty or
    /// out-of-range input.
    bool contains_simplex(std::span<const Vertex> s) const;

    /// Induced sub-complex on `s` (sorted, |s| <= kMaxLocalVertices) in local
    /// coordinates: local vertex i is s[i].
    LocalComplex local_structure(std::span<const Vertex> s) const;

    /// All 1-skeleton edges (u < v) in lexicographic order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// True iff the 1-skeleton restricted to `s` is connected.
    bool induces_connected(std::span<const Vertex> s) const;

    void check_vertex(Vertex v) const;

private:
    std::vector<VertexSet> facets_;
    std::vector<std::vector<std::uint32_t>> incidence_;
    std::vector<VertexSet> adjacency_;
    std::size_t edge_count_ = 0;
    std::size_t max_degree_ = 0;
};

/// Convenience wrapper for SimplicialComplex::from_facets.
SimplicialComplex build_complex(std::vector<VertexSet> facets, std::size_t vertex_count);

/// A connected induced sub-complex of a host complex, identified by its
/// vertex set.
class Simplet {
public:
    Simplet(const SimplicialComplex& host, VertexSet vertices)
        : host_(&host), vertices_(std::move(vertices)) {}
    Simplet(SimplicialComplex&&, VertexSet) = delete;

    const SimplicialComplex& host() const { return *host_; }
    const VertexSet& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    /// Every simplex of the host (dimension >= 0) whose vertices lie in the
    /// simplet, sorted lexicographically.
    std::vector<VertexSet> simplices() const;

    /// Local bitmask form; requires size() <= kMaxLocalVertices.
    LocalComplex local_structure() const { return host_->local_structure(vertices_); }

private:
    const SimplicialComplex* host_;
    VertexSet vertices_;
};

/// Returns the simplet on `s`, or nullopt when the induced 1-skeleton on `s`
/// is disconnected. Throws InputError when |s| < 2 or ids are out of range.
/// `s` need not be sorted.
std::optional<Simplet> induced_subcomplex(const SimplicialComplex& complex, VertexSet s);
std::optional<Simplet> induced_subcomplex(SimplicialComplex&&, VertexSet) = delete;

struct Diameter {
    std::size_t value = 0;
    bool estimated = false;
};

inline constexpr std::size_t kDefaultExactDiameterThreshold = 2048;

/// Diameter of the 1-skeleton. Exact (all-pairs BFS) when n <= exact_threshold,
/// otherwise a double-sweep lower bound flagged as estimated. Throws
/// StructuralError naming two mutually unreachable vertices when disconnected.
Diameter skeleton_diameter(const SimplicialComplex& complex,
                           std::size_t exact_threshold = kDefaultExactDiameterThreshold);

/// Connected components of the 1-skeleton; component id per vertex, ids
/// assigned in order of lowest member vertex.
std::vector<std::size_t> skeleton_components(const SimplicialComplex& complex);

}  // namespace simplet
