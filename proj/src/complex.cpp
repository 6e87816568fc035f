#include "simplet/complex.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <string>

#include "simplet/errors.hpp"

namespace simplet {

bool skeleton_connected(const LocalComplex& c)
{
    if (c.k <= 1) {
        return true;
    }
    unsigned reached = 1u;
    unsigned frontier = 1u;
    while (frontier != 0) {
        unsigned next = 0;
        for (int u = 0; u < c.k; ++u) {
            if (!((frontier >> u) & 1u)) {
                continue;
            }
            for (int v = 0; v < c.k; ++v) {
                if (v != u && !((reached >> v) & 1u) && c.has((1u << u) | (1u << v))) {
                    next |= 1u << v;
                }
            }
        }
        reached |= next;
        frontier = next;
    }
    return reached == (1u << c.k) - 1u;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexSet> simplices, std::size_t vertex_count)
{
    for (auto& s : simplices) {
        if (s.empty()) {
            throw InputError("empty facet");
        }
        for (Vertex v : s) {
            if (v >= vertex_count) {
                throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(vertex_count) + ")");
            }
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    // Larger simplices first, so every candidate superset is already kept.
    std::stable_sort(simplices.begin(), simplices.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.size() > b.size(); });

    SimplicialComplex k;
    k.incidence_.assign(vertex_count, {});
    std::vector<VertexSet> kept;
    for (auto& s : simplices) {
        bool covered = false;
        for (std::uint32_t f : k.incidence_[s.front()]) {
            if (std::includes(kept[f].begin(), kept[f].end(), s.begin(), s.end())) {
                covered = true;
                break;
            }
        }
        if (covered) {
            continue;
        }
        auto id = static_cast<std::uint32_t>(kept.size());
        for (Vertex v : s) {
            k.incidence_[v].push_back(id);
        }
        kept.push_back(std::move(s));
    }

    std::sort(kept.begin(), kept.end());
    k.facets_ = std::move(kept);
    for (auto& inc : k.incidence_) {
        inc.clear();
    }
    k.adjacency_.assign(vertex_count, {});
    for (std::uint32_t f = 0; f < k.facets_.size(); ++f) {
        const auto& facet = k.facets_[f];
        for (std::size_t i = 0; i < facet.size(); ++i) {
            k.incidence_[facet[i]].push_back(f);
            for (std::size_t j = i + 1; j < facet.size(); ++j) {
                k.adjacency_[facet[i]].push_back(facet[j]);
                k.adjacency_[facet[j]].push_back(facet[i]);
            }
        }
    }
    for (auto& nb : k.adjacency_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        k.edge_count_ += nb.size();
        k.max_degree_ = std::max(k.max_degree_, nb.size());
    }
    k.edge_count_ /= 2;
    return k;
}

SimplicialComplex build_complex(std::vector<VertexSet> facets, std::size_t vertex_count)
{
    return SimplicialComplex::from_facets(std::move(facets), vertex_count);
}

void SimplicialComplex::check_vertex(Vertex v) const
{
    if (v >= vertex_count()) {
        throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                         std::to_string(vertex_count()) + ")");
    }
}

bool SimplicialComplex::adjacent(Vertex u, Vertex v) const
{
    const auto& nb = adjacency_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool SimplicialComplex::contains_simplex(std::span<const Vertex> s) const
{
    if (s.empty()) {
        throw InputError("empty vertex set");
    }
    for (Vertex v : s) {
        check_vertex(v);
    }
    Vertex pivot = *std::min_element(s.begin(), s.end(), [this](Vertex a, Vertex b) {
        return incidence_[a].size() < incidence_[b].size();
    });
    if (s.size() == 2) {
        return adjacent(s[0], s[1]);
    }
    for (std::uint32_t f : incidence_[pivot]) {
        const auto& facet = facets_[f];
        if (std::includes(facet.begin(), facet.end(), s.begin(), s.end())) {
            return true;
        }
    }
    return false;
}

LocalComplex SimplicialComplex::local_structure(std::span<const Vertex> s) const
{
    const int k = static_cast<int>(s.size());
    if (k > kMaxLocalVertices) {
        throw InputError("local structure supports at most " + std::to_string(kMaxLocalVertices) + " vertices");
    }
    LocalComplex local{k, 0};
    // Traces of facets on s; every subset of a trace is a simplex. A trace
    // already present in the mask had its subsets filled in earlier.
    for (int i = 0; i < k; ++i) {
        for (std::uint32_t f : incidence_[s[i]]) {
            const auto& facet = facets_[f];
            unsigned trace = 1u << i;
            for (int j = 0; j < k; ++j) {
                if (j != i && std::binary_search(facet.begin(), facet.end(), s[j])) {
                    trace |= 1u << j;
                }
            }
            if (std::popcount(trace) < 2 || local.has(trace)) {
                continue;
            }
            for (unsigned sub = trace; sub != 0; sub = (sub - 1) & trace) {
                if (std::popcount(sub) >= 2) {
                    local.mask |= std::uint64_t{1} << sub;
                }
            }
        }
    }
    return local;
}

std::vector<std::pair<Vertex, Vertex>> SimplicialComplex::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

bool SimplicialComplex::induces_connected(std::span<const Vertex> s) const
{
    if (s.size() <= 1) {
        return true;
    }
    std::vector<char> reached(s.size(), 0);
    std::vector<std::size_t> stack{0};
    reached[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (!reached[j] && adjacent(s[i], s[j])) {
                reached[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == s.size();
}

std::vector<VertexSet> Simplet::simplices() const
{
    std::vector<VertexSet> out;
    const auto& s = vertices_;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::uint32_t f : host_->incident_facets(s[i])) {
            const auto& facet = host_->facets()[f];
            VertexSet trace;
            std::set_intersection(facet.begin(), facet.end(), s.begin(), s.end(), std::back_inserter(trace));
            // Enumerate non-empty subsets of the trace.
            const std::size_t t = trace.size();
            for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << t); ++sub) {
                VertexSet face;
                for (std::size_t b = 0; b < t; ++b) {
                    if ((sub >> b) & 1u) {
                        face.push_back(trace[b]);
                    }
                }
                out.push_back(std::move(face));
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Simplet> induced_subcomplex(const SimplicialComplex& complex, VertexSet s)
{
    if (s.size() < 2) {
        throw InputError("a simplet needs at least two vertices");
    }
    for (Vertex v : s) {
        complex.check_vertex(v);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
        throw InputError("duplicate vertex in simplet vertex set");
    }
    if (!complex.induces_connected(s)) {
        return std::nullopt;
    }
    return Simplet(complex, std::move(s));
}

namespace {

// Distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs(const SimplicialComplex& complex, Vertex source)
{
    std::vector<std::size_t> dist(complex.vertex_count(), SIZE_MAX);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : complex.neighbors(u)) {
            if (dist[v] == SIZE_MAX) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

}  // namespace

std::vector<std::size_t> skeleton_components(const SimplicialComplex& complex)
{
    const std::size_t n = complex.vertex_count();
    std::vector<std::size_t> comp(n, SIZE_MAX);
    std::size_t next = 0;
    for (Vertex root = 0; root < n; ++root) {
        if (comp[root] != SIZE_MAX) {
            continue;
        }
        std::vector<Vertex> stack{root};
        comp[root] = next;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : complex.neighbors(u)) {
                if (comp[v] == SIZE_MAX) {
                    comp[v] = next;
                    stack.push_back(v);
                }
            }
        }
        ++next;
    }
    return comp;
}

Diameter skeleton_diameter(const SimplicialComplex& complex, std::size_t exact_threshold)
{
    const std::size_t n = complex.vertex_count();
    if (n == 0) {
        throw StructuralError("complex has no vertices");
    }
    auto first = bfs(complex, 0);
    for (Vertex v = 0; v < n; ++v) {
        if (first[v] == SIZE_MAX) {
            throw StructuralError("1-skeleton is disconnected: vertices 0 and " + std::to_string(v) +
                                  " are mutually unreachable");
        }
    }
    if (n <= exact_threshold) {
        std::size_t best = *std::max_element(first.begin(), first.end());
        for (Vertex s = 1; s < n; ++s) {
            auto d = bfs(complex, s);
            best = std::max(best, *std::max_element(d.begin(), d.end()));
        }
        return {best, false};
    }
    auto far = static_cast<Vertex>(std::max_element(first.begin(), first.end()) - first.begin());
    auto second = bfs(complex, far);
    return {*std::max_element(second.begin(), second.end()), true};
}

}  // namespace simplet
