#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "simplet/catalog.hpp"
#include "simplet/complex.hpp"
#include "simplet/sfd.hpp"

namespace simplet {

namespace detail {

template <typename Visit>
void extend_subset(const SimplicialComplex& complex, std::size_t m, Vertex root, VertexSet& current,
                   std::vector<Vertex> extension, VertexSet& sorted, Visit& visit)
{
    if (current.size() >= 2) {
        sorted.assign(current.begin(), current.end());
        std::sort(sorted.begin(), sorted.end());
        visit(std::span<const Vertex>(sorted));
    }
    if (current.size() == m) {
        return;
    }
    while (!extension.empty()) {
        Vertex w = extension.back();
        extension.pop_back();
        std::vector<Vertex> next = extension;
        for (Vertex u : complex.neighbors(w)) {
            if (u <= root) {
                continue;
            }
            // Exclusive neighbours only: not in, and not next to, the current set.
            bool exclusive = true;
            for (Vertex c : current) {
                if (c == u || complex.adjacent(c, u)) {
                    exclusive = false;
                    break;
                }
            }
            if (exclusive) {
                next.push_back(u);
            }
        }
        current.push_back(w);
        extend_subset(complex, m, root, current, std::move(next), sorted, visit);
        current.pop_back();
    }
}

}  // namespace detail

/// Calls `visit(std::span<const Vertex>)` once for every vertex set S with
/// 2 <= |S| <= m, min(S) in [root_begin, root_end), whose induced 1-skeleton
/// is connected. Sets are passed sorted. Order is deterministic.
template <typename Visit>
void for_each_connected_subset(const SimplicialComplex& complex, int m, Vertex root_begin, Vertex root_end,
                               Visit&& visit)
{
    if (m < 2) {
        return;
    }
    VertexSet current;
    VertexSet sorted;
    root_end = std::min<Vertex>(root_end, static_cast<Vertex>(complex.vertex_count()));
    for (Vertex root = root_begin; root < root_end; ++root) {
        std::vector<Vertex> extension;
        for (Vertex u : complex.neighbors(root)) {
            if (u > root) {
                extension.push_back(u);
            }
        }
        current.assign(1, root);
        detail::extend_subset(complex, static_cast<std::size_t>(m), root, current, std::move(extension), sorted,
                              visit);
    }
}

template <typename Visit>
void for_each_connected_subset(const SimplicialComplex& complex, int m, Visit&& visit)
{
    for_each_connected_subset(complex, m, 0, static_cast<Vertex>(complex.vertex_count()),
                              std::forward<Visit>(visit));
}

/// Every connected vertex set with 2..m vertices, each exactly once.
std::vector<VertexSet> enumerate_connected_subsets(const SimplicialComplex& complex, int m);

/// Exact simplet counts per catalog type for simplets with at most
/// catalog.m() vertices. Roots are partitioned across `threads` workers; the
/// result does not depend on the thread count. Throws StructuralError when
/// the complex has no simplet at all.
SfdVector exact_counts(const SimplicialComplex& complex, const SimpletCatalog& catalog, unsigned threads = 1);

}  // namespace simplet
