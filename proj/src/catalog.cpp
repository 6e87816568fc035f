#include "simplet/catalog.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "simplet/errors.hpp"

namespace simplet {

namespace {

// Sorted tuple (a < b < ...) packed as base-8 digits a+1, b+1, ... padded
// with zeros to six digits. Numeric order of codes equals lexicographic
// order of tuples, with a proper prefix sorting first.
std::uint32_t tuple_code(unsigned subset)
{
    std::uint32_t code = 0;
    int digits = 0;
    for (int v = 0; v < kMaxLocalVertices; ++v) {
        if ((subset >> v) & 1u) {
            code = code * 8 + static_cast<std::uint32_t>(v + 1);
            ++digits;
        }
    }
    for (; digits < kMaxLocalVertices; ++digits) {
        code *= 8;
    }
    return code;
}

// Position of every vertex subset in lexicographic tuple order. A sorted
// list of simplices is then a 64-bit set of ranks.
struct TupleRanks {
    std::array<std::uint8_t, 64> rank{};
    std::array<std::uint8_t, 64> subset{};
};

const TupleRanks& tuple_ranks()
{
    static const TupleRanks ranks = [] {
        std::array<unsigned, 64> order{};
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) { return tuple_code(a) < tuple_code(b); });
        TupleRanks r;
        for (unsigned i = 0; i < 64; ++i) {
            r.subset[i] = static_cast<std::uint8_t>(order[i]);
            r.rank[order[i]] = static_cast<std::uint8_t>(i);
        }
        return r;
    }();
    return ranks;
}

// Lexicographic comparison of the sorted lists encoded by two rank sets.
// At the first difference x, the list holding x is smaller unless the other
// list ends before reaching past x (then the other is a proper prefix).
bool lex_less(std::uint64_t a, std::uint64_t b)
{
    const std::uint64_t diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    const std::uint64_t low = diff & -diff;
    const std::uint64_t above = ~((low << 1) - 1);
    if (a & low) {
        return (b & above) != 0;
    }
    return (a & above) == 0;
}

std::vector<int> tuple_of(unsigned subset)
{
    std::vector<int> tuple;
    for (int v = 0; v < kMaxLocalVertices; ++v) {
        if ((subset >> v) & 1u) {
            tuple.push_back(v);
        }
    }
    return tuple;
}

// All k! permutations of [0, k) with the induced action on vertex subsets.
struct PermutationTable {
    std::vector<std::array<int, kMaxLocalVertices>> perms;
    std::vector<std::array<std::uint8_t, 64>> subset_image;
    std::vector<std::array<std::uint8_t, 64>> image_rank;  // tuple_rank(subset_image[p][s])
};

const PermutationTable& permutations(int k)
{
    static const auto tables = [] {
        std::array<PermutationTable, kMaxLocalVertices + 1> all;
        for (int size = 0; size <= kMaxLocalVertices; ++size) {
            std::array<int, kMaxLocalVertices> p{};
            std::iota(p.begin(), p.begin() + size, 0);
            do {
                std::array<std::uint8_t, 64> image{};
                for (unsigned s = 0; s < (1u << size); ++s) {
                    unsigned t = 0;
                    for (int v = 0; v < size; ++v) {
                        if ((s >> v) & 1u) {
                            t |= 1u << p[v];
                        }
                    }
                    image[s] = static_cast<std::uint8_t>(t);
                }
                std::array<std::uint8_t, 64> ranks{};
                for (unsigned s = 0; s < (1u << size); ++s) {
                    ranks[s] = tuple_ranks().rank[image[s]];
                }
                all[size].perms.push_back(p);
                all[size].subset_image.push_back(image);
                all[size].image_rank.push_back(ranks);
            } while (std::next_permutation(p.begin(), p.begin() + size));
        }
        return all;
    }();
    return tables[k];
}

std::uint64_t apply(const std::array<std::uint8_t, 64>& image, std::uint64_t mask)
{
    std::uint64_t out = 0;
    while (mask != 0) {
        int s = std::countr_zero(mask);
        mask &= mask - 1;
        out |= std::uint64_t{1} << image[s];
    }
    return out;
}

void check_local(const LocalComplex& c)
{
    if (c.k < 0 || c.k > kMaxLocalVertices) {
        throw InputError("local complex vertex count out of range");
    }
}

}  // namespace

LocalComplex relabel(const LocalComplex& complex, std::span<const int> perm)
{
    check_local(complex);
    if (perm.size() != static_cast<std::size_t>(complex.k)) {
        throw InputError("relabeling has wrong length");
    }
    LocalComplex out{complex.k, 0};
    std::uint64_t mask = complex.mask;
    while (mask != 0) {
        int s = std::countr_zero(mask);
        mask &= mask - 1;
        unsigned t = 0;
        for (int v = 0; v < complex.k; ++v) {
            if ((s >> v) & 1) {
                t |= 1u << perm[v];
            }
        }
        out.mask |= std::uint64_t{1} << t;
    }
    return out;
}

SimpletTypeKey canonical_key(const LocalComplex& complex)
{
    check_local(complex);
    const auto& table = permutations(complex.k);
    std::uint64_t best = 0;
    bool first = true;
    for (const auto& rank_of : table.image_rank) {
        std::uint64_t ranks = 0;
        std::uint64_t mask = complex.mask;
        while (mask != 0) {
            int s = std::countr_zero(mask);
            mask &= mask - 1;
            ranks |= std::uint64_t{1} << rank_of[s];
        }
        if (first || lex_less(ranks, best)) {
            best = ranks;
            first = false;
        }
    }
    SimpletTypeKey key{complex.k, {}};
    while (best != 0) {
        int r = std::countr_zero(best);
        best &= best - 1;
        key.simplices.push_back(tuple_of(tuple_ranks().subset[r]));
    }
    return key;
}

SimpletTypeKey canonical_key(const Simplet& simplet)
{
    return canonical_key(simplet.local_structure());
}

LocalComplex to_local(const SimpletTypeKey& key)
{
    LocalComplex local{key.vertex_count, 0};
    check_local(local);
    for (const auto& simplex : key.simplices) {
        unsigned s = 0;
        for (int v : simplex) {
            if (v < 0 || v >= key.vertex_count) {
                throw InputError("simplex label out of range in type key");
            }
            s |= 1u << v;
        }
        local.mask |= std::uint64_t{1} << s;
    }
    return local;
}

SimpletCatalog::SimpletCatalog(int m, std::vector<SimpletTypeKey> keys) : m_(m), keys_(std::move(keys))
{
    for (std::size_t i = 0; i < keys_.size(); ++i) {
        if (!index_.emplace(keys_[i], i).second) {
            throw IntegrityError("duplicate simplet type in catalog");
        }
    }
}

std::size_t SimpletCatalog::type_index(const SimpletTypeKey& key) const
{
    if (key.vertex_count > m_) {
        throw InputError("type key has " + std::to_string(key.vertex_count) + " vertices; catalog holds at most " +
                         std::to_string(m_));
    }
    auto it = index_.find(key);
    if (it == index_.end()) {
        throw IntegrityError("simplet type missing from catalog");
    }
    return it->second;
}

std::size_t type_index(const SimpletCatalog& catalog, const SimpletTypeKey& key)
{
    return catalog.type_index(key);
}

namespace {

std::uint64_t orbit_min(std::uint64_t mask, const std::vector<const std::array<std::uint8_t, 64>*>& group)
{
    std::uint64_t best = mask;
    for (const auto* image : group) {
        best = std::min(best, apply(*image, mask));
    }
    return best;
}

// Connected labeled graphs on k vertices, one per isomorphism class.
std::vector<std::uint64_t> connected_graph_classes(int k)
{
    std::vector<unsigned> pairs;
    for (int u = 0; u < k; ++u) {
        for (int v = u + 1; v < k; ++v) {
            pairs.push_back((1u << u) | (1u << v));
        }
    }
    std::vector<const std::array<std::uint8_t, 64>*> group;
    for (const auto& image : permutations(k).subset_image) {
        group.push_back(&image);
    }
    std::set<std::uint64_t> classes;
    for (std::uint64_t e = 0; e < (std::uint64_t{1} << pairs.size()); ++e) {
        LocalComplex g{k, 0};
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if ((e >> i) & 1u) {
                g.mask |= std::uint64_t{1} << pairs[i];
            }
        }
        if (skeleton_connected(g)) {
            classes.insert(orbit_min(g.mask, group));
        }
    }
    return {classes.begin(), classes.end()};
}

// Fillings of a fixed labeled graph by higher simplices, one per orbit of
// the graph's automorphism group. Every complex with this skeleton is
// reached by adding simplices one at a time, each with its full boundary.
std::vector<std::uint64_t> filling_classes(int k, std::uint64_t graph)
{
    const auto& table = permutations(k);
    std::vector<const std::array<std::uint8_t, 64>*> automorphisms;
    for (const auto& image : table.subset_image) {
        if (apply(image, graph) == graph) {
            automorphisms.push_back(&image);
        }
    }
    std::set<std::uint64_t> seen{orbit_min(graph, automorphisms)};
    std::vector<std::uint64_t> frontier{graph};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t mask : frontier) {
            for (unsigned s = 0; s < (1u << k); ++s) {
                if (std::popcount(s) < 3 || ((mask >> s) & 1u)) {
                    continue;
                }
                bool boundary = true;
                for (unsigned rest = s; rest != 0; rest &= rest - 1) {
                    unsigned facet = s & ~(rest & -rest);
                    if (!((mask >> facet) & 1u)) {
                        boundary = false;
                        break;
                    }
                }
                if (!boundary) {
                    continue;
                }
                std::uint64_t grown = mask | (std::uint64_t{1} << s);
                if (seen.insert(orbit_min(grown, automorphisms)).second) {
                    next.push_back(grown);
                }
            }
        }
        frontier.swap(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

SimpletCatalog generate_catalog(int m)
{
    if (m < 2 || m > kMaxCatalogM) {
        throw InputError("catalog size m=" + std::to_string(m) + " outside supported range [2, " +
                         std::to_string(kMaxCatalogM) + "]");
    }
    std::vector<SimpletTypeKey> keys;
    for (int k = 2; k <= m; ++k) {
        for (std::uint64_t graph : connected_graph_classes(k)) {
            for (std::uint64_t filled : filling_classes(k, graph)) {
                keys.push_back(canonical_key(LocalComplex{k, filled}));
            }
        }
    }
    std::sort(keys.begin(), keys.end());
    return SimpletCatalog(m, std::move(keys));
}

std::size_t TypeClassifier::classify(const LocalComplex& local)
{
    auto it = cache_.find(local);
    if (it != cache_.end()) {
        return it->second;
    }
    std::size_t index = catalog_->type_index(canonical_key(local));
    cache_.emplace(local, index);
    return index;
}

}  // namespace simplet
