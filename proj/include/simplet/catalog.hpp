#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <unordered_map>
#include <vector>

#include "simplet/complex.hpp"

namespace simplet {

/// Permutation-invariant identity of a small complex.
///
/// `simplices` holds every simplex of dimension >= 1 as a sorted tuple over
/// local labels [0, vertex_count), the whole list sorted, and chosen as the
/// lexicographically smallest such list over all relabelings.
struct SimpletTypeKey {
    int vertex_count = 0;
    std::vector<std::vector<int>> simplices;

    friend auto operator<=>(const SimpletTypeKey&, const SimpletTypeKey&) = default;
    friend bool operator==(const SimpletTypeKey&, const SimpletTypeKey&) = default;
};

SimpletTypeKey canonical_key(const LocalComplex& complex);
SimpletTypeKey canonical_key(const Simplet& simplet);

/// Inverse of the encoding: the key as a labeled local complex.
LocalComplex to_local(const SimpletTypeKey& key);

/// Applies a relabeling (local vertex i becomes perm[i]) to a local complex.
LocalComplex relabel(const LocalComplex& complex, std::span<const int> perm);

/// All simplet types with 2..m vertices, ordered by vertex count and then
/// lexicographically by key.
class SimpletCatalog {
public:
    SimpletCatalog(int m, std::vector<SimpletTypeKey> keys);

    int m() const { return m_; }
    std::size_t size() const { return keys_.size(); }
    const std::vector<SimpletTypeKey>& keys() const { return keys_; }
    const SimpletTypeKey& operator[](std::size_t i) const { return keys_[i]; }

    /// Position of `key`. Throws InputError if the key has more than m
    /// vertices and IntegrityError if it is otherwise missing.
    std::size_t type_index(const SimpletTypeKey& key) const;

private:
    int m_;
    std::vector<SimpletTypeKey> keys_;
    std::map<SimpletTypeKey, std::size_t> index_;
};

inline constexpr int kMaxCatalogM = kMaxLocalVertices;

/// Throws InputError unless 2 <= m <= kMaxCatalogM.
SimpletCatalog generate_catalog(int m);

std::size_t type_index(const SimpletCatalog& catalog, const SimpletTypeKey& key);

/// Memoizes labeled local structure -> catalog position. Not thread-safe;
/// give each worker its own instance.
class TypeClassifier {
public:
    explicit TypeClassifier(const SimpletCatalog& catalog) : catalog_(&catalog) {}

    std::size_t classify(const LocalComplex& local);
    std::size_t classify(const Simplet& simplet) { return classify(simplet.local_structure()); }
    const SimpletCatalog& catalog() const { return *catalog_; }

private:
    const SimpletCatalog* catalog_;
    std::unordered_map<LocalComplex, std::size_t, LocalComplexHash> cache_;
};

}  // namespace simplet
