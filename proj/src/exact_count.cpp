#include "simplet/exact_count.hpp"

#include "parallel.hpp"
#include "simplet/errors.hpp"

namespace simplet {

std::vector<VertexSet> enumerate_connected_subsets(const SimplicialComplex& complex, int m)
{
    std::vector<VertexSet> out;
    for_each_connected_subset(complex, m, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
}

SfdVector exact_counts(const SimplicialComplex& complex, const SimpletCatalog& catalog, unsigned threads)
{
    const auto n = static_cast<Vertex>(complex.vertex_count());
    threads = std::max(1u, std::min<unsigned>(threads, std::max<Vertex>(n, 1)));
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(catalog.size(), 0));

    auto work = [&](unsigned worker) {
        TypeClassifier classifier(catalog);
        auto& counts = partial[worker];
        // Strided roots: low ids root the most subsets, so interleave them.
        for (Vertex root = worker; root < n; root += threads) {
            for_each_connected_subset(complex, catalog.m(), root, root + 1, [&](std::span<const Vertex> s) {
                ++counts[classifier.classify(complex.local_structure(s))];
            });
        }
    };

    detail::run_workers(threads, work);

    std::vector<std::uint64_t> counts(catalog.size(), 0);
    for (const auto& p : partial) {
        for (std::size_t i = 0; i < counts.size(); ++i) {
            counts[i] += p[i];
        }
    }
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    if (total == 0) {
        throw StructuralError("complex has no simplets (no 1-simplex)");
    }
    return sfd_from_counts(std::move(counts), catalog.m(), "exact");
}

}  // namespace simplet
