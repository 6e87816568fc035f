#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simplet {

/// Simplet frequency distribution over the types of a catalog.
struct SfdVector {
    int catalog_m = 0;
    std::vector<double> frequencies;
    std::optional<std::vector<std::uint64_t>> counts;
    std::uint64_t total = 0;
    std::string mode = "exact";
};

/// frequencies[i] = counts[i] / sum(counts). Throws InputError on an empty or
/// all-zero count vector.
SfdVector sfd_from_counts(std::vector<std::uint64_t> counts, int catalog_m, std::string mode = "exact");

}  // namespace simplet
