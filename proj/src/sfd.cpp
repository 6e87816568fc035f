#include "simplet/sfd.hpp"

#include <numeric>

#include "simplet/errors.hpp"

namespace simplet {

SfdVector sfd_from_counts(std::vector<std::uint64_t> counts, int catalog_m, std::string mode)
{
    const std::uint64_t total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    if (total == 0) {
        throw InputError("count vector is empty or all zero");
    }
    SfdVector sfd;
    sfd.catalog_m = catalog_m;
    sfd.total = total;
    sfd.mode = std::move(mode);
    sfd.frequencies.reserve(counts.size());
    for (auto c : counts) {
        sfd.frequencies.push_back(static_cast<double>(c) / static_cast<double>(total));
    }
    sfd.counts = std::move(counts);
    return sfd;
}

}  // namespace simplet
