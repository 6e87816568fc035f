#pragma once

#include <cstdint>
#include <span>

#include "simplet/catalog.hpp"
#include "simplet/complex.hpp"
#include "simplet/sampler.hpp"
#include "simplet/sfd.hpp"

namespace simplet {

inline constexpr double kDefaultVcConstant = 0.5;

struct ApproxParams {
    double epsilon = 0.1;
    double delta = 0.1;
    double c = kDefaultVcConstant;
    WalkConfig walk;
};

/// Sample count for an (epsilon, delta) guarantee over the simplet-type
/// family, whose VC dimension is 1: ceil(c / epsilon^2 * (1 + ln(1 / delta))).
/// Throws InputError unless epsilon, delta lie in (0, 1) and c > 0.
std::uint64_t required_samples(double epsilon, double delta, double c = kDefaultVcConstant);

/// Type histogram of `samples` normalized by the sample count, tagged "approx".
SfdVector empirical_sfd(std::span<const Simplet> samples, const SimpletCatalog& catalog);

/// Same, from already classified samples (catalog positions).
SfdVector empirical_sfd_from_types(std::span<const std::size_t> types, const SimpletCatalog& catalog);

/// Draws required_samples(...) simplets with the walk and returns their
/// empirical distribution. In fresh-chain mode sample i uses its own
/// generator stream, so the result is independent of `threads`; thinned mode
/// runs one chain.
SfdVector approximate_sfd(const SimplicialComplex& complex, const SimpletCatalog& catalog, const ApproxParams& params,
                          unsigned threads = 1);

/// max_i |a_i - b_i|. Throws InputError on mismatched catalogs.
double linf_distance(const SfdVector& a, const SfdVector& b);

/// 1/2 sum_i |a_i - b_i|.
double tv_distance(const SfdVector& a, const SfdVector& b);

}  // namespace simplet
