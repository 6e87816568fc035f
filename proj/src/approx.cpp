#include "simplet/approx.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "simplet/errors.hpp"

namespace simplet {

std::uint64_t required_samples(double epsilon, double delta, double c)
{
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InputError("epsilon must lie in (0, 1)");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw InputError("delta must lie in (0, 1)");
    }
    if (!(c > 0.0)) {
        throw InputError("sample constant c must be positive");
    }
    constexpr double kVcDimension = 1.0;
    return static_cast<std::uint64_t>(std::ceil(c / (epsilon * epsilon) * (kVcDimension + std::log(1.0 / delta))));
}

SfdVector empirical_sfd_from_types(std::span<const std::size_t> types, const SimpletCatalog& catalog)
{
    if (types.empty()) {
        throw InputError("no samples");
    }
    std::vector<std::uint64_t> counts(catalog.size(), 0);
    for (std::size_t t : types) {
        if (t >= counts.size()) {
            throw InputError("sample type index outside catalog");
        }
        ++counts[t];
    }
    return sfd_from_counts(std::move(counts), catalog.m(), "approx");
}

SfdVector empirical_sfd(std::span<const Simplet> samples, const SimpletCatalog& catalog)
{
    TypeClassifier classifier(catalog);
    std::vector<std::size_t> types;
    types.reserve(samples.size());
    for (const auto& s : samples) {
        if (s.size() < 2 || s.size() > static_cast<std::size_t>(catalog.m())) {
            throw InputError("sample size outside catalog range");
        }
        types.push_back(classifier.classify(s));
    }
    return empirical_sfd_from_types(types, catalog);
}

SfdVector approximate_sfd(const SimplicialComplex& complex, const SimpletCatalog& catalog, const ApproxParams& params,
                          unsigned threads)
{
    const std::uint64_t samples = required_samples(params.epsilon, params.delta, params.c);
    if (params.walk.m > catalog.m()) {
        throw InputError("walk m=" + std::to_string(params.walk.m) + " exceeds catalog m=" +
                         std::to_string(catalog.m()));
    }
    check_walk_preconditions(complex, params.walk.m);
    std::vector<std::size_t> types(samples);

    if (params.walk.mode == SampleMode::thinned) {
        SimpletSampler sampler(complex, params.walk);
        TypeClassifier classifier(catalog);
        Rng rng(params.walk.rng_seed);
        for (auto& t : types) {
            t = classifier.classify(sampler.sample(rng));
        }
    } else {
        threads = static_cast<unsigned>(std::clamp<std::uint64_t>(threads, 1, samples));
        detail::run_workers(threads, [&](unsigned worker) {
            SimpletSampler sampler(complex, params.walk);
            TypeClassifier classifier(catalog);
            for (std::uint64_t i = worker; i < samples; i += threads) {
                Rng rng = stream_rng(params.walk.rng_seed, i);
                types[i] = classifier.classify(sampler.sample(rng));
            }
        });
    }
    return empirical_sfd_from_types(types, catalog);
}

namespace {

void check_comparable(const SfdVector& a, const SfdVector& b)
{
    if (a.catalog_m != b.catalog_m || a.frequencies.size() != b.frequencies.size()) {
        throw InputError("SFD vectors come from different catalogs");
    }
}

}  // namespace

double linf_distance(const SfdVector& a, const SfdVector& b)
{
    check_comparable(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < a.frequencies.size(); ++i) {
        worst = std::max(worst, std::abs(a.frequencies[i] - b.frequencies[i]));
    }
    return worst;
}

double tv_distance(const SfdVector& a, const SfdVector& b)
{
    check_comparable(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.frequencies.size(); ++i) {
        sum += std::abs(a.frequencies[i] - b.frequencies[i]);
    }
    return 0.5 * sum;
}

}  // namespace simplet
