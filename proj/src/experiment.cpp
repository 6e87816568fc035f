#include "simplet/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "parallel.hpp"
#include "simplet/errors.hpp"
#include "simplet/exact_count.hpp"

namespace simplet {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

ComplexSummary summarize(const SimplicialComplex& complex)
{
    ComplexSummary s{complex.vertex_count(), complex.edge_count(), complex.max_degree(), 0, false};
    try {
        auto d = skeleton_diameter(complex);
        s.diameter = d.value;
        s.diameter_estimated = d.estimated;
    } catch (const StructuralError&) {
    }
    return s;
}

double binomial_tolerance(double delta, std::size_t trials)
{
    return delta + 2.0 * std::sqrt(delta * (1.0 - delta) / static_cast<double>(trials));
}

ValidationReport validate_guarantee(const SimplicialComplex& complex, const SimpletCatalog& catalog,
                                    const ApproxParams& params, std::size_t trials, unsigned threads)
{
    if (trials == 0) {
        throw InputError("validation needs at least one trial");
    }
    ValidationReport report;
    report.complex = summarize(complex);
    report.params = params;
    report.trials = trials;
    report.samples = required_samples(params.epsilon, params.delta, params.c);

    auto start = Clock::now();
    report.exact = exact_counts(complex, catalog, threads);
    report.exact_seconds = seconds_since(start);

    report.errors.assign(trials, 0.0);
    start = Clock::now();
    threads = static_cast<unsigned>(std::clamp<std::size_t>(threads, 1, trials));
    detail::run_workers(threads, [&](unsigned worker) {
        for (std::size_t t = worker; t < trials; t += threads) {
            ApproxParams trial = params;
            trial.walk.rng_seed = stream_rng(params.walk.rng_seed, t)();
            report.errors[t] = linf_distance(approximate_sfd(complex, catalog, trial), report.exact);
        }
    });
    report.approx_seconds = seconds_since(start);

    for (double e : report.errors) {
        if (e > params.epsilon) {
            ++report.failures;
        }
    }
    report.failure_fraction = static_cast<double>(report.failures) / static_cast<double>(trials);
    report.tolerance = binomial_tolerance(params.delta, trials);
    report.passed = report.failure_fraction <= report.tolerance;
    return report;
}

BenchRow bench_complex(const SimplicialComplex& complex, const SimpletCatalog& catalog, ApproxParams params,
                       unsigned threads)
{
    BenchRow row;
    row.n = complex.vertex_count();
    row.edges = complex.edge_count();
    row.max_degree = complex.max_degree();
    row.diameter = skeleton_diameter(complex).value;
    params.walk.burn_in = burn_in_steps(complex, params.walk.c_mix);
    row.burn_in = params.walk.burn_in;
    row.samples = required_samples(params.epsilon, params.delta, params.c);

    auto start = Clock::now();
    approximate_sfd(complex, catalog, params, threads);
    row.seconds = seconds_since(start);
    return row;
}

std::vector<BenchRow> bench_sweep(const GenSpec& base, const std::vector<std::size_t>& sizes, double mean_degree,
                                  const SimpletCatalog& catalog, const ApproxParams& params, unsigned threads)
{
    if (!(mean_degree > 0.0)) {
        throw InputError("mean degree must be positive");
    }
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        GenSpec spec = base;
        spec.n = n;
        spec.p_edge = std::min(1.0, mean_degree / static_cast<double>(n - 1));
        auto restricted = largest_connected_restriction(generate(spec));
        rows.push_back(bench_complex(restricted.complex, catalog, params, threads));
    }
    return rows;
}

}  // namespace simplet
