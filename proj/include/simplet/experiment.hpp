#pragma once

#include <cstdint>
#include <vector>

#include "simplet/approx.hpp"
#include "simplet/catalog.hpp"
#include "simplet/complex.hpp"
#include "simplet/generate.hpp"
#include "simplet/sfd.hpp"

namespace simplet {

struct ComplexSummary {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    std::size_t diameter = 0;
    bool diameter_estimated = false;
};

/// Diameter is filled only for connected complexes.
ComplexSummary summarize(const SimplicialComplex& complex);

/// Largest failure fraction accepted after `trials` runs at confidence
/// 1 - delta: delta plus two binomial standard deviations.
double binomial_tolerance(double delta, std::size_t trials);

struct ValidationReport {
    ComplexSummary complex;
    ApproxParams params;
    std::uint64_t samples = 0;
    std::size_t trials = 0;
    SfdVector exact;
    std::vector<double> errors;  ///< L-infinity error of each trial
    std::size_t failures = 0;    ///< trials with error > epsilon
    double failure_fraction = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double exact_seconds = 0.0;
    double approx_seconds = 0.0;
};

/// Computes the exact SFD once, then runs `trials` independent estimates
/// (trial t seeded from stream t of params.walk.rng_seed) and checks the
/// observed failure fraction against binomial_tolerance. Throws InputError
/// when trials == 0.
ValidationReport validate_guarantee(const SimplicialComplex& complex, const SimpletCatalog& catalog,
                                    const ApproxParams& params, std::size_t trials, unsigned threads = 1);

struct BenchRow {
    std::size_t n = 0;
    std::size_t edges = 0;
    std::size_t max_degree = 0;
    std::size_t diameter = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t samples = 0;
    double seconds = 0.0;

    double seconds_per_sample() const { return samples == 0 ? 0.0 : seconds / static_cast<double>(samples); }
};

/// Times one approximate_sfd run. params.walk.burn_in is recomputed from the
/// complex and params.walk.c_mix.
BenchRow bench_complex(const SimplicialComplex& complex, const SimpletCatalog& catalog, ApproxParams params,
                       unsigned threads = 1);

/// For each size n: generate from `base` with p_edge = mean_degree / (n - 1),
/// restrict to the largest component and time it.
std::vector<BenchRow> bench_sweep(const GenSpec& base, const std::vector<std::size_t>& sizes, double mean_degree,
                                  const SimpletCatalog& catalog, const ApproxParams& params, unsigned threads = 1);

}  // namespace simplet
