#include "simplet/json_io.hpp"

#include <ostream>

#include "simplet/errors.hpp"

namespace simplet {

using nlohmann::json;

json catalog_to_json(const SimpletCatalog& catalog)
{
    json out = json::array();
    for (const auto& key : catalog.keys()) {
        out.push_back({{"k", key.vertex_count}, {"simplices", key.simplices}});
    }
    return out;
}

json sfd_to_json(const SfdVector& sfd, const SimpletCatalog& catalog)
{
    json out;
    out["m"] = sfd.catalog_m;
    out["catalog"] = catalog_to_json(catalog);
    out["counts"] = sfd.counts ? json(*sfd.counts) : json(nullptr);
    out["frequencies"] = sfd.frequencies;
    out["total"] = sfd.total;
    out["mode"] = sfd.mode;
    return out;
}

SfdVector sfd_from_json(const json& doc)
{
    try {
        SfdVector sfd;
        sfd.catalog_m = doc.at("m").get<int>();
        sfd.frequencies = doc.at("frequencies").get<std::vector<double>>();
        if (doc.contains("counts") && !doc.at("counts").is_null()) {
            sfd.counts = doc.at("counts").get<std::vector<std::uint64_t>>();
        }
        sfd.total = doc.value("total", std::uint64_t{0});
        sfd.mode = doc.value("mode", std::string("exact"));
        return sfd;
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed SFD document: ") + e.what());
    }
}

namespace {

const char* mode_name(SampleMode mode)
{
    return mode == SampleMode::thinned ? "thinned" : "fresh";
}

}  // namespace

json approx_to_json(const SfdVector& sfd, const SimpletCatalog& catalog, const ApproxParams& params)
{
    json out = sfd_to_json(sfd, catalog);
    out["epsilon"] = params.epsilon;
    out["delta"] = params.delta;
    out["c"] = params.c;
    out["samples"] = sfd.total;
    out["burn_in"] = params.walk.burn_in;
    out["c_mix"] = params.walk.c_mix;
    out["walk_mode"] = mode_name(params.walk.mode);
    if (params.walk.mode == SampleMode::thinned) {
        out["thin_gap"] = params.walk.thinning_gap;
    }
    out["seed"] = params.walk.rng_seed;
    return out;
}

json summary_to_json(const ComplexSummary& s)
{
    return {{"n", s.n},
            {"edges", s.edges},
            {"max_degree", s.max_degree},
            {"diameter", s.diameter},
            {"diameter_estimated", s.diameter_estimated}};
}

json validation_to_json(const ValidationReport& r, const SimpletCatalog& catalog, bool include_timings)
{
    json out;
    out["complex"] = summary_to_json(r.complex);
    out["m"] = catalog.m();
    out["epsilon"] = r.params.epsilon;
    out["delta"] = r.params.delta;
    out["c"] = r.params.c;
    out["c_mix"] = r.params.walk.c_mix;
    out["burn_in"] = r.params.walk.burn_in;
    out["walk_mode"] = mode_name(r.params.walk.mode);
    out["seed"] = r.params.walk.rng_seed;
    out["samples"] = r.samples;
    out["trials"] = r.trials;
    out["errors"] = r.errors;
    out["failures"] = r.failures;
    out["failure_fraction"] = r.failure_fraction;
    out["tolerance"] = r.tolerance;
    out["passed"] = r.passed;
    out["exact"] = sfd_to_json(r.exact, catalog);
    if (include_timings) {
        out["seconds"] = {{"exact", r.exact_seconds}, {"approx", r.approx_seconds}};
    }
    return out;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows)
{
    out << kBenchCsvHeader << '\n';
    for (const auto& r : rows) {
        out << r.n << ',' << r.edges << ',' << r.max_degree << ',' << r.diameter << ',' << r.burn_in << ','
            << r.samples << ',' << r.seconds << '\n';
    }
}

}  // namespace simplet
