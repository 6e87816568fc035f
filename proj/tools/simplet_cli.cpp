// simplet: exact and sampled simplet frequency distributions of simplicial
// complexes given as facet files.
//
// Exit codes: 0 success, 1 validation failed, 2 usage, 3 bad input file,
// 4 structural (disconnected or too small complex), 5 internal error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "simplet/approx.hpp"
#include "simplet/catalog.hpp"
#include "simplet/errors.hpp"
#include "simplet/exact_count.hpp"
#include "simplet/experiment.hpp"
#include "simplet/facet_io.hpp"
#include "simplet/generate.hpp"
#include "simplet/json_io.hpp"
#include "simplet/sampler.hpp"

namespace {

using namespace simplet;
using nlohmann::json;

enum ExitCode : int {
    kOk = 0,
    kValidationFailed = 1,
    kUsage = 2,
    kInputFormat = 3,
    kStructural = 4,
    kInternal = 5,
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct GenOptions {
    std::string model = "flag";
    std::size_t n = 50;
    double p_edge = 0.15;
    double p_tri = 0.5;
    double p_tet = 0.5;
    std::uint64_t seed = 0;

    void add_to(CLI::App& cmd, bool with_n = true)
    {
        cmd.add_option("--model", model, "Generator model")->check(CLI::IsMember({"flag", "lm"}));
        if (with_n) {
            cmd.add_option("--n", n, "Vertex count")->check(CLI::Range(std::size_t{3}, std::size_t{1} << 24));
            cmd.add_option("--p-edge", p_edge, "Edge probability")->check(CLI::Range(0.0, 1.0));
        }
        cmd.add_option("--p-tri", p_tri, "Triangle fill probability (lm)")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--p-tet", p_tet, "Tetrahedron fill probability (lm)")->check(CLI::Range(0.0, 1.0));
        cmd.add_option("--gen-seed", seed, "Generator seed");
    }

    GenSpec spec() const
    {
        return GenSpec{model == "lm" ? GenModel::lm : GenModel::flag, n, p_edge, p_tri, p_tet, seed};
    }
};

struct EstimatorOptions {
    double epsilon = 0.1;
    double delta = 0.1;
    double c = kDefaultVcConstant;
    double c_mix = 1.0;
    std::uint64_t seed = 0;
    std::string mode = "fresh";
    std::uint64_t thin_gap = 0;

    void add_to(CLI::App& cmd)
    {
        auto open_unit = CLI::Range(0.0, 1.0) & CLI::Validator(
                                                     [](std::string& v) {
                                                         double x = std::stod(v);
                                                         return (x > 0.0 && x < 1.0) ? std::string()
                                                                                     : "must lie strictly in (0, 1)";
                                                     },
                                                     "(0,1)");
        cmd.add_option("--epsilon", epsilon, "Additive error bound")->check(open_unit);
        cmd.add_option("--delta", delta, "Failure probability")->check(open_unit);
        cmd.add_option("--c", c, "Sample-count constant")->check(CLI::PositiveNumber);
        cmd.add_option("--c-mix", c_mix, "Burn-in scale")->check(CLI::PositiveNumber);
        cmd.add_option("--seed", seed, "Sampler seed");
        cmd.add_option("--mode", mode, "fresh: one chain per sample; thinned: one long chain")
            ->check(CLI::IsMember({"fresh", "thinned"}));
        cmd.add_option("--thin-gap", thin_gap, "Steps between thinned samples (default: burn-in)");
    }

    ApproxParams params(const SimplicialComplex& complex, int m) const
    {
        ApproxParams p;
        p.epsilon = epsilon;
        p.delta = delta;
        p.c = c;
        const auto walk_mode = mode == "thinned" ? SampleMode::thinned : SampleMode::fresh_chain;
        check_walk_preconditions(complex, m);
        p.walk = make_walk_config(complex, m, c_mix, seed, walk_mode, 1);
        p.walk.thinning_gap = thin_gap == 0 ? p.walk.burn_in : thin_gap;
        return p;
    }
};

struct Loaded {
    SimplicialComplex complex;
    std::vector<std::string> labels;
};

Loaded load_input(const std::string& path, bool largest_component)
{
    auto labeled = read_facet_file(path);
    Loaded out{std::move(labeled.complex), std::move(labeled.labels)};
    if (largest_component) {
        auto restricted = largest_connected_restriction(out.complex);
        std::vector<std::string> labels;
        for (Vertex v : restricted.original_ids) {
            labels.push_back(out.labels[v]);
        }
        out = {std::move(restricted.complex), std::move(labels)};
    }
    return out;
}

SimplicialComplex maybe_restrict(SimplicialComplex complex, bool largest_component)
{
    if (!largest_component) {
        return complex;
    }
    return largest_connected_restriction(complex).complex;
}

void require_connected(const SimplicialComplex& complex)
{
    try {
        check_walk_preconditions(complex, 3);
    } catch (const StructuralError& e) {
        throw StructuralError(std::string(e.what()) + " (use --largest-component to sample its largest component)");
    }
}

std::vector<std::size_t> parse_sizes(const std::string& text)
{
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(item, &pos);
            if (pos != item.size() || v < 3) {
                throw std::invalid_argument(item);
            }
            sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw UsageError("invalid size '" + item + "' in --sizes (need integers >= 3)");
        }
    }
    if (sizes.empty()) {
        throw UsageError("--sizes is empty");
    }
    return sizes;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Simplet frequency distributions of simplicial complexes"};
    app.require_subcommand(1);

    int m = 4;
    unsigned threads = 1;
    std::string input;
    std::string output;
    bool largest = false;
    bool timings = false;
    std::size_t trials = 200;
    std::string sizes_text = "100,200,400";
    double mean_degree = 6.0;
    GenOptions gen;
    EstimatorOptions est;

    auto add_m = [&](CLI::App* cmd, int lo) {
        cmd->add_option("--m", m, "Maximum simplet size")->check(CLI::Range(lo, kMaxCatalogM));
    };
    auto add_threads = [&](CLI::App* cmd) {
        cmd->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 1024u));
    };

    auto* catalog_cmd = app.add_subcommand("catalog", "Print all simplet types with at most m vertices as JSON");
    add_m(catalog_cmd, 2);

    auto* exact_cmd = app.add_subcommand("exact", "Exact SFD of a facet file");
    exact_cmd->add_option("input", input, "Facet file")->required();
    add_m(exact_cmd, 2);
    add_threads(exact_cmd);
    exact_cmd->add_flag("--largest-component", largest, "Restrict to the largest skeleton component");

    auto* approx_cmd = app.add_subcommand("approx", "Sampled (epsilon, delta) SFD of a facet file");
    approx_cmd->add_option("input", input, "Facet file")->required();
    add_m(approx_cmd, 3);
    add_threads(approx_cmd);
    approx_cmd->add_flag("--largest-component", largest, "Restrict to the largest skeleton component");
    est.add_to(*approx_cmd);

    auto* validate_cmd =
        app.add_subcommand("validate", "Compare repeated estimates against the exact SFD (file or generator)");
    validate_cmd->add_option("--input", input, "Facet file (otherwise a generated complex)");
    add_m(validate_cmd, 3);
    add_threads(validate_cmd);
    validate_cmd->add_flag("--largest-component", largest, "Restrict to the largest skeleton component");
    validate_cmd->add_option("--trials", trials, "Independent estimator runs")->check(CLI::PositiveNumber);
    validate_cmd->add_flag("--timings", timings, "Include wall-clock timings in the report");
    est.add_to(*validate_cmd);
    gen.add_to(*validate_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a random complex as a facet file");
    gen.add_to(*gen_cmd);
    gen_cmd->add_option("--output,-o", output, "Output path (default: stdout)");
    gen_cmd->add_flag("--largest-component", largest, "Keep only the largest skeleton component");

    auto* bench_cmd = app.add_subcommand("bench", "Time the estimator over generated complexes of growing size");
    gen.add_to(*bench_cmd, false);
    bench_cmd->add_option("--sizes", sizes_text, "Comma-separated vertex counts");
    bench_cmd->add_option("--mean-degree", mean_degree, "Expected vertex degree (p_edge = d / (n - 1))")
        ->check(CLI::PositiveNumber);
    add_m(bench_cmd, 3);
    add_threads(bench_cmd);
    est.add_to(*bench_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*catalog_cmd) {
            std::cout << catalog_to_json(generate_catalog(m)).dump(2) << '\n';
        } else if (*exact_cmd) {
            auto loaded = load_input(input, largest);
            auto catalog = generate_catalog(m);
            auto doc = sfd_to_json(exact_counts(loaded.complex, catalog, threads), catalog);
            doc["labels"] = loaded.labels;
            std::cout << doc.dump(2) << '\n';
        } else if (*approx_cmd) {
            auto loaded = load_input(input, largest);
            require_connected(loaded.complex);
            auto catalog = generate_catalog(m);
            auto params = est.params(loaded.complex, m);
            auto doc = approx_to_json(approximate_sfd(loaded.complex, catalog, params, threads), catalog, params);
            doc["labels"] = loaded.labels;
            std::cout << doc.dump(2) << '\n';
        } else if (*validate_cmd) {
            auto complex = input.empty() ? maybe_restrict(generate(gen.spec()), largest)
                                         : load_input(input, largest).complex;
            require_connected(complex);
            auto catalog = generate_catalog(m);
            auto params = est.params(complex, m);
            auto report = validate_guarantee(complex, catalog, params, trials, threads);
            std::cout << validation_to_json(report, catalog, timings).dump(2) << '\n';
            return report.passed ? kOk : kValidationFailed;
        } else if (*gen_cmd) {
            auto complex = maybe_restrict(generate(gen.spec()), largest);
            if (output.empty()) {
                write_facets(std::cout, complex);
            } else {
                std::ofstream out(output);
                if (!out) {
                    throw InputError("cannot write '" + output + "'");
                }
                write_facets(out, complex);
            }
        } else if (*bench_cmd) {
            auto sizes = parse_sizes(sizes_text);
            auto catalog = generate_catalog(m);
            ApproxParams params;
            params.epsilon = est.epsilon;
            params.delta = est.delta;
            params.c = est.c;
            params.walk.m = m;
            params.walk.c_mix = est.c_mix;
            params.walk.rng_seed = est.seed;
            write_bench_csv(std::cout, bench_sweep(gen.spec(), sizes, mean_degree, catalog, params, threads));
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputFormat;
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << '\n';
        return kStructural;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kOk;
}
