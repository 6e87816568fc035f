#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <unordered_map>
#include <vector>

#include "simplet/complex.hpp"

namespace simplet {

using Rng = std::mt19937_64;

/// A state of the simplet walk: the sorted vertex set of a simplet.
using ChainState = VertexSet;

/// Largest simplet size the walk supports.
inline constexpr int kMaxWalkSize = 16;

enum class SampleMode {
    fresh_chain,  ///< independent chain per sample, burn_in steps each
    thinned,      ///< one persistent chain, thinning_gap steps between samples
};

struct WalkConfig {
    int m = 4;
    std::uint64_t burn_in = 1;
    double c_mix = 1.0;
    SampleMode mode = SampleMode::fresh_chain;
    std::uint64_t thinning_gap = 1;
    std::uint64_t rng_seed = 0;
};

/// All states one add, remove or swap move away from `s`. Each result is a
/// connected vertex set with 2..m vertices; no state appears twice.
std::vector<ChainState> state_neighbors(const SimplicialComplex& complex, const ChainState& s, int m);

/// Number of states returned by state_neighbors, computed without
/// materializing them.
std::size_t state_degree(const SimplicialComplex& complex, const ChainState& s, int m);

/// Entry T(s, t) of the walk's transition matrix, including the self-loop
/// mass when s == t.
double transition_probability(const SimplicialComplex& complex, const ChainState& s, const ChainState& t, int m);

/// One step of the walk: propose a uniform neighbour j of s and move there
/// with probability min(1, d(s) / d(j)).
ChainState transition_step(const SimplicialComplex& complex, const ChainState& s, int m, Rng& rng);

/// ceil(c_mix * ln(max(n, 3)) * max_degree * diameter^2), at least 1.
std::uint64_t burn_in_steps(const SimplicialComplex& complex, double c_mix,
                            std::size_t exact_diameter_threshold = kDefaultExactDiameterThreshold);

/// Config with burn_in derived from the complex via burn_in_steps.
WalkConfig make_walk_config(const SimplicialComplex& complex, int m, double c_mix = 1.0, std::uint64_t seed = 0,
                            SampleMode mode = SampleMode::fresh_chain, std::uint64_t thinning_gap = 1);

/// Throws StructuralError when the complex is disconnected or has fewer than
/// three vertices, InputError when m is outside [3, kMaxWalkSize].
void check_walk_preconditions(const SimplicialComplex& complex, int m);

/// Draws simplets from the uniform distribution over all simplets with at
/// most m vertices, via the symmetric walk on the simplet state graph.
class SimpletSampler {
public:
    SimpletSampler(const SimplicialComplex& complex, WalkConfig config);

    const WalkConfig& config() const { return config_; }

    /// Fresh mode: new chain from a uniformly random edge, burn_in steps.
    /// Thinned mode: burn_in steps on the first call, thinning_gap steps on
    /// later calls, continuing the same chain.
    ChainState sample_state(Rng& rng);
    Simplet sample(Rng& rng) { return Simplet(*complex_, sample_state(rng)); }

    ChainState step(const ChainState& s, Rng& rng);
    ChainState random_edge_state(Rng& rng) const;

private:
    std::size_t degree(const ChainState& s);

    struct StateHash {
        std::size_t operator()(const ChainState& s) const noexcept;
    };

    const SimplicialComplex* complex_;
    WalkConfig config_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    ChainState current_;
    std::unordered_map<ChainState, std::size_t, StateHash> degree_cache_;
};

/// Independent generator for stream `stream` of a seeded run; used so that
/// per-sample and per-trial draws do not depend on how work is split.
Rng stream_rng(std::uint64_t seed, std::uint64_t stream);

/// One uniform simplet with a fresh chain under `config`.
Simplet sample_uniform_simplet(const SimplicialComplex& complex, const WalkConfig& config, Rng& rng);

}  // namespace simplet
