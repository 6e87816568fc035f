#include "simplet/sampler.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>

#include "simplet/errors.hpp"

namespace simplet {

namespace {

using Buffer = std::array<Vertex, kMaxWalkSize + 1>;

// Connectivity of the subgraph on the node set `nodes`, given bitmask adjacency.
bool mask_connected(const std::uint32_t* adj, std::uint32_t nodes)
{
    if (nodes == 0) {
        return true;
    }
    std::uint32_t reached = nodes & (~nodes + 1u);
    std::uint32_t frontier = reached;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f != 0; f &= f - 1) {
            next |= adj[std::countr_zero(f)];
        }
        next &= nodes;
        frontier = next & ~reached;
        reached |= next;
    }
    return reached == nodes;
}

// Writes (s without s[skip]) plus v, sorted, into out. skip == k keeps all of s.
std::size_t compose(const ChainState& s, std::size_t skip, Vertex v, bool add_v, Buffer& out)
{
    std::size_t n = 0;
    bool placed = !add_v;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i == skip) {
            continue;
        }
        if (!placed && v < s[i]) {
            out[n++] = v;
            placed = true;
        }
        out[n++] = s[i];
    }
    if (!placed) {
        out[n++] = v;
    }
    return n;
}

// Calls visit(const Vertex*, size) for each neighbouring state in a fixed
// order: adds, then removals, then swaps. Stops early when visit returns false.
template <typename Visit>
void for_each_neighbor(const SimplicialComplex& complex, const ChainState& s, int m, Visit&& visit)
{
    const std::size_t k = s.size();
    std::vector<Vertex> outside;
    for (Vertex u : s) {
        auto nb = complex.neighbors(u);
        outside.insert(outside.end(), nb.begin(), nb.end());
    }
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    std::erase_if(outside, [&](Vertex v) { return std::binary_search(s.begin(), s.end(), v); });

    // Node k stands for the vertex being swapped in.
    std::array<std::uint32_t, kMaxWalkSize + 1> adj{};
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            if (complex.adjacent(s[i], s[j])) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
            }
        }
    }
    const std::uint32_t all = (std::uint32_t{1} << k) - 1u;

    Buffer buf;
    if (k < static_cast<std::size_t>(m)) {
        for (Vertex v : outside) {
            std::size_t n = compose(s, k, v, true, buf);
            if (!visit(buf.data(), n)) {
                return;
            }
        }
    }
    if (k > 2) {
        for (std::size_t skip = 0; skip < k; ++skip) {
            if (!mask_connected(adj.data(), all & ~(1u << skip))) {
                continue;
            }
            std::size_t n = compose(s, skip, 0, false, buf);
            if (!visit(buf.data(), n)) {
                return;
            }
        }
    }
    std::vector<std::uint32_t> touch(outside.size(), 0);
    for (std::size_t o = 0; o < outside.size(); ++o) {
        for (std::size_t i = 0; i < k; ++i) {
            if (complex.adjacent(s[i], outside[o])) {
                touch[o] |= 1u << i;
            }
        }
    }
    for (std::size_t skip = 0; skip < k; ++skip) {
        const std::uint32_t rest = all & ~(1u << skip);
        for (std::size_t o = 0; o < outside.size(); ++o) {
            if ((touch[o] & rest) == 0) {
                continue;
            }
            auto with = adj;
            with[k] = touch[o];
            for (std::uint32_t t = touch[o]; t != 0; t &= t - 1) {
                with[std::countr_zero(t)] |= 1u << k;
            }
            if (!mask_connected(with.data(), rest | (1u << k))) {
                continue;
            }
            std::size_t n = compose(s, skip, outside[o], true, buf);
            if (!visit(buf.data(), n)) {
                return;
            }
        }
    }
}

void check_state(const ChainState& s, int m)
{
    if (s.size() < 2 || s.size() > static_cast<std::size_t>(m) || m > kMaxWalkSize) {
        throw InputError("walk state must have between 2 and m vertices");
    }
}

}  // namespace

std::vector<ChainState> state_neighbors(const SimplicialComplex& complex, const ChainState& s, int m)
{
    check_state(s, m);
    std::vector<ChainState> out;
    for_each_neighbor(complex, s, m, [&](const Vertex* v, std::size_t n) {
        out.emplace_back(v, v + n);
        return true;
    });
    return out;
}

std::size_t state_degree(const SimplicialComplex& complex, const ChainState& s, int m)
{
    check_state(s, m);
    std::size_t d = 0;
    for_each_neighbor(complex, s, m, [&](const Vertex*, std::size_t) {
        ++d;
        return true;
    });
    return d;
}

double transition_probability(const SimplicialComplex& complex, const ChainState& s, const ChainState& t, int m)
{
    const double ds = static_cast<double>(state_degree(complex, s, m));
    if (s == t) {
        double moved = 0.0;
        for (const auto& j : state_neighbors(complex, s, m)) {
            moved += std::min(1.0 / ds, 1.0 / static_cast<double>(state_degree(complex, j, m)));
        }
        return 1.0 - moved;
    }
    bool neighbor = false;
    for_each_neighbor(complex, s, m, [&](const Vertex* v, std::size_t n) {
        neighbor = n == t.size() && std::equal(v, v + n, t.begin());
        return !neighbor;
    });
    if (!neighbor) {
        return 0.0;
    }
    return std::min(1.0 / ds, 1.0 / static_cast<double>(state_degree(complex, t, m)));
}

namespace {

ChainState nth_neighbor(const SimplicialComplex& complex, const ChainState& s, int m, std::size_t index)
{
    ChainState out;
    for_each_neighbor(complex, s, m, [&](const Vertex* v, std::size_t n) {
        if (index-- == 0) {
            out.assign(v, v + n);
            return false;
        }
        return true;
    });
    return out;
}

template <typename Degree>
ChainState metropolis_step(const SimplicialComplex& complex, const ChainState& s, int m, Rng& rng, Degree&& degree)
{
    const std::size_t ds = degree(s);
    if (ds == 0) {
        return s;
    }
    std::uniform_int_distribution<std::size_t> pick(0, ds - 1);
    ChainState proposal = nth_neighbor(complex, s, m, pick(rng));
    const std::size_t dj = degree(proposal);
    if (dj <= ds) {
        return proposal;
    }
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    return unit(rng) * static_cast<double>(dj) < static_cast<double>(ds) ? proposal : s;
}

}  // namespace

ChainState transition_step(const SimplicialComplex& complex, const ChainState& s, int m, Rng& rng)
{
    check_state(s, m);
    return metropolis_step(complex, s, m, rng, [&](const ChainState& x) { return state_degree(complex, x, m); });
}

std::uint64_t burn_in_steps(const SimplicialComplex& complex, double c_mix, std::size_t exact_diameter_threshold)
{
    if (!(c_mix > 0.0)) {
        throw InputError("mixing constant must be positive");
    }
    const auto diameter = static_cast<double>(skeleton_diameter(complex, exact_diameter_threshold).value);
    const double n = std::max<double>(static_cast<double>(complex.vertex_count()), 3.0);
    const double steps = std::ceil(c_mix * std::log(n) * static_cast<double>(complex.max_degree()) * diameter * diameter);
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(steps));
}

WalkConfig make_walk_config(const SimplicialComplex& complex, int m, double c_mix, std::uint64_t seed, SampleMode mode,
                            std::uint64_t thinning_gap)
{
    WalkConfig config;
    config.m = m;
    config.c_mix = c_mix;
    config.burn_in = burn_in_steps(complex, c_mix);
    config.mode = mode;
    config.thinning_gap = thinning_gap;
    config.rng_seed = seed;
    return config;
}

void check_walk_preconditions(const SimplicialComplex& complex, int m)
{
    if (m < 3 || m > kMaxWalkSize) {
        throw InputError("walk requires 3 <= m <= " + std::to_string(kMaxWalkSize) + ", got m=" + std::to_string(m));
    }
    if (complex.vertex_count() < 3) {
        throw StructuralError("walk requires at least three vertices");
    }
    auto comp = skeleton_components(complex);
    for (Vertex v = 0; v < comp.size(); ++v) {
        if (comp[v] != 0) {
            throw StructuralError("1-skeleton is disconnected: vertices 0 and " + std::to_string(v) +
                                  " are mutually unreachable");
        }
    }
}

std::size_t SimpletSampler::StateHash::operator()(const ChainState& s) const noexcept
{
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (Vertex v : s) {
        h = (h ^ v) * 0x100000001b3ull;
    }
    return static_cast<std::size_t>(h);
}

SimpletSampler::SimpletSampler(const SimplicialComplex& complex, WalkConfig config)
    : complex_(&complex), config_(config), edges_(complex.edges())
{
    check_walk_preconditions(complex, config_.m);
    if (config_.burn_in < 1) {
        throw InputError("burn-in must be at least one step");
    }
    if (config_.mode == SampleMode::thinned && config_.thinning_gap < 1) {
        throw InputError("thinning gap must be at least one step");
    }
}

std::size_t SimpletSampler::degree(const ChainState& s)
{
    constexpr std::size_t kCacheLimit = std::size_t{1} << 20;
    auto it = degree_cache_.find(s);
    if (it != degree_cache_.end()) {
        return it->second;
    }
    if (degree_cache_.size() >= kCacheLimit) {
        degree_cache_.clear();
    }
    std::size_t d = state_degree(*complex_, s, config_.m);
    degree_cache_.emplace(s, d);
    return d;
}

ChainState SimpletSampler::step(const ChainState& s, Rng& rng)
{
    return metropolis_step(*complex_, s, config_.m, rng, [this](const ChainState& x) { return degree(x); });
}

ChainState SimpletSampler::random_edge_state(Rng& rng) const
{
    std::uniform_int_distribution<std::size_t> pick(0, edges_.size() - 1);
    auto [u, v] = edges_[pick(rng)];
    return {u, v};
}

ChainState SimpletSampler::sample_state(Rng& rng)
{
    std::uint64_t steps = config_.burn_in;
    if (config_.mode == SampleMode::fresh_chain || current_.empty()) {
        current_ = random_edge_state(rng);
    } else {
        steps = config_.thinning_gap;
    }
    for (std::uint64_t i = 0; i < steps; ++i) {
        current_ = step(current_, rng);
    }
    return current_;
}

Rng stream_rng(std::uint64_t seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    return Rng(seq);
}

Simplet sample_uniform_simplet(const SimplicialComplex& complex, const WalkConfig& config, Rng& rng)
{
    WalkConfig fresh = config;
    fresh.mode = SampleMode::fresh_chain;
    SimpletSampler sampler(complex, fresh);
    return sampler.sample(rng);
}

}  // namespace simplet
