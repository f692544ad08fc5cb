#pragma once

#include <cstdint>
#include <vector>

#include "threshnet/dynamics.hpp"

namespace threshnet {

struct SearchConfig {
    uint64_t rng_seed = 1;
    int restarts = 4;
    long long max_evals = 100000;
    double initial_temp = 1.0;   // annealing only; 0 degenerates to hill climbing
    double decay = 0.95;         // temperature multiplier per proposal, in (0,1)
    Objective objective = Objective::PermanentCount;
};

struct SearchResult {
    std::vector<int> seeds;
    int value = 0;           // objective units (doubled for AverageAdoption)
    long long eval_count = 0;
    bool feasible = true;    // greedy_mcc only
};

// Adds the seed with the best marginal gain (ties to the lowest id) until the
// budget is hit or no seed strictly helps. The reported value equals an
// evaluation of the returned set.
SearchResult greedy_bmc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                        int budget, const SearchConfig& cfg);

// Best-improvement single-swap hill climbing from random size-budget starts,
// one independent RNG substream per restart; returns the best local optimum.
SearchResult local_search(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                          int budget, const SearchConfig& cfg);

// Simulated annealing over single swaps: always accept improvements, accept a
// loss of delta with probability exp(delta / T), T = initial_temp * decay^i.
SearchResult anneal(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                    int budget, const SearchConfig& cfg);

// Greedy cover-style heuristic for full conversion; feasible = false when even
// seeding all of V fails.
SearchResult greedy_mcc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                        const SearchConfig& cfg);

}  // namespace threshnet
