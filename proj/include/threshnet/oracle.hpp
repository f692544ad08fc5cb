#pragma once

#include <optional>
#include <vector>

#include "threshnet/dynamics.hpp"
#include "threshnet/instance.hpp"

namespace threshnet {

// Result of brute-force limit-cycle detection. states is the realized model
// sequence (clamped prefix plus free phase) through the first repeat.
struct OracleResult {
    int transient = 0;
    std::vector<AdoptionVector> cycle;
    std::vector<AdoptionVector> states;
    int phase2_start = 0;

    int cycle_len() const { return static_cast<int>(cycle.size()); }
};

// Finds the limit cycle by hashing visited states until one repeats, with no
// assumption on cycle length or convergence time. Deliberately shares nothing
// with evolve()'s bounded detection, so the two validate each other.
OracleResult exact_limit_cycle(const Network& net, const AdoptionVector& x0,
                               const std::optional<Intervention>& iv = std::nullopt,
                               ReleasePhase phase = ReleasePhase::First);

struct MccResult {
    bool feasible = false;
    std::vector<int> seeds;  // defined only when feasible

    int size() const { return static_cast<int>(seeds.size()); }
};

// Smallest seed set whose intervention converts every node permanently,
// by exhaustive enumeration in (cardinality, lexicographic) order; the
// first hit is therefore the lexicographically smallest optimum.
// Infeasible is a legitimate outcome, not an error.
MccResult optimal_mcc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode);

struct BmcResult {
    std::vector<int> seeds;
    int value = 0;  // permanent count, or doubled average under AverageAdoption
};

// Best seed set of size <= budget by exhaustive enumeration; ties go to the
// earliest set in (cardinality, lexicographic) order.
BmcResult optimal_bmc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                      int budget, Objective obj = Objective::PermanentCount);

}  // namespace threshnet
