#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "threshnet/instance.hpp"

namespace threshnet {

struct PropertyResult {
    std::string name;
    long long checks = 0;
    long long violations = 0;
    std::string first_detail;  // instance hash + context of the first violation

    bool ok() const { return violations == 0; }
};

struct VerifyOptions {
    int instances = 200;     // random instances to generate
    uint64_t rng_seed = 1;
    bool weighted = false;   // weights uniform in 1..weight_max instead of all 1
    int weight_max = 4;
    int max_nodes = 12;
};

// Random instance in the verify corpus style: G(n,p) with p swept over
// 0, 0.1, ..., 1.0, thresholds uniform over 0..wdeg+1, random x0 attached.
Instance gen_verify_instance(int index, const VerifyOptions& opt);

// Exercises each instance under no intervention, a temporary seeding and a
// fixed-duration seeding, checking convergence, oracle agreement, bounds,
// energy decrease laws, monotonicity, clamping equivalence and report consistency.
// The energy-range property is checked on instances where every threshold
// satisfies 1 <= b_i <= wdeg(i) (its hypothesis; a node that can never fire
// or never idle shifts the scaled energy outside the 4W window).
std::vector<PropertyResult> run_property_suite(const std::vector<Instance>& corpus,
                                               uint64_t rng_seed);

std::vector<PropertyResult> run_property_suite(const VerifyOptions& opt);

}  // namespace threshnet
