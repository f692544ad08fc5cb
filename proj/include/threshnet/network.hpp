#pragma once

#include <cstdint>
#include <vector>

#include "threshnet/bitvec.hpp"

namespace threshnet {

using AdoptionVector = BitVec;

struct Edge {
    int u, v, w;
};

// Undirected weighted graph with integer node thresholds, stored as CSR
// adjacency. Weights are >= 1 (a zero-weight edge can never contribute to
// any neighbor sum, so the representation simply never holds one).
struct Network {
    int n = 0;
    std::vector<int> thresholds;      // b_i >= 0
    std::vector<int> offsets;         // size n+1
    std::vector<int> neighbors;       // size 2|E|
    std::vector<int> weights;         // parallel to neighbors
    std::vector<int> wdegree;         // weighted degree per node
    int max_weight = 1;               // k; 1 for edgeless graphs
    long long edge_count = 0;         // |E|
    long long weight_sum = 0;         // W = sum of edge weights

    int degree(int i) const { return offsets[i + 1] - offsets[i]; }

    // canonical edge list: u < v, sorted lexicographically
    std::vector<Edge> edges() const;
};

// Validates and builds. Throws InvalidThreshold (b < 0), InvalidWeight
// (w < 1), InvalidEdge (self-loop, duplicate, or endpoint out of range).
Network build_network(int n, std::vector<int> thresholds, std::vector<Edge> edges);

struct ThresholdDist {
    enum class Kind { Uniform, DegreePlusOne };
    Kind kind = Kind::DegreePlusOne;
    int lo = 0, hi = 1;

    static ThresholdDist uniform(int lo, int hi);
    // per node: uniform over 0..wdeg(i)+1
    static ThresholdDist degree_plus_one();
};

// Path 0-1-...-n-1 with unit weights and constant threshold.
Network gen_line(int n, int threshold);

// G(n, p) with weights uniform in 1..weight_max and thresholds drawn from
// dist. Same seed and parameters reproduce the same network exactly.
Network gen_random(int n, double edge_prob, const ThresholdDist& dist, int weight_max,
                   uint64_t rng_seed);

}  // namespace threshnet
