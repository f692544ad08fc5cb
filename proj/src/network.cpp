#include "threshnet/network.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "threshnet/errors.hpp"
#include "threshnet/rng.hpp"

namespace threshnet {

std::vector<Edge> Network::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<size_t>(edge_count));
    for (int u = 0; u < n; ++u) {
        for (int idx = offsets[u]; idx < offsets[u + 1]; ++idx) {
            int v = neighbors[idx];
            if (u < v) out.push_back({u, v, weights[idx]});
        }
    }
    // CSR is already neighbor-sorted per node, so this is canonical order
    return out;
}

Network build_network(int n, std::vector<int> thresholds, std::vector<Edge> edges) {
    if (n < 0) throw InvalidEdge("node count must be non-negative");
    if (static_cast<int>(thresholds.size()) != n)
        throw InvalidThreshold("expected " + std::to_string(n) + " thresholds, got " +
                               std::to_string(thresholds.size()));
    for (int i = 0; i < n; ++i)
        if (thresholds[i] < 0)
            throw InvalidThreshold("negative threshold at node " + std::to_string(i));

    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw InvalidEdge("edge endpoint out of range: " + std::to_string(e.u) + " " +
                              std::to_string(e.v));
        if (e.u == e.v) throw InvalidEdge("self-loop at node " + std::to_string(e.u));
        if (e.w < 1) throw InvalidWeight("edge weight must be >= 1, got " + std::to_string(e.w));
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return a.u < b.u || (a.u == b.u && a.v < b.v); });
    for (size_t i = 1; i < edges.size(); ++i)
        if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
            throw InvalidEdge("duplicate edge " + std::to_string(edges[i].u) + "-" +
                              std::to_string(edges[i].v));

    Network net;
    net.n = n;
    net.thresholds = std::move(thresholds);
    net.edge_count = static_cast<long long>(edges.size());

    std::vector<int> deg(n, 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    net.offsets.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) net.offsets[i + 1] = net.offsets[i] + deg[i];
    net.neighbors.resize(edges.size() * 2);
    net.weights.resize(edges.size() * 2);
    std::vector<int> cursor(net.offsets.begin(), net.offsets.end() - 1);
    for (const auto& e : edges) {
        net.neighbors[cursor[e.u]] = e.v;
        net.weights[cursor[e.u]++] = e.w;
        net.neighbors[cursor[e.v]] = e.u;
        net.weights[cursor[e.v]++] = e.w;
        net.weight_sum += e.w;
        net.max_weight = std::max(net.max_weight, e.w);
    }
    net.wdegree.assign(n, 0);
    for (int i = 0; i < n; ++i)
        for (int idx = net.offsets[i]; idx < net.offsets[i + 1]; ++idx)
            net.wdegree[i] += net.weights[idx];
    return net;
}

ThresholdDist ThresholdDist::uniform(int lo, int hi) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad threshold range");
    ThresholdDist d;
    d.kind = Kind::Uniform;
    d.lo = lo;
    d.hi = hi;
    return d;
}

ThresholdDist ThresholdDist::degree_plus_one() {
    ThresholdDist d;
    d.kind = Kind::DegreePlusOne;
    return d;
}

Network gen_line(int n, int threshold) {
    if (n < 1) throw std::invalid_argument("line needs n >= 1");
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1});
    return build_network(n, std::vector<int>(n, threshold), std::move(edges));
}

Network gen_random(int n, double edge_prob, const ThresholdDist& dist, int weight_max,
                   uint64_t rng_seed) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (edge_prob < 0.0 || edge_prob > 1.0) throw std::invalid_argument("edge_prob outside [0,1]");
    if (weight_max < 1) throw std::invalid_argument("weight_max must be >= 1");

    SplitMix64 rng(rng_seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            bool present = rng.coin(edge_prob);
            int w = 1 + rng.below(weight_max);  // drawn either way: keeps the
                                                // stream aligned across p
            if (present) edges.push_back({u, v, w});
        }
    }

    // thresholds need degrees, so build once with zeros and re-thread
    Network shape = build_network(n, std::vector<int>(n, 0), edges);
    std::vector<int> thr(n);
    for (int i = 0; i < n; ++i) {
        if (dist.kind == ThresholdDist::Kind::Uniform)
            thr[i] = dist.lo + rng.below(dist.hi - dist.lo + 1);
        else
            thr[i] = rng.below(shape.wdegree[i] + 2);
    }
    shape.thresholds = std::move(thr);
    return shape;
}

}  // namespace threshnet
