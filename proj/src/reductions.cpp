#include "threshnet/reductions.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "threshnet/dynamics.hpp"
#include "threshnet/errors.hpp"

namespace threshnet {

namespace {

void check_cover_instance(const SetCoverInstance& sc) {
    if (sc.universe_size < 1) throw std::invalid_argument("universe must be >= 1");
    for (const auto& subset : sc.subsets) {
        for (size_t i = 0; i < subset.size(); ++i) {
            if (subset[i] < 0 || subset[i] >= sc.universe_size)
                throw std::invalid_argument("subset element out of range");
            if (i > 0 && subset[i] <= subset[i - 1])
                throw std::invalid_argument("subsets must be sorted and duplicate-free");
        }
    }
}

std::vector<int> canonical(std::vector<int> ids, int n, const char* what) {
    for (int v : ids)
        if (v < 0 || v >= n) throw std::invalid_argument(std::string(what) + " id out of range");
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

}  // namespace

int ReductionMapping::node_count() const {
    return static_cast<int>(elem_node.size() + dummy_node.size() + subset_node.size());
}

bool ReductionMapping::is_subset_node(int node) const { return subset_index(node) >= 0; }

int ReductionMapping::subset_index(int node) const {
    for (size_t k = 0; k < subset_node.size(); ++k)
        if (subset_node[k] == node) return static_cast<int>(k);
    return -1;
}

int ReductionMapping::element_of(int node) const {
    for (size_t i = 0; i < elem_node.size(); ++i)
        if (elem_node[i] == node) return static_cast<int>(i);
    for (size_t i = 0; i < dummy_node.size(); ++i)
        if (dummy_node[i] == node) return static_cast<int>(i);
    return -1;
}

BuiltReduction setcover_to_mcc(const SetCoverInstance& sc) {
    check_cover_instance(sc);
    int n = sc.universe_size;
    int f = static_cast<int>(sc.subsets.size());

    std::vector<int> thresholds(n + f, 1);
    std::vector<Edge> edges;
    for (int k = 0; k < f; ++k) {
        thresholds[n + k] = static_cast<int>(sc.subsets[k].size());  // = its degree
        for (int i : sc.subsets[k]) edges.push_back({i, n + k, 1});
    }

    BuiltReduction out;
    out.net = build_network(n + f, std::move(thresholds), std::move(edges));
    out.map.elem_node.resize(n);
    for (int i = 0; i < n; ++i) out.map.elem_node[i] = i;
    out.map.subset_node.resize(f);
    for (int k = 0; k < f; ++k) out.map.subset_node[k] = n + k;
    return out;
}

std::vector<int> mcc_seeds_to_cover(const SetCoverInstance& sc, const ReductionMapping& map,
                                    std::vector<int> seeds, int duration) {
    check_cover_instance(sc);
    if (duration < 2) throw std::invalid_argument("duration must be >= 2");
    Network net = setcover_to_mcc(sc).net;
    seeds = canonical(std::move(seeds), net.n, "seed");

    AdoptionVector zeros(net.n);
    Intervention iv{seeds, SeedingMode::fixed(duration)};
    if (evolve(net, zeros, iv).permanent_count != net.n)
        throw IncompleteConversion("seed set does not convert every node");

    int n = sc.universe_size;
    std::vector<char> seeded(net.n, 0);
    for (int s : seeds) seeded[s] = 1;

    // drop an element-node seed whose incident subset nodes are all seeded,
    // otherwise swap it for its lowest-index unseeded subset
    for (int node = 0; node < net.n; ++node) {
        if (!seeded[node] || map.is_subset_node(node)) continue;
        int elem = map.element_of(node);
        if (elem < 0) throw std::invalid_argument("mapping does not know node " +
                                                  std::to_string(node));
        bool all_seeded = true;
        for (int idx = net.offsets[node]; idx < net.offsets[node + 1]; ++idx)
            if (!seeded[net.neighbors[idx]]) {
                all_seeded = false;
                break;
            }
        seeded[node] = 0;
        if (all_seeded) continue;
        int pick = -1;
        for (size_t k = 0; k < sc.subsets.size(); ++k) {
            if (seeded[map.subset_node[k]]) continue;
            if (std::binary_search(sc.subsets[k].begin(), sc.subsets[k].end(), elem)) {
                pick = static_cast<int>(k);
                break;
            }
        }
        if (pick < 0) throw NotACover("element " + std::to_string(elem) + " has no subset");
        seeded[map.subset_node[pick]] = 1;
    }

    std::vector<int> chosen;
    std::vector<char> covered(n, 0);
    for (size_t k = 0; k < sc.subsets.size(); ++k) {
        if (!seeded[map.subset_node[k]]) continue;
        chosen.push_back(static_cast<int>(k));
        for (int e : sc.subsets[k]) covered[e] = 1;
    }
    for (int e = 0; e < n; ++e)
        if (!covered[e])
            throw NotACover("massaged subsets miss element " + std::to_string(e));
    return chosen;
}

BuiltReduction maxcover_to_bmc(const MaxCoverInstance& mc) {
    check_cover_instance(mc.cover);
    int n = mc.cover.universe_size;
    int f = static_cast<int>(mc.cover.subsets.size());
    if (mc.budget < 0) throw std::invalid_argument("budget must be >= 0");
    if (mc.budget >= f - 1)
        throw BudgetTooLarge("budget " + std::to_string(mc.budget) +
                             " requires at least " + std::to_string(mc.budget + 2) + " subsets");
    std::vector<char> covered(n, 0);
    for (const auto& subset : mc.cover.subsets)
        for (int e : subset) covered[e] = 1;
    for (int e = 0; e < n; ++e)
        if (!covered[e])
            throw std::invalid_argument("element " + std::to_string(e) + " is in no subset");

    std::vector<int> thresholds(2 * n + f, 1);  // elements and dummies want one sighting
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, n + i, 1});
    for (int k = 0; k < f; ++k) {
        thresholds[2 * n + k] = static_cast<int>(mc.cover.subsets[k].size()) + f - 1;
        for (int i : mc.cover.subsets[k]) edges.push_back({i, 2 * n + k, 1});
    }
    for (int a = 0; a < f; ++a)
        for (int b = a + 1; b < f; ++b) edges.push_back({2 * n + a, 2 * n + b, 1});

    BuiltReduction out;
    out.net = build_network(2 * n + f, std::move(thresholds), std::move(edges));
    out.map.elem_node.resize(n);
    out.map.dummy_node.resize(n);
    for (int i = 0; i < n; ++i) {
        out.map.elem_node[i] = i;
        out.map.dummy_node[i] = n + i;
    }
    out.map.subset_node.resize(f);
    for (int k = 0; k < f; ++k) out.map.subset_node[k] = 2 * n + k;
    return out;
}

std::vector<int> bmc_seeds_to_cover(const MaxCoverInstance& mc, const ReductionMapping& map,
                                    std::vector<int> seeds, int duration) {
    if (duration < 2) throw std::invalid_argument("duration must be >= 2");
    Network net = maxcover_to_bmc(mc).net;
    seeds = canonical(std::move(seeds), net.n, "seed");
    if (static_cast<int>(seeds.size()) > mc.budget)
        throw BudgetTooLarge("seed set exceeds the instance budget");

    AdoptionVector zeros(net.n);
    Intervention iv{seeds, SeedingMode::fixed(duration)};
    int perm = evolve(net, zeros, iv).permanent_count;

    int n = mc.cover.universe_size;
    std::vector<char> in_choice(mc.cover.subsets.size(), 0);
    std::vector<char> covered(n, 0);
    for (int s : seeds) {
        int k = map.subset_index(s);
        if (k < 0) continue;
        in_choice[k] = 1;
        for (int e : mc.cover.subsets[k]) covered[e] = 1;
    }
    for (int s : seeds) {
        if (map.subset_index(s) >= 0) continue;
        int elem = map.element_of(s);
        if (elem < 0 || covered[elem]) continue;  // dropped outright
        int pick = -1;
        for (size_t k = 0; k < mc.cover.subsets.size(); ++k) {
            if (in_choice[k]) continue;
            if (std::binary_search(mc.cover.subsets[k].begin(), mc.cover.subsets[k].end(), elem)) {
                pick = static_cast<int>(k);
                break;
            }
        }
        if (pick < 0) throw NotACover("element " + std::to_string(elem) + " has no free subset");
        in_choice[pick] = 1;
        for (int e : mc.cover.subsets[pick]) covered[e] = 1;
    }

    std::vector<int> chosen;
    int covered_count = 0;
    for (size_t k = 0; k < in_choice.size(); ++k)
        if (in_choice[k]) chosen.push_back(static_cast<int>(k));
    for (int e = 0; e < n; ++e) covered_count += covered[e];
    if (2 * covered_count < perm)
        throw NotACover("massaged choice covers " + std::to_string(covered_count) +
                        " elements but " + std::to_string(perm) + " nodes converted");
    return chosen;
}

std::string serialize_mapping(const ReductionMapping& map) {
    std::ostringstream out;
    for (size_t i = 0; i < map.elem_node.size(); ++i)
        out << "elem " << i << " " << map.elem_node[i] << "\n";
    for (size_t i = 0; i < map.dummy_node.size(); ++i)
        out << "dummy " << i << " " << map.dummy_node[i] << "\n";
    for (size_t k = 0; k < map.subset_node.size(); ++k)
        out << "subset " << k << " " << map.subset_node[k] << "\n";
    return out.str();
}

ReductionMapping parse_mapping(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, int>> elems, dummies, subsets;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        int id, node;
        if (!(ls >> id >> node) || id < 0 || node < 0)
            throw ParseError(lineno, "expected: <kind> <id> <node>");
        std::string extra;
        if (ls >> extra) throw ParseError(lineno, "trailing tokens");
        if (kw == "elem")
            elems.push_back({id, node});
        else if (kw == "dummy")
            dummies.push_back({id, node});
        else if (kw == "subset")
            subsets.push_back({id, node});
        else
            throw ParseError(lineno, "unknown mapping kind '" + kw + "'");
    }

    auto fill = [lineno](std::vector<std::pair<int, int>>& rows, const char* what) {
        std::vector<int> out(rows.size(), -1);
        for (auto [id, node] : rows) {
            if (id >= static_cast<int>(out.size()) || out[id] != -1)
                throw ParseError(lineno, std::string("bad ") + what + " ids");
            out[id] = node;
        }
        return out;
    };
    ReductionMapping map;
    map.elem_node = fill(elems, "elem");
    map.dummy_node = fill(dummies, "dummy");
    map.subset_node = fill(subsets, "subset");
    return map;
}

}  // namespace threshnet
