#pragma once

#include <string>
#include <vector>

#include "threshnet/instance.hpp"
#include "threshnet/network.hpp"

namespace threshnet {

// Node numbering of a constructed instance: elements first, then (for the
// budgeted construction) one dummy per element, then subset nodes.
struct ReductionMapping {
    std::vector<int> elem_node;
    std::vector<int> dummy_node;   // empty for the cover construction
    std::vector<int> subset_node;

    int node_count() const;
    bool is_subset_node(int node) const;
    int subset_index(int node) const;   // -1 if not a subset node
    int element_of(int node) const;     // element id for element/dummy nodes, -1 otherwise
};

struct BuiltReduction {
    Network net;
    ReductionMapping map;
};

// Cover instance -> full-conversion instance: element nodes with threshold 1,
// one node per subset with threshold |J_k| (= its degree), unit edges for
// membership. Covers of size s correspond to seed sets of size s converting
// everything (fixed duration d >= 2), and conversely after massaging.
BuiltReduction setcover_to_mcc(const SetCoverInstance& sc);

// Converts a feasible seed set on the constructed instance into a cover no
// larger than it: element-node seeds are dropped when their neighbors are all
// seeded, otherwise swapped for the lowest-index unseeded incident subset.
// Throws IncompleteConversion if the seeds do not convert everything, and
// NotACover if verification of the massaged result fails.
std::vector<int> mcc_seeds_to_cover(const SetCoverInstance& sc, const ReductionMapping& map,
                                    std::vector<int> seeds, int duration = 2);

// Budgeted-coverage instance (budget k < |F| - 1) -> budgeted-conversion
// instance: element nodes and their dummies (threshold 1), subset nodes with
// threshold |J_k| + |F| - 1, membership edges, and a complete graph on the
// subset nodes. Permanent conversions are exactly the element+dummy pairs of
// covered or directly seeded elements, so the optimum is twice the optimal
// coverage. Throws BudgetTooLarge if k >= |F| - 1, invalid_argument if some
// element appears in no subset.
BuiltReduction maxcover_to_bmc(const MaxCoverInstance& mc);

// Seed set (|seeds| <= budget) -> subset choice covering at least
// permanent_count/2 elements: keep subset-node seeds, drop or swap
// element/dummy seeds as above.
std::vector<int> bmc_seeds_to_cover(const MaxCoverInstance& mc, const ReductionMapping& map,
                                    std::vector<int> seeds, int duration = 2);

// Sidecar format: "elem <id> <node>", "dummy <id> <node>", "subset <idx> <node>".
std::string serialize_mapping(const ReductionMapping& map);
ReductionMapping parse_mapping(const std::string& text);

}  // namespace threshnet
