#include "doctest.h"

#include <stdexcept>

#include <fstream>
#include <sstream>

#include "support/test_oracles.hpp"
#include "threshnet/errors.hpp"
#include "threshnet/oracle.hpp"
#include "threshnet/reductions.hpp"

using namespace threshnet;

namespace {

SetCoverInstance cover4() {
    SetCoverInstance sc;
    sc.universe_size = 4;
    sc.subsets = {{0, 1, 2}, {2, 3}, {0, 3}};
    return sc;
}

}  // namespace

TEST_CASE("setcover_to_mcc structure") {
    BuiltReduction br = setcover_to_mcc(cover4());
    const Network& net = br.net;
    CHECK(net.n == 7);
    CHECK(net.edge_count == 7);
    for (int i = 0; i < 4; ++i) CHECK(net.thresholds[i] == 1);
    CHECK(net.thresholds[4] == 3);
    CHECK(net.thresholds[5] == 2);
    CHECK(net.thresholds[6] == 2);
    CHECK(net.thresholds[4] == net.degree(4));
    CHECK(br.map.elem_node == std::vector<int>{0, 1, 2, 3});
    CHECK(br.map.dummy_node.empty());
    CHECK(br.map.subset_node == std::vector<int>{4, 5, 6});
    CHECK(br.map.subset_index(5) == 1);
    CHECK(br.map.element_of(2) == 2);
    CHECK(br.map.element_of(4) == -1);
}

TEST_CASE("cover seeds convert everything and come back out") {
    SetCoverInstance sc = cover4();
    BuiltReduction br = setcover_to_mcc(sc);
    AdoptionVector zeros(br.net.n);

    Intervention iv{{4, 5}, SeedingMode::fixed(2)};
    CHECK(evolve(br.net, zeros, iv).permanent_count == br.net.n);

    std::vector<int> back = mcc_seeds_to_cover(sc, br.map, {4, 5});
    CHECK(back == std::vector<int>{0, 1});
}

TEST_CASE("massaging drops or swaps element seeds") {
    SetCoverInstance sc = cover4();
    BuiltReduction br = setcover_to_mcc(sc);

    // element 0's subsets {0, 2} both seeded: the element seed is dropped
    std::vector<int> dropped = mcc_seeds_to_cover(sc, br.map, {0, 4, 6});
    CHECK(dropped == std::vector<int>{0, 2});

    // subset 6 unseeded: the element seed swaps to its lowest free subset
    std::vector<int> swapped = mcc_seeds_to_cover(sc, br.map, {0, 4, 5});
    CHECK(swapped == std::vector<int>{0, 1, 2});
}

TEST_CASE("mcc_seeds_to_cover rejects bad input") {
    SetCoverInstance sc = cover4();
    BuiltReduction br = setcover_to_mcc(sc);
    CHECK_THROWS_AS(mcc_seeds_to_cover(sc, br.map, {4}), IncompleteConversion);
    CHECK_THROWS_AS(mcc_seeds_to_cover(sc, br.map, {4, 5}, 1), std::invalid_argument);
}

TEST_CASE("cover optimum equals conversion optimum") {
    SplitMix64 rng(808);
    for (int it = 0; it < 25; ++it) {
        SetCoverInstance sc;
        sc.universe_size = 2 + rng.below(5);
        int f = 1 + rng.below(4);
        for (int k = 0; k < f; ++k) {
            std::vector<int> subset;
            for (int e = 0; e < sc.universe_size; ++e)
                if (rng.bounded(2) == 0) subset.push_back(e);
            if (subset.empty()) subset.push_back(rng.below(sc.universe_size));
            sc.subsets.push_back(subset);
        }
        std::optional<int> want = testref::min_cover_size(sc.universe_size, sc.subsets);

        BuiltReduction br = setcover_to_mcc(sc);
        AdoptionVector zeros(br.net.n);
        for (int d : {2, 5}) {
            MccResult r = optimal_mcc(br.net, zeros, SeedingMode::fixed(d));
            CHECK(r.feasible == want.has_value());
            if (!want) continue;
            CHECK(r.size() == *want);
            std::vector<int> cover = mcc_seeds_to_cover(sc, br.map, r.seeds, d);
            CHECK(static_cast<int>(cover.size()) <= r.size());
        }
    }
}

TEST_CASE("maxcover_to_bmc structure") {
    MaxCoverInstance mc{cover4(), 1};
    BuiltReduction br = maxcover_to_bmc(mc);
    const Network& net = br.net;
    CHECK(net.n == 11);
    // 4 dummy edges + 7 membership edges + 3 clique edges
    CHECK(net.edge_count == 14);
    for (int i = 0; i < 8; ++i) CHECK(net.thresholds[i] == 1);
    CHECK(net.thresholds[8] == 5);
    CHECK(net.thresholds[9] == 4);
    CHECK(net.thresholds[10] == 4);
    CHECK(br.map.dummy_node == std::vector<int>{4, 5, 6, 7});
    CHECK(br.map.subset_node == std::vector<int>{8, 9, 10});
    CHECK(br.map.element_of(6) == 2);

    CHECK_THROWS_AS(maxcover_to_bmc(MaxCoverInstance{cover4(), 2}), BudgetTooLarge);
    // two subsets so the budget check passes; element 2 stays uncovered
    SetCoverInstance gap;
    gap.universe_size = 3;
    gap.subsets = {{0}, {1}};
    CHECK_THROWS_AS(maxcover_to_bmc(MaxCoverInstance{gap, 0}), std::invalid_argument);
}

TEST_CASE("seeding one subset converts its elements and dummies") {
    MaxCoverInstance mc{cover4(), 1};
    BuiltReduction br = maxcover_to_bmc(mc);
    AdoptionVector zeros(br.net.n);
    // subset 0 covers {0,1,2}: committed pairs are those elements plus dummies
    Intervention iv{{8}, SeedingMode::fixed(2)};
    ConvergenceReport rep = evolve(br.net, zeros, iv);
    CHECK(rep.permanent_count == 6);
    BmcResult best = optimal_bmc(br.net, zeros, SeedingMode::fixed(2), 1);
    CHECK(best.value == 6);
    CHECK(best.value == 2 * testref::max_coverage(4, mc.cover.subsets, 1));
    std::vector<int> back = bmc_seeds_to_cover(mc, br.map, best.seeds);
    CHECK(back.size() <= 1);
}

TEST_CASE("subset nodes never fire after release") {
    MaxCoverInstance mc{cover4(), 1};
    BuiltReduction br = maxcover_to_bmc(mc);
    AdoptionVector zeros(br.net.n);
    for (int s = 0; s < br.net.n; ++s) {
        Intervention iv{{s}, SeedingMode::fixed(2)};
        EvolveTrace tr = evolve_traced(br.net, zeros, iv);
        for (const AdoptionVector& st : tr.report.cycle)
            for (int node : br.map.subset_node) CHECK(!st.get(node));
    }
}

TEST_CASE("bmc massaging keeps coverage honest") {
    MaxCoverInstance mc{cover4(), 1};
    BuiltReduction br = maxcover_to_bmc(mc);

    // element seed swaps to the lowest subset containing it
    std::vector<int> via_elem = bmc_seeds_to_cover(mc, br.map, {3});
    CHECK(via_elem == std::vector<int>{1});
    // dummy seed behaves like its element
    std::vector<int> via_dummy = bmc_seeds_to_cover(mc, br.map, {7});
    CHECK(via_dummy == std::vector<int>{1});

    CHECK_THROWS_AS(bmc_seeds_to_cover(mc, br.map, {0, 8}), BudgetTooLarge);
}

TEST_CASE("budgeted optimum equals twice the best coverage") {
    SplitMix64 rng(909);
    int done = 0;
    for (int it = 0; done < 15; ++it) {
        REQUIRE(it < 200);
        SetCoverInstance sc;
        sc.universe_size = 2 + rng.below(4);
        int f = 3 + rng.below(2);
        for (int k = 0; k < f; ++k) {
            std::vector<int> subset;
            for (int e = 0; e < sc.universe_size; ++e)
                if (rng.bounded(2) == 0) subset.push_back(e);
            if (subset.empty()) subset.push_back(rng.below(sc.universe_size));
            sc.subsets.push_back(subset);
        }
        std::vector<char> covered(sc.universe_size, 0);
        for (const auto& subset : sc.subsets)
            for (int e : subset) covered[e] = 1;
        bool all = true;
        for (char c : covered) all = all && c;
        if (!all) continue;
        ++done;

        for (int budget = 1; budget <= f - 2; ++budget) {
            MaxCoverInstance mc{sc, budget};
            BuiltReduction br = maxcover_to_bmc(mc);
            AdoptionVector zeros(br.net.n);
            BmcResult best = optimal_bmc(br.net, zeros, SeedingMode::fixed(2), budget);
            int cov = testref::max_coverage(sc.universe_size, sc.subsets, budget);
            CHECK(best.value == 2 * cov);
            std::vector<int> choice = bmc_seeds_to_cover(mc, br.map, best.seeds);
            CHECK(static_cast<int>(choice.size()) <= budget);
            std::vector<char> got(sc.universe_size, 0);
            int got_count = 0;
            for (int k : choice)
                for (int e : sc.subsets[k]) got[e] = 1;
            for (char c : got) got_count += c;
            CHECK(2 * got_count >= best.value);
        }
    }
}

TEST_CASE("mapping serializes and parses") {
    MaxCoverInstance mc{cover4(), 1};
    BuiltReduction br = maxcover_to_bmc(mc);
    std::string text = serialize_mapping(br.map);
    ReductionMapping again = parse_mapping(text);
    CHECK(again.elem_node == br.map.elem_node);
    CHECK(again.dummy_node == br.map.dummy_node);
    CHECK(again.subset_node == br.map.subset_node);
    CHECK_THROWS_AS(parse_mapping("elem 0\n"), ParseError);
    CHECK_THROWS_AS(parse_mapping("blob 0 1\n"), ParseError);
}
