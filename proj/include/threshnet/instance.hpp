#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "threshnet/intervention.hpp"
#include "threshnet/network.hpp"

namespace threshnet {

// A network plus optional initial state and optional seeding intervention,
// i.e. everything one run of the dynamics needs.
struct Instance {
    Network net;
    std::optional<AdoptionVector> x0;
    std::optional<Intervention> intervention;
};

// Text format (UTF-8, '#' starts a comment, blank lines ignored):
//   nodes N
//   t <node_id> <threshold>     one line per node
//   e <u> <v> <w>               u < v required
//   x0 <bitstring of length N>  optional
//   seed <id>                   optional, repeatable
//   mode temporary | mode fixed <d>   optional; seeds default to temporary
Instance parse_instance(const std::string& text);

// Canonical form: nodes, thresholds by id, edges sorted (u < v), x0,
// seeds ascending, mode. parse(serialize(x)) == x.
std::string serialize_instance(const Instance& inst);

// FNV-1a over the canonical serialization; stable across runs and platforms.
uint64_t instance_hash(const Instance& inst);
std::string instance_hash_hex(const Instance& inst);

struct SetCoverInstance {
    int universe_size = 0;
    std::vector<std::vector<int>> subsets;  // each sorted, unique
};

struct MaxCoverInstance {
    SetCoverInstance cover;
    int budget = 1;
};

// Text format:
//   universe n
//   budget k        optional
//   <id> <id> ...   one line per subset
struct ParsedCover {
    SetCoverInstance cover;
    std::optional<int> budget;
};

ParsedCover parse_setcover(const std::string& text);
std::string serialize_setcover(const SetCoverInstance& sc, std::optional<int> budget = {});

}  // namespace threshnet
