#include "threshnet/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "threshnet/errors.hpp"

namespace threshnet {

namespace {

constexpr size_t kMaxVisited = size_t(1) << 22;  // safety for engine bugs only

struct Repeat {
    int first;  // index of the first occurrence of the repeated state
    int len;
};

// iterate x -> step(x) from states.back(), hashing until a state repeats
Repeat iterate_to_repeat(const Network& net, std::vector<AdoptionVector>& states,
                         const AdoptionVector* mask) {
    std::unordered_map<AdoptionVector, int, BitVecHash> seen;
    int base = static_cast<int>(states.size()) - 1;
    seen.emplace(states[base], base);
    for (int t = base + 1;; ++t) {
        AdoptionVector next(net.n);
        {
            const AdoptionVector& x = states.back();
            for (int i = 0; i < net.n; ++i) {
                long long s = 0;
                for (int idx = net.offsets[i]; idx < net.offsets[i + 1]; ++idx)
                    if (x.get(net.neighbors[idx])) s += net.weights[idx];
                next.set(i, s >= net.thresholds[i]);
            }
            if (mask) next |= *mask;
        }
        states.push_back(std::move(next));
        auto [it, fresh] = seen.emplace(states.back(), t);
        if (!fresh) return {it->second, t - it->second};
        if (seen.size() > kMaxVisited) throw Error("state hashing exceeded sanity limit");
    }
}

}  // namespace

OracleResult exact_limit_cycle(const Network& net, const AdoptionVector& x0,
                               const std::optional<Intervention>& iv, ReleasePhase phase) {
    if (x0.size() != net.n) throw std::invalid_argument("x0 size does not match network");

    OracleResult out;
    std::vector<AdoptionVector>& states = out.states;

    if (iv) {
        AdoptionVector mask = seeds_to_mask(net.n, iv->seeds);
        states.push_back(x0 | mask);
        if (iv->mode.kind == SeedingMode::Kind::Fixed) {
            if (iv->mode.duration < 1) throw std::invalid_argument("fixed duration must be >= 1");
            AdoptionVector cur = states[0];
            for (int t = 1; t < iv->mode.duration; ++t) {
                cur = step(net, cur, mask);
                states.push_back(cur);
            }
            out.phase2_start = iv->mode.duration - 1;
        } else {
            Repeat rep = iterate_to_repeat(net, states, &mask);
            int rel = rep.first + (phase == ReleasePhase::Second ? 1 : 0);
            states.resize(rel + 1);
            out.phase2_start = rel;
        }
    } else {
        states.push_back(x0);
    }

    Repeat rep = iterate_to_repeat(net, states, nullptr);
    int entry = rep.first;
    while (entry > 0 && states[entry - 1] == states[entry - 1 + rep.len]) --entry;

    out.transient = entry;
    out.cycle.assign(states.begin() + entry, states.begin() + entry + rep.len);
    return out;
}

namespace {

// next k-combination of {0..n-1} in lexicographic order; false when done
bool next_combination(std::vector<int>& c, int n) {
    int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_combination(int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    return c;
}

std::vector<int> all_nodes(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

MccResult optimal_mcc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode) {
    // if clamping everything cannot hold, nothing can
    if (objective_value(net, x0, all_nodes(net.n), mode, Objective::PermanentCount) != net.n)
        return {};

    for (int m = 0; m <= net.n; ++m) {
        std::vector<int> c = first_combination(m);
        do {
            if (objective_value(net, x0, c, mode, Objective::PermanentCount) == net.n)
                return {true, c};
        } while (next_combination(c, net.n));
    }
    return {};  // unreachable: the all-of-V check above succeeded
}

BmcResult optimal_bmc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                      int budget, Objective obj) {
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
    BmcResult best;
    best.value = objective_value(net, x0, {}, mode, obj);

    int top = std::min(budget, net.n);
    for (int m = 1; m <= top; ++m) {
        std::vector<int> c = first_combination(m);
        do {
            int v = objective_value(net, x0, c, mode, obj);
            if (v > best.value) {
                best.value = v;
                best.seeds = c;
            }
        } while (next_combination(c, net.n));
    }
    return best;
}

}  // namespace threshnet
