#include "threshnet/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "threshnet/rng.hpp"

namespace threshnet {

namespace {

void validate(const SearchConfig& cfg, int budget) {
    if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
    if (cfg.max_evals < 1) throw std::invalid_argument("max_evals must be >= 1");
    if (cfg.initial_temp < 0) throw std::invalid_argument("initial_temp must be >= 0");
    if (!(cfg.decay > 0.0 && cfg.decay < 1.0)) throw std::invalid_argument("decay must be in (0,1)");
    if (budget < 0) throw std::invalid_argument("budget must be >= 0");
}

struct Evaluator {
    const Network& net;
    const AdoptionVector& x0;
    SeedingMode mode;
    Objective obj;
    long long cap;
    long long used = 0;

    bool exhausted() const { return used >= cap; }

    int eval(const std::vector<int>& seeds) {
        ++used;
        return objective_value(net, x0, seeds, mode, obj);
    }
};

std::vector<int> random_subset(int n, int m, SplitMix64& rng) {
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i;
    for (int i = 0; i < m; ++i) {
        int j = i + rng.below(n - i);
        std::swap(ids[i], ids[j]);
    }
    ids.resize(m);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<int> with_swap(const std::vector<int>& s, int pos, int v) {
    std::vector<int> t = s;
    t[pos] = v;
    std::sort(t.begin(), t.end());
    return t;
}

}  // namespace

SearchResult greedy_bmc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                        int budget, const SearchConfig& cfg) {
    validate(cfg, budget);
    Evaluator ev{net, x0, mode, cfg.objective, cfg.max_evals};

    std::vector<int> seeds;
    std::vector<char> in(net.n, 0);
    int cur = ev.eval(seeds);

    bool out_of_evals = false;
    while (static_cast<int>(seeds.size()) < budget && !out_of_evals) {
        int best_val = cur;
        int best_v = -1;
        for (int v = 0; v < net.n; ++v) {
            if (in[v]) continue;
            if (ev.exhausted()) {
                out_of_evals = true;
                break;
            }
            std::vector<int> cand = seeds;
            cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
            int val = ev.eval(cand);
            if (val > best_val) {  // strict: ties stay with the lowest id
                best_val = val;
                best_v = v;
            }
        }
        if (best_v < 0) break;  // zero marginal gain (or nothing left to add)
        seeds.insert(std::lower_bound(seeds.begin(), seeds.end(), best_v), best_v);
        in[best_v] = 1;
        cur = best_val;
    }

    // cur is by construction the evaluation of the returned set
    return {seeds, cur, ev.used, true};
}

SearchResult local_search(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                          int budget, const SearchConfig& cfg) {
    validate(cfg, budget);
    Evaluator ev{net, x0, mode, cfg.objective, cfg.max_evals};
    int m = std::min(budget, net.n);

    std::vector<int> best_seeds;
    int best_val = -1;

    for (int r = 0; r < cfg.restarts && !ev.exhausted(); ++r) {
        SplitMix64 rng = SplitMix64::substream(cfg.rng_seed, static_cast<uint64_t>(r));
        std::vector<int> s = random_subset(net.n, m, rng);
        int cur = ev.eval(s);

        std::vector<char> in(net.n, 0);
        for (int v : s) in[v] = 1;

        bool climbing = true;
        while (climbing && !ev.exhausted()) {
            int sw_val = cur;
            int sw_pos = -1, sw_node = -1;
            for (int pos = 0; pos < m && !ev.exhausted(); ++pos) {
                for (int v = 0; v < net.n; ++v) {
                    if (in[v]) continue;
                    if (ev.exhausted()) break;
                    int val = ev.eval(with_swap(s, pos, v));
                    if (val > sw_val) {
                        sw_val = val;
                        sw_pos = pos;
                        sw_node = v;
                    }
                }
            }
            if (sw_pos < 0) {
                climbing = false;  // local optimum under single swaps
            } else {
                in[s[sw_pos]] = 0;
                in[sw_node] = 1;
                s = with_swap(s, sw_pos, sw_node);
                cur = sw_val;
            }
        }

        if (cur > best_val) {
            best_val = cur;
            best_seeds = s;
        }
    }

    if (best_val < 0) {  // could not even evaluate one start
        best_seeds.clear();
        best_val = 0;
    }
    return {best_seeds, best_val, ev.used, true};
}

SearchResult anneal(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                    int budget, const SearchConfig& cfg) {
    validate(cfg, budget);
    Evaluator ev{net, x0, mode, cfg.objective, cfg.max_evals};
    int m = std::min(budget, net.n);
    long long share = std::max<long long>(1, cfg.max_evals / cfg.restarts);

    std::vector<int> best_seeds;
    int best_val = -1;

    for (int r = 0; r < cfg.restarts && !ev.exhausted(); ++r) {
        SplitMix64 rng = SplitMix64::substream(cfg.rng_seed, static_cast<uint64_t>(r));
        std::vector<int> s = random_subset(net.n, m, rng);
        long long used_here = 1;
        int cur = ev.eval(s);
        if (cur > best_val) {
            best_val = cur;
            best_seeds = s;
        }

        std::vector<char> in(net.n, 0);
        for (int v : s) in[v] = 1;

        double temp = cfg.initial_temp;
        while (used_here < share && !ev.exhausted() && m > 0 && m < net.n) {
            int pos = rng.below(m);
            int skip = rng.below(net.n - m);  // index among non-seeds, ascending
            int v = -1;
            for (int u = 0; u < net.n; ++u) {
                if (in[u]) continue;
                if (skip-- == 0) {
                    v = u;
                    break;
                }
            }
            std::vector<int> cand = with_swap(s, pos, v);
            int val = ev.eval(cand);
            ++used_here;
            if (val > best_val) {
                best_val = val;
                best_seeds = cand;
            }
            int delta = val - cur;
            bool accept = delta > 0;
            if (!accept && temp > 0 && rng.unit() < std::exp(delta / temp)) accept = true;
            if (accept) {
                in[s[pos]] = 0;
                in[v] = 1;
                s = cand;
                cur = val;
            }
            temp *= cfg.decay;
        }
    }

    if (best_val < 0) {
        best_seeds.clear();
        best_val = 0;
    }
    return {best_seeds, best_val, ev.used, true};
}

SearchResult greedy_mcc(const Network& net, const AdoptionVector& x0, const SeedingMode& mode,
                        const SearchConfig& cfg) {
    validate(cfg, 0);
    Evaluator ev{net, x0, mode, Objective::PermanentCount, cfg.max_evals};

    std::vector<int> everyone(net.n);
    for (int i = 0; i < net.n; ++i) everyone[i] = i;
    if (ev.eval(everyone) != net.n) return {{}, -1, ev.used, false};

    std::vector<int> seeds;
    std::vector<char> in(net.n, 0);
    int cur = ev.eval(seeds);

    while (cur < net.n) {
        int best_val = -1, best_v = -1;
        for (int v = 0; v < net.n; ++v) {
            if (in[v]) continue;
            if (ev.exhausted())
                return {seeds, -1, ev.used, false};  // undecided within eval budget
            std::vector<int> cand = seeds;
            cand.insert(std::lower_bound(cand.begin(), cand.end(), v), v);
            int val = ev.eval(cand);
            if (val > best_val) {
                best_val = val;
                best_v = v;
            }
        }
        if (best_v < 0) return {seeds, -1, ev.used, false};  // cannot happen once all-V passed
        seeds.insert(std::lower_bound(seeds.begin(), seeds.end(), best_v), best_v);
        in[best_v] = 1;
        cur = best_val;
    }
    return {seeds, static_cast<int>(seeds.size()), ev.used, true};
}

}  // namespace threshnet
