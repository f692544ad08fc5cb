#include "threshnet/dynamics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "threshnet/errors.hpp"

namespace threshnet {

namespace {

// gather pass then compare pass; the gather visits every adjacency entry,
// i.e. 2W weighted terms per step
AdoptionVector do_step(const Network& net, const AdoptionVector& x, const AdoptionVector* mask) {
    AdoptionVector out(net.n);
    for (int i = 0; i < net.n; ++i) {
        long long s = 0;
        for (int idx = net.offsets[i]; idx < net.offsets[i + 1]; ++idx)
            if (x.get(net.neighbors[idx])) s += net.weights[idx];
        out.set(i, s >= net.thresholds[i]);
    }
    if (mask) out |= *mask;
    return out;
}

void check_x0(const Network& net, const AdoptionVector& x0) {
    if (x0.size() != net.n) throw std::invalid_argument("x0 size does not match network");
}

std::vector<int> canonical_seeds(const Network& net, std::vector<int> seeds) {
    for (int s : seeds)
        if (s < 0 || s >= net.n) throw std::invalid_argument("seed id out of range");
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

// first t >= 1 with x(t) = x(t-1) (entry t-1, length 1) or x(t) = x(t-2)
// (entry t-2, length 2), appending states as it goes. limit bounds the
// number of new steps; overrun means the length-<=-2 guarantee was broken.
struct Detection {
    int entry;
    int len;
    long long steps;
};

Detection run_to_repeat(const Network& net, std::vector<AdoptionVector>& states,
                        const AdoptionVector* mask, long long limit, const char* where) {
    int s0 = static_cast<int>(states.size()) - 1;
    long long steps = 0;
    for (int t = s0 + 1;; ++t) {
        states.push_back(do_step(net, states.back(), mask));
        ++steps;
        if (states[t] == states[t - 1]) return {t - 1, 1, steps};
        if (t - s0 >= 2 && states[t] == states[t - 2]) return {t - 2, 2, steps};
        if (steps > limit)
            throw BoundViolation(std::string(where) + ": no cycle within convergence bound");
    }
}

}  // namespace

AdoptionVector seeds_to_mask(int n, const std::vector<int>& seeds) {
    AdoptionVector m(n);
    for (int s : seeds) {
        if (s < 0 || s >= n) throw std::invalid_argument("seed id out of range");
        m.set(s, true);
    }
    return m;
}

AdoptionVector step(const Network& net, const AdoptionVector& x) {
    check_x0(net, x);
    return do_step(net, x, nullptr);
}

AdoptionVector step(const Network& net, const AdoptionVector& x, const AdoptionVector& clamped) {
    check_x0(net, x);
    if (clamped.size() != net.n) throw std::invalid_argument("clamp mask size mismatch");
    return do_step(net, x, &clamped);
}

AdoptionVector step(const Network& net, const AdoptionVector& x, const std::vector<int>& clamped) {
    check_x0(net, x);
    AdoptionVector mask = seeds_to_mask(net.n, clamped);
    return do_step(net, x, &mask);
}

long long scaled_energy(const Network& net, const AdoptionVector& x_t,
                        const AdoptionVector& x_t1) {
    check_x0(net, x_t);
    check_x0(net, x_t1);
    long long e = 0;
    for (int i = 0; i < net.n; ++i) {
        long long bp = 2LL * net.thresholds[i] - 1;
        if (x_t.get(i)) e += bp;
        if (x_t1.get(i)) {
            long long ax = 0;
            for (int idx = net.offsets[i]; idx < net.offsets[i + 1]; ++idx)
                if (x_t.get(net.neighbors[idx])) ax += net.weights[idx];
            e -= 2 * ax - bp;
        }
    }
    return e;
}

long long operation_budget(const Network& net, const std::optional<SeedingMode>& mode) {
    long long two_w = 2 * net.weight_sum;
    long long step_bound = two_w + net.n;
    if (mode) {
        if (mode->kind == SeedingMode::Kind::Temporary)
            step_bound = 2 * (two_w + net.n);
        else
            step_bound = static_cast<long long>(mode->duration) + two_w + net.n;
    }
    return step_bound * two_w;
}

int release_time(const Network& net, const AdoptionVector& x0, const std::vector<int>& seeds) {
    check_x0(net, x0);
    AdoptionVector mask = seeds_to_mask(net.n, canonical_seeds(net, seeds));
    std::vector<AdoptionVector> states{x0 | mask};
    long long limit = 2 * net.weight_sum + net.n + 2;
    Detection det = run_to_repeat(net, states, &mask, limit, "clamped phase");
    return det.entry + det.len;
}

EvolveTrace evolve_traced(const Network& net, const AdoptionVector& x0,
                          const std::optional<Intervention>& iv, ReleasePhase phase) {
    check_x0(net, x0);
    const long long two_w = 2 * net.weight_sum;
    const long long free_bound = two_w + net.n;

    EvolveTrace out;
    std::vector<AdoptionVector>& states = out.states;
    long long steps_executed = 0;
    int steps_clamped = 0;
    long long transient_bound = free_bound;

    AdoptionVector mask(net.n);
    if (iv) {
        std::vector<int> seeds = canonical_seeds(net, iv->seeds);
        mask = seeds_to_mask(net.n, seeds);
        states.push_back(x0 | mask);
        if (iv->mode.kind == SeedingMode::Kind::Fixed) {
            int d = iv->mode.duration;
            if (d < 1) throw std::invalid_argument("fixed duration must be >= 1");
            for (int t = 1; t < d; ++t) {
                states.push_back(do_step(net, states.back(), &mask));
                ++steps_executed;
            }
            out.phase2_start = d - 1;
            steps_clamped = d;
            transient_bound = d + free_bound;
        } else {
            // run the clamped system to its own cycle; the clamp comes off at
            // the entry state (or its successor under ReleasePhase::Second),
            // dropping the detection lookahead from the model sequence
            Detection det = run_to_repeat(net, states, &mask, free_bound + 2, "clamped phase");
            steps_executed += det.steps;
            int rel = det.entry + (phase == ReleasePhase::Second ? 1 : 0);
            states.resize(rel + 1);
            out.phase2_start = rel;
            steps_clamped = rel + 1;
            transient_bound = 2 * free_bound + (phase == ReleasePhase::Second ? 1 : 0);
        }
    } else {
        states.push_back(x0);
    }

    Detection det = run_to_repeat(net, states, nullptr, free_bound + 2, "free phase");
    steps_executed += det.steps;
    int entry = det.entry;
    int c = det.len;

    // minimal periodic suffix: the cycle may have been entered during the
    // clamped phase already
    while (entry > 0 && states[entry - 1] == states[entry - 1 + c]) --entry;

    ConvergenceReport& rep = out.report;
    rep.transient_time = entry;
    rep.cycle.assign(states.begin() + entry, states.begin() + entry + c);
    rep.steps_clamped = steps_clamped;
    rep.operation_count = steps_executed * two_w;

    if (rep.transient_time > transient_bound)
        throw BoundViolation("transient " + std::to_string(rep.transient_time) +
                             " exceeds bound " + std::to_string(transient_bound));
    std::optional<SeedingMode> mode;
    if (iv) mode = iv->mode;
    long long cap = operation_budget(net, mode);
    if (rep.operation_count > cap)
        throw BoundViolation("operation count " + std::to_string(rep.operation_count) +
                             " exceeds budget " + std::to_string(cap));

    for (size_t j = out.phase2_start; j + 1 < states.size(); ++j)
        rep.energy_trace.push_back(scaled_energy(net, states[j], states[j + 1]));

    rep.adoption_avg2 = rep.cycle.front().count() + rep.cycle.back().count();
    rep.permanent_count =
        c == 1 ? rep.cycle[0].count() : (rep.cycle[0] & rep.cycle[1]).count();
    return out;
}

ConvergenceReport evolve(const Network& net, const AdoptionVector& x0,
                         const std::optional<Intervention>& iv, ReleasePhase phase) {
    return evolve_traced(net, x0, iv, phase).report;
}

double long_term_average_adoption(const Network& net, const AdoptionVector& x0,
                                  const std::optional<Intervention>& iv, ReleasePhase phase) {
    return evolve(net, x0, iv, phase).adoption_avg2 / 2.0;
}

int permanent_conversion_count(const Network& net, const AdoptionVector& x0,
                               const std::optional<Intervention>& iv, ReleasePhase phase) {
    return evolve(net, x0, iv, phase).permanent_count;
}

int objective_value(const Network& net, const AdoptionVector& x0, const std::vector<int>& seeds,
                    const SeedingMode& mode, Objective obj, ReleasePhase phase) {
    Intervention iv{seeds, mode};
    ConvergenceReport rep = evolve(net, x0, iv, phase);
    return obj == Objective::PermanentCount ? rep.permanent_count : rep.adoption_avg2;
}

}  // namespace threshnet
