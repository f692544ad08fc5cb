#include "threshnet/verify.hpp"

#include <algorithm>
#include <sstream>

#include "threshnet/dynamics.hpp"
#include "threshnet/errors.hpp"
#include "threshnet/oracle.hpp"
#include "threshnet/rng.hpp"

namespace threshnet {

namespace {

AdoptionVector random_bits(int n, SplitMix64& rng) {
    AdoptionVector v(n);
    for (int i = 0; i < n; ++i) v.set(i, rng.next() & 1);
    return v;
}

std::vector<int> random_seeds(int n, SplitMix64& rng) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
        if (rng.bounded(4) == 0) s.push_back(i);
    return s;
}

struct Tally {
    PropertyResult res;
    explicit Tally(std::string name) { res.name = std::move(name); }

    void check(bool ok, const std::string& hash, const char* detail) {
        ++res.checks;
        if (!ok) {
            ++res.violations;
            if (res.first_detail.empty())
                res.first_detail = "instance=" + hash + " " + detail;
        }
    }
};

long long min_of(const std::vector<long long>& v) { return *std::min_element(v.begin(), v.end()); }
long long max_of(const std::vector<long long>& v) { return *std::max_element(v.begin(), v.end()); }

}  // namespace

Instance gen_verify_instance(int index, const VerifyOptions& opt) {
    SplitMix64 rng = SplitMix64::substream(opt.rng_seed, static_cast<uint64_t>(index));
    int n = 1 + rng.below(opt.max_nodes);
    double p = 0.1 * static_cast<double>(index % 11);
    int wmax = opt.weighted ? 1 + rng.below(opt.weight_max) : 1;
    Instance inst;
    inst.net = gen_random(n, p, ThresholdDist::degree_plus_one(), wmax, rng.next());
    inst.x0 = random_bits(n, rng);
    return inst;
}

std::vector<PropertyResult> run_property_suite(const std::vector<Instance>& corpus,
                                               uint64_t rng_seed) {
    Tally cycle2("cycle_length_at_most_2");
    Tally agree("engine_matches_oracle");
    Tally tbound("transient_within_bound");
    Tally drop1("energy_strict_decrease");
    Tally drop2("energy_two_bit_decrease");
    Tally range("energy_range_within_4W");
    Tally onebit("one_bit_step_near_cycle");
    Tally mono("monotone_under_domination");
    Tally clampeq("clamp_equals_zero_thresholds");
    Tally growth("clamped_growth_and_release");
    Tally budget("operation_count_within_budget");
    Tally stable("all_ones_fixed_when_supported");
    Tally consistent("report_internally_consistent");

    SplitMix64 aux(rng_seed ^ 0x5eedULL);

    for (size_t ci = 0; ci < corpus.size(); ++ci) {
        const Instance& inst = corpus[ci];
        const Network& net = inst.net;
        const int n = net.n;
        const std::string hash = instance_hash_hex(inst);
        AdoptionVector x0 = inst.x0 ? *inst.x0 : AdoptionVector(n);
        SplitMix64 rng = SplitMix64::substream(rng_seed, static_cast<uint64_t>(ci));

        std::vector<std::optional<Intervention>> settings;
        if (inst.intervention) {
            settings.push_back(inst.intervention);
        } else {
            settings.push_back(std::nullopt);
            settings.push_back(Intervention{random_seeds(n, rng), SeedingMode::temporary()});
            settings.push_back(
                Intervention{random_seeds(n, rng), SeedingMode::fixed(1 + rng.below(5))});
        }

        for (const auto& iv : settings) {
            EvolveTrace tr;
            try {
                tr = evolve_traced(net, x0, iv);
            } catch (const BoundViolation&) {
                budget.check(false, hash, "evolve raised a bound violation");
                continue;
            }
            budget.check(true, hash, "");
            const ConvergenceReport& rep = tr.report;

            OracleResult orc = exact_limit_cycle(net, x0, iv);
            cycle2.check(orc.cycle_len() <= 2, hash, "oracle cycle longer than 2");
            agree.check(orc.transient == rep.transient_time && orc.cycle == rep.cycle, hash,
                        "transient or cycle mismatch");

            long long two_w = 2 * net.weight_sum;
            long long bound = two_w + n;
            if (iv) {
                bound = iv->mode.kind == SeedingMode::Kind::Temporary
                            ? 2 * (two_w + n)
                            : iv->mode.duration + two_w + n;
            }
            tbound.check(rep.transient_time <= bound, hash, "transient exceeds bound");

            std::optional<SeedingMode> mode;
            if (iv) mode = iv->mode;
            budget.check(rep.operation_count <= operation_budget(net, mode), hash,
                         "operation count above budget");

            // energy decrease laws over the free phase
            const auto& st = tr.states;
            const int s0 = tr.phase2_start;
            const auto& e = rep.energy_trace;  // e[j] = E(st[s0+j] -> st[s0+j+1])
            for (size_t j = 0; j + 1 < e.size(); ++j) {
                int a = s0 + static_cast<int>(j);
                int d = st[a].diff_count(st[a + 2]);
                if (d >= 1) drop1.check(e[j + 1] <= e[j] - 1, hash, "no unit energy decrease");
                if (d >= 2) drop2.check(e[j + 1] <= e[j] - 2, hash, "no double energy decrease");
                if (d == 1)
                    onebit.check(rep.transient_time <= a + 2 * n, hash,
                                 "one-bit step but entry too late");
            }
            // the 4W window needs every node able to both fire and idle;
            // b = 0 or b > wdeg nodes shift the energy outside it
            bool proper = true;
            for (int i = 0; i < n; ++i)
                proper = proper && net.thresholds[i] >= 1 && net.thresholds[i] <= net.wdegree[i];
            if (!e.empty() && proper)
                range.check(max_of(e) - min_of(e) <= 4 * net.weight_sum, hash,
                            "energy range above 4W");

            consistent.check(rep.cycle_len() >= 1 && rep.cycle_len() <= 2 &&
                                 rep.adoption_avg2 == rep.cycle.front().count() +
                                                          rep.cycle.back().count() &&
                                 rep.permanent_count ==
                                     (rep.cycle_len() == 1
                                          ? rep.cycle[0].count()
                                          : (rep.cycle[0] & rep.cycle[1]).count()),
                             hash, "report fields disagree with cycle states");

            if (iv && !iv->seeds.empty()) {
                // forcing seeds to 1 is the same system as zeroing their thresholds
                std::vector<int> thr = net.thresholds;
                for (int s : iv->seeds) thr[s] = 0;
                Network zeroed = build_network(n, thr, net.edges());
                AdoptionVector mask = seeds_to_mask(n, iv->seeds);
                AdoptionVector a = x0 | mask;
                AdoptionVector b = a;
                bool same = true;
                for (int t = 0; t < 2 * static_cast<int>(two_w) + 2 * n + 4 && same; ++t) {
                    a = step(net, a, mask);
                    b = step(zeroed, b);
                    same = a == b;
                }
                clampeq.check(same, hash, "clamped run differs from zero-threshold run");

                // from all-zeros the clamped system only grows, and is done by 2|V|
                AdoptionVector cur = mask;
                bool grew = true;
                for (int t = 0; t < n + 2 && grew; ++t) {
                    AdoptionVector nxt = step(net, cur, mask);
                    grew = cur.is_subset_of(nxt);
                    cur = nxt;
                }
                growth.check(grew, hash, "clamped trajectory not monotone from zeros");
                growth.check(release_time(net, AdoptionVector(n), iv->seeds) <= 2 * n, hash,
                             "release after 2|V| steps");
            }
        }

        // monotonicity: dominated starts stay dominated pointwise
        AdoptionVector hi = random_bits(n, aux);
        AdoptionVector lo = hi & random_bits(n, aux);
        AdoptionVector a = lo, b = hi;
        bool dominated = true;
        for (int t = 0; t < static_cast<int>(2 * net.weight_sum) + n + 4 && dominated; ++t) {
            dominated = a.is_subset_of(b);
            a = step(net, a);
            b = step(net, b);
        }
        mono.check(dominated, hash, "domination lost along trajectory");

        bool supported = true;
        for (int i = 0; i < n; ++i) supported = supported && net.wdegree[i] >= net.thresholds[i];
        if (supported) {
            AdoptionVector ones(n);
            for (int i = 0; i < n; ++i) ones.set(i, true);
            stable.check(step(net, ones) == ones, hash, "all-ones not fixed");
        }
    }

    return {cycle2.res, agree.res,  tbound.res, drop1.res,   drop2.res, range.res, onebit.res,
            mono.res,   clampeq.res, growth.res, budget.res,   stable.res, consistent.res};
}

std::vector<PropertyResult> run_property_suite(const VerifyOptions& opt) {
    std::vector<Instance> corpus;
    corpus.reserve(opt.instances);
    for (int i = 0; i < opt.instances; ++i) corpus.push_back(gen_verify_instance(i, opt));
    return run_property_suite(corpus, opt.rng_seed ^ 0x9e3779b9ULL);
}

}  // namespace threshnet
