#pragma once

#include <optional>
#include <vector>

#include "threshnet/intervention.hpp"
#include "threshnet/network.hpp"

namespace threshnet {

// Which state of the clamped system's limit cycle a temporary intervention
// releases from: the first-detected (entry) state, or its successor.
enum class ReleasePhase { First, Second };

enum class Objective { PermanentCount, AverageAdoption };

struct ConvergenceReport {
    int transient_time = 0;                // steps until the limit cycle is entered
    std::vector<AdoptionVector> cycle;     // 1 or 2 states; cycle[0] = x(transient_time)
    int steps_clamped = 0;                 // forced states, including t = 0
    std::vector<long long> energy_trace;   // scaled energy along the free phase
    long long operation_count = 0;         // weighted term evaluations (2W per step)
    int adoption_avg2 = 0;                 // twice the long-term average adoption
    int permanent_count = 0;               // nodes at 1 in every cycle state

    int cycle_len() const { return static_cast<int>(cycle.size()); }
    double long_term_average() const { return adoption_avg2 / 2.0; }
};

// Report plus the realized model sequence (through cycle detection) and the
// index where free evolution begins; what the trace output and the energy
// checks consume.
struct EvolveTrace {
    ConvergenceReport report;
    std::vector<AdoptionVector> states;
    int phase2_start = 0;
};

// One synchronous update: x'_i = [ sum_{j~i} w_ij x_j >= b_i ], then any
// clamped node is forced to 1.
AdoptionVector step(const Network& net, const AdoptionVector& x);
AdoptionVector step(const Network& net, const AdoptionVector& x, const AdoptionVector& clamped);
AdoptionVector step(const Network& net, const AdoptionVector& x, const std::vector<int>& clamped);

// Runs the dynamics to its limit cycle (provably length <= 2). With an
// intervention, x(0) = x0 OR seeds and the seeds are forced per the mode.
// Throws BoundViolation if a convergence bound or the operation budget is
// exceeded (which a correct engine never does).
EvolveTrace evolve_traced(const Network& net, const AdoptionVector& x0,
                          const std::optional<Intervention>& iv = std::nullopt,
                          ReleasePhase phase = ReleasePhase::First);

ConvergenceReport evolve(const Network& net, const AdoptionVector& x0,
                         const std::optional<Intervention>& iv = std::nullopt,
                         ReleasePhase phase = ReleasePhase::First);

// First step t at which the clamped system repeats (x(t) = x(t-1) or
// x(t) = x(t-2)): the moment a temporary clamp comes off.
int release_time(const Network& net, const AdoptionVector& x0, const std::vector<int>& seeds);

// Scaled energy of the transition x_t -> x_t1: <b', x_t> - <2 A x_t - b', x_t1>
// with b'_i = 2 b_i - 1. Integer-exact; twice the half-integer-threshold
// energy, so decrease margins become >= 1 / >= 2 and the range bound 4W.
long long scaled_energy(const Network& net, const AdoptionVector& x_t,
                        const AdoptionVector& x_t1);

// A-priori cap on operation_count: (step bound for the mode) * 2W, where the
// step bound is 2W+|V| free, 2(2W+|V|) temporary, d+2W+|V| fixed-duration.
long long operation_budget(const Network& net,
                           const std::optional<SeedingMode>& mode = std::nullopt);

double long_term_average_adoption(const Network& net, const AdoptionVector& x0,
                                  const std::optional<Intervention>& iv = std::nullopt,
                                  ReleasePhase phase = ReleasePhase::First);

int permanent_conversion_count(const Network& net, const AdoptionVector& x0,
                               const std::optional<Intervention>& iv = std::nullopt,
                               ReleasePhase phase = ReleasePhase::First);

// Seed-set quality under one objective: permanent count, or twice the
// average adoption (doubled so it stays an exact integer).
int objective_value(const Network& net, const AdoptionVector& x0, const std::vector<int>& seeds,
                    const SeedingMode& mode, Objective obj,
                    ReleasePhase phase = ReleasePhase::First);

AdoptionVector seeds_to_mask(int n, const std::vector<int>& seeds);

}  // namespace threshnet
