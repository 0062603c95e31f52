#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "poolkit/design.hpp"

namespace poolkit {

enum class PoolState : uint8_t { Good, Bad, Failed };

/// Observed per-pool outcomes. String form: one char per pool,
/// `0` Good, `1` Bad, `x` Failed.
struct Outcome {
    std::vector<PoolState> states;

    int size() const { return int(states.size()); }
    static Outcome parse(const std::string& s);
    std::string str() const;

    Bitset bad_mask() const;
    Bitset failed_mask() const;
    bool has_failed() const;
};

struct FailureBudgetError : std::runtime_error {
    FailureBudgetError(int failed, int budget)
        : std::runtime_error("observed " + std::to_string(failed) +
                             " failed pools, budget q = " + std::to_string(budget)),
          failed(failed), budget(budget) {}
    int failed, budget;
};

struct DecodeResult {
    enum class Kind { Identified, ExceedsP, Anomaly, AmbiguousDesign };
    Kind kind = Kind::ExceedsP;
    Bitset identified;                            // Identified: the bad set, |A| ≤ p
    std::vector<std::pair<Bitset, int>> nearest;  // Anomaly: (candidate, |φ(A) Δ O|), 1..q
    std::vector<Bitset> candidates;               // AmbiguousDesign

    bool is_identified(const Bitset& a) const {
        return kind == Kind::Identified && identified == a;
    }
};

/// Failure model: up to q pools report Failed; the rest are definitive.
/// A candidate A (|A| ≤ p) is consistent iff φ(A) agrees with the outcome
/// on every non-Failed pool. Throws FailureBudgetError when more than q
/// pools failed.
DecodeResult decode_failures(const SubsetFamily& dual, const Outcome& o, int p, int q);

/// Error-detection model: every pool reports a definite (possibly wrong)
/// outcome. An exact φ(A) = O match identifies A under the ≤ q error
/// assumption; otherwise the result is an Anomaly listing candidates
/// within Hamming distance q as diagnostics, never conclusions.
DecodeResult decode_errors(const SubsetFamily& dual, const Outcome& o, int p, int q);

enum class SimMode { Failures, Errors };

struct TruthProfile {
    enum class Kind { Uniform, FixedSize, Adversarial };
    Kind kind = Kind::Uniform;
    int fixed_size = 0;  // FixedSize only

    static TruthProfile uniform() { return {Kind::Uniform, 0}; }
    static TruthProfile fixed(int s) { return {Kind::FixedSize, s}; }
    static TruthProfile adversarial() { return {Kind::Adversarial, 0}; }
};

struct SimulationReport {
    uint64_t trials = 0;
    uint64_t identified_correct = 0;
    uint64_t exceeds_p_reported = 0;
    uint64_t anomalies = 0;
    uint64_t misidentifications = 0;
    uint64_t seed = 0;
};

/// Seeded Monte Carlo: each trial draws a truth set per the profile, a
/// failure set (or flip set) of size ≤ q, synthesizes the outcome,
/// decodes and tallies. Per-trial substreams are derived from
/// (seed, trial index) so reports are reproducible. Refuses designs that
/// fail verification at (p,q) unless `force`.
SimulationReport simulate_trials(const SubsetFamily& dual, int p, int q, SimMode mode,
                                 uint64_t trials, uint64_t seed, TruthProfile profile,
                                 bool force = false);

}  // namespace poolkit
