#include "poolkit/decoder.hpp"

#include <algorithm>
#include <random>

namespace poolkit {

Outcome Outcome::parse(const std::string& s) {
    Outcome o;
    o.states.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '0': o.states.push_back(PoolState::Good); break;
            case '1': o.states.push_back(PoolState::Bad); break;
            case 'x': o.states.push_back(PoolState::Failed); break;
            default:
                throw std::invalid_argument(std::string("bad outcome char '") + c +
                                            "' (want 0, 1 or x)");
        }
    }
    return o;
}

std::string Outcome::str() const {
    std::string s;
    s.reserve(states.size());
    for (PoolState st : states)
        s += st == PoolState::Good ? '0' : st == PoolState::Bad ? '1' : 'x';
    return s;
}

Bitset Outcome::bad_mask() const {
    Bitset b(size());
    for (int j = 0; j < size(); ++j)
        if (states[j] == PoolState::Bad) b.set(j);
    return b;
}

Bitset Outcome::failed_mask() const {
    Bitset b(size());
    for (int j = 0; j < size(); ++j)
        if (states[j] == PoolState::Failed) b.set(j);
    return b;
}

bool Outcome::has_failed() const { return failed_mask().any(); }

DecodeResult decode_failures(const SubsetFamily& dual, const Outcome& o, int p, int q) {
    if (o.size() != dual.ground_size)
        throw std::invalid_argument("outcome length " + std::to_string(o.size()) +
                                    " != v = " + std::to_string(dual.ground_size));
    const Bitset failed = o.failed_mask();
    const Bitset bad = o.bad_mask();
    const int nf = failed.count();
    if (nf > q) throw FailureBudgetError(nf, q);

    std::vector<Bitset> consistent;
    for_each_candidate(dual, p, [&](const Bitset& a, const Bitset& phi_a) {
        // consistent iff every disagreement with φ(A) sits on a failed pool
        Bitset disagree = phi_a.minus(bad) | bad.minus(phi_a);
        if (failed.contains(disagree)) consistent.push_back(a);
        return false;
    });

    DecodeResult r;
    if (consistent.size() == 1) {
        r.kind = DecodeResult::Kind::Identified;
        r.identified = consistent.front();
    } else if (consistent.empty()) {
        r.kind = DecodeResult::Kind::ExceedsP;
    } else {
        r.kind = DecodeResult::Kind::AmbiguousDesign;
        r.candidates = std::move(consistent);
    }
    return r;
}

DecodeResult decode_errors(const SubsetFamily& dual, const Outcome& o, int p, int q) {
    if (o.size() != dual.ground_size)
        throw std::invalid_argument("outcome length " + std::to_string(o.size()) +
                                    " != v = " + std::to_string(dual.ground_size));
    if (o.has_failed())
        throw std::invalid_argument("error model records definite outcomes; Failed entry present");
    const Bitset observed = o.bad_mask();

    std::vector<Bitset> exact;
    std::vector<std::pair<Bitset, int>> near;
    for_each_candidate(dual, p, [&](const Bitset& a, const Bitset& phi_a) {
        int dist = phi_a.sym_diff_count(observed);
        if (dist == 0)
            exact.push_back(a);
        else if (dist <= q)
            near.emplace_back(a, dist);
        return false;
    });

    DecodeResult r;
    if (exact.size() == 1) {
        r.kind = DecodeResult::Kind::Identified;
        r.identified = exact.front();
    } else if (exact.size() > 1) {
        r.kind = DecodeResult::Kind::AmbiguousDesign;
        r.candidates = std::move(exact);
    } else {
        r.kind = DecodeResult::Kind::Anomaly;
        std::stable_sort(near.begin(), near.end(),
                         [](const auto& a, const auto& b) { return a.second < b.second; });
        r.nearest = std::move(near);
    }
    return r;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// uniform k-subset of {0..n-1}
Bitset random_subset(std::mt19937_64& rng, int n, int k) {
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    Bitset b(n);
    for (int i = 0; i < k; ++i) {
        std::uniform_int_distribution<int> d(i, n - 1);
        std::swap(idx[i], idx[d(rng)]);
        b.set(idx[i]);
    }
    return b;
}

Bitset draw_truth(std::mt19937_64& rng, int n, int p, const TruthProfile& profile) {
    int size = 0;
    switch (profile.kind) {
        case TruthProfile::Kind::Uniform: {
            // uniform over all sets of size ≤ p: pick the size with weight
            // C(n,a), then a uniform subset of that size
            std::vector<double> w;
            double c = 1;
            for (int a = 0; a <= std::min(p, n); ++a) {
                w.push_back(c);
                c = c * (n - a) / (a + 1);
            }
            std::discrete_distribution<int> d(w.begin(), w.end());
            size = d(rng);
            break;
        }
        case TruthProfile::Kind::FixedSize: size = profile.fixed_size; break;
        case TruthProfile::Kind::Adversarial: size = p + 1; break;
    }
    if (size > n) throw std::invalid_argument("truth size exceeds object count");
    return random_subset(rng, n, size);
}

}  // namespace

SimulationReport simulate_trials(const SubsetFamily& dual, int p, int q, SimMode mode,
                                 uint64_t trials, uint64_t seed, TruthProfile profile,
                                 bool force) {
    if (!force && !verify_solution(dual, p, q).ok)
        throw std::runtime_error("design fails verification at (p,q); pass force to simulate anyway");

    SimulationReport rep;
    rep.trials = trials;
    rep.seed = seed;
    const int n = dual.size();
    const int v = dual.ground_size;

    for (uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(t)));
        Bitset truth = draw_truth(rng, n, p, profile);
        Bitset pattern = phi(dual, truth);

        DecodeResult res;
        if (mode == SimMode::Failures) {
            std::uniform_int_distribution<int> dq(0, q);
            Bitset failed = random_subset(rng, v, dq(rng));
            Outcome o;
            o.states.resize(v);
            for (int j = 0; j < v; ++j)
                o.states[j] = failed.test(j)   ? PoolState::Failed
                              : pattern.test(j) ? PoolState::Bad
                                                : PoolState::Good;
            res = decode_failures(dual, o, p, q);
        } else {
            std::uniform_int_distribution<int> dq(0, q);
            Bitset flips = random_subset(rng, v, dq(rng));
            Outcome o;
            o.states.resize(v);
            for (int j = 0; j < v; ++j) {
                bool bad = pattern.test(j) != flips.test(j);
                o.states[j] = bad ? PoolState::Bad : PoolState::Good;
            }
            res = decode_errors(dual, o, p, q);
        }

        switch (res.kind) {
            case DecodeResult::Kind::Identified:
                if (res.identified == truth)
                    ++rep.identified_correct;
                else
                    ++rep.misidentifications;
                break;
            case DecodeResult::Kind::ExceedsP: ++rep.exceeds_p_reported; break;
            case DecodeResult::Kind::Anomaly:
            case DecodeResult::Kind::AmbiguousDesign: ++rep.anomalies; break;
        }
    }
    return rep;
}

}  // namespace poolkit
