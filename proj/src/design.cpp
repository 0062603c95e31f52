#include "poolkit/design.hpp"

#include <algorithm>
#include <cmath>

namespace poolkit {

SubsetFamily SubsetFamily::from_lists(int v, const std::vector<std::vector<int>>& lists) {
    if (v < 1) throw std::invalid_argument("ground size must be >= 1");
    SubsetFamily f(v);
    f.members.reserve(lists.size());
    for (const auto& lst : lists) {
        Bitset b(v);
        for (int e : lst) {
            if (e < 1 || e > v) throw std::invalid_argument("element out of range 1..v");
            b.set(e - 1);
        }
        f.members.push_back(std::move(b));
    }
    return f;
}

bool SubsetFamily::has_duplicate_members() const {
    std::vector<Bitset> sorted = members;
    std::sort(sorted.begin(), sorted.end(),
              [](const Bitset& a, const Bitset& b) { return a.word_less(b); });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1]) return true;
    return false;
}

Design::Design(int n, std::vector<Bitset> pools) : n_(n), pools_(std::move(pools)) {
    if (n_ < 1) throw std::invalid_argument("design needs n >= 1 objects");
    if (pools_.empty()) throw std::invalid_argument("design needs v >= 1 pools");
    for (const Bitset& p : pools_)
        if (p.capacity() != n_) throw std::invalid_argument("pool width != object count");
    std::vector<Bitset> sorted = pools_;
    std::sort(sorted.begin(), sorted.end(),
              [](const Bitset& a, const Bitset& b) { return a.word_less(b); });
    for (size_t i = 1; i < sorted.size(); ++i)
        if (sorted[i] == sorted[i - 1])
            throw std::invalid_argument("pools must be pairwise distinct");
}

Design Design::from_lists(int n, const std::vector<std::vector<int>>& pools) {
    std::vector<Bitset> ps;
    ps.reserve(pools.size());
    for (const auto& lst : pools) {
        Bitset b(n);
        for (int e : lst) {
            if (e < 1 || e > n) throw std::invalid_argument("object index out of range 1..n");
            b.set(e - 1);
        }
        ps.push_back(std::move(b));
    }
    return Design(n, std::move(ps));
}

SubsetFamily dualize(const Design& d) {
    const int v = d.num_pools();
    const int n = d.num_objects();
    SubsetFamily f(v);
    f.members.assign(n, Bitset(v));
    for (int j = 0; j < v; ++j)
        for (int i : d.pools()[j].indices()) f.members[i].set(j);
    return f;
}

Design design_from_dual(const SubsetFamily& dual) {
    const int v = dual.ground_size;
    const int n = dual.size();
    if (n < 1) throw std::invalid_argument("dual family must be nonempty");
    std::vector<Bitset> pools(v, Bitset(n));
    for (int i = 0; i < n; ++i)
        for (int j : dual.members[i].indices()) pools[j].set(i);
    return Design(n, std::move(pools));
}

Bitset phi(const SubsetFamily& dual, const Bitset& bad) {
    if (bad.capacity() != dual.size())
        throw std::invalid_argument("bad-set width != number of objects");
    Bitset u(dual.ground_size);
    for (int i : bad.indices()) u |= dual.members[i];
    return u;
}

Bitset phi(const SubsetFamily& dual, const std::vector<int>& bad_1based) {
    Bitset b(dual.size());
    for (int i : bad_1based) {
        if (i < 1 || i > dual.size()) throw std::out_of_range("object index out of range 1..n");
        b.set(i - 1);
    }
    return phi(dual, b);
}

void for_each_candidate(const SubsetFamily& dual, int p,
                        const std::function<bool(const Bitset&, const Bitset&)>& fn) {
    const int n = dual.size();
    Bitset a(n);
    Bitset phi_a(dual.ground_size);
    // combinations of fixed cardinality in lex order, unions built incrementally
    std::function<bool(int, int, const Bitset&)> rec = [&](int remaining, int first,
                                                           const Bitset& acc) -> bool {
        if (remaining == 0) return fn(a, acc);
        for (int i = first; i <= n - remaining; ++i) {
            a.set(i);
            Bitset next = acc;
            next |= dual.members[i];
            bool stop = rec(remaining - 1, i + 1, next);
            a.reset(i);
            if (stop) return true;
        }
        return false;
    };
    for (int card = 0; card <= p && card <= n; ++card)
        if (rec(card, 0, phi_a)) return;
}

SolutionWitness verify_solution(const SubsetFamily& dual, int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("p and q must be >= 0");
    const int n = dual.size();
    SolutionWitness w = SolutionWitness::pass();
    for_each_candidate(dual, p, [&](const Bitset& a, const Bitset& phi_a) {
        for (int i = 0; i < n; ++i) {
            if (a.test(i)) continue;
            if (dual.members[i].minus_count(phi_a) <= q) {
                w.ok = false;
                w.counterexample = {a, i, dual.members[i].minus(phi_a)};
                return true;
            }
        }
        return false;
    });
    return w;
}

SolutionWitness verify_solution(const Design& d, int p, int q) {
    return verify_solution(dualize(d), p, q);
}

SolutionWitness verify_solution_oracle(const SubsetFamily& dual, int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("p and q must be >= 0");
    const int n = dual.size();
    if (n >= 60) throw EnumerationCapError("oracle refuses n >= 60");
    // pair-evaluation budget: Σ_{a≤p} C(n,a) · 2^n
    long double small = 0;
    long double c = 1;
    for (int a = 0; a <= p; ++a) {
        small += c;
        c = c * (n - a) / (a + 1);
    }
    long double pairs = small * std::pow(2.0L, (long double)n);
    if (pairs > (long double)kOracleCapPairs)
        throw EnumerationCapError("oracle pair budget exceeded (cap 2^26 pair evaluations)");

    // collect all small A with their φ, in the canonical order
    std::vector<std::pair<Bitset, Bitset>> smalls;
    for_each_candidate(dual, p, [&](const Bitset& a, const Bitset& phi_a) {
        smalls.emplace_back(a, phi_a);
        return false;
    });

    SolutionWitness w = SolutionWitness::pass();
    // enumerate every A' ⊆ {1..n} with incremental φ and compare against
    // each small A
    Bitset a2(n);
    std::function<bool(int, const Bitset&)> rec = [&](int first, const Bitset& acc) -> bool {
        for (const auto& [a, phi_a] : smalls) {
            if (a == a2) continue;
            if (phi_a.sym_diff_count(acc) <= q) {
                w.ok = false;
                w.oracle_pair = {a, a2};
                return true;
            }
        }
        for (int i = first; i < n; ++i) {
            a2.set(i);
            Bitset next = acc;
            next |= dual.members[i];
            bool stop = rec(i + 1, next);
            a2.reset(i);
            if (stop) return true;
        }
        return false;
    };
    rec(0, Bitset(dual.ground_size));
    return w;
}

SolutionWitness verify_solution_oracle(const Design& d, int p, int q) {
    return verify_solution_oracle(dualize(d), p, q);
}

SolutionWitness verify_p1(const SubsetFamily& dual, int q) {
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    const int n = dual.size();
    SolutionWitness w = SolutionWitness::pass();
    // A = ∅ case of the solution condition
    for (int i = 0; i < n; ++i) {
        if (dual.members[i].count() <= q) {
            w.ok = false;
            w.counterexample = {Bitset(n), i, dual.members[i]};
            return w;
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i == j) continue;
            if (dual.members[i].minus_count(dual.members[j]) <= q) {
                Bitset a(n);
                a.set(j);
                w.ok = false;
                w.counterexample = {a, i, dual.members[i].minus(dual.members[j])};
                return w;
            }
        }
    }
    return w;
}

SolutionWitness verify_p1(const Design& d, int q) { return verify_p1(dualize(d), q); }

SubsetFamily restrict_family(const SubsetFamily& f, const Bitset& removed_pools) {
    if (removed_pools.capacity() != f.ground_size)
        throw std::invalid_argument("removal mask width != ground size");
    std::vector<int> keep;
    for (int j = 0; j < f.ground_size; ++j)
        if (!removed_pools.test(j)) keep.push_back(j);
    SubsetFamily out(int(keep.size()));
    out.members.reserve(f.members.size());
    for (const Bitset& m : f.members) {
        Bitset b(int(keep.size()));
        for (size_t k = 0; k < keep.size(); ++k)
            if (m.test(keep[k])) b.set(int(k));
        out.members.push_back(std::move(b));
    }
    return out;
}

}  // namespace poolkit
