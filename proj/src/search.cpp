#include "poolkit/search.hpp"

#include <functional>

#include "poolkit/bounds.hpp"

namespace poolkit {

bool extension_feasible(const SubsetFamily& f, const Bitset& c, int p, int q) {
    if (c.capacity() != f.ground_size) throw std::invalid_argument("candidate width != v");
    const int n = f.size();
    bool ok = true;
    // For S a set of existing members with |S| ≤ p:
    //   |c \ φ(S)| > q                       (c is the odd one out)
    //   |B_i \ (φ(S) ∪ c)| > q for i ∉ S     when |S| ≤ p−1 (c joins the union)
    std::vector<int> chosen;
    std::function<bool(int, const Bitset&)> rec = [&](int first, const Bitset& acc) -> bool {
        if (c.minus_count(acc) <= q) return true;  // violation found
        if (int(chosen.size()) <= p - 1) {
            Bitset with_c = acc;
            with_c |= c;
            for (int i = 0; i < n; ++i) {
                bool in_s = false;
                for (int s : chosen)
                    if (s == i) { in_s = true; break; }
                if (in_s) continue;
                if (f.members[i].minus_count(with_c) <= q) return true;
            }
        }
        if (int(chosen.size()) == p) return false;
        for (int i = first; i < n; ++i) {
            chosen.push_back(i);
            Bitset next = acc;
            next |= f.members[i];
            bool bad = rec(i + 1, next);
            chosen.pop_back();
            if (bad) return true;
        }
        return false;
    };
    ok = !rec(0, Bitset(f.ground_size));
    return ok;
}

namespace {

// all subsets of {0..v-1} in sorted-index-sequence lex order
void for_each_subset_lex(int v, const std::function<void(const Bitset&)>& fn) {
    Bitset cur(v);
    std::function<void(int)> rec = [&](int first) {
        fn(cur);
        for (int i = first; i < v; ++i) {
            cur.set(i);
            rec(i + 1);
            cur.reset(i);
        }
    };
    rec(0);
}

}  // namespace

std::vector<Bitset> extend_candidates(const SubsetFamily& f, int p, int q) {
    std::vector<Bitset> out;
    const bool empty = f.members.empty();
    const Bitset* last = empty ? nullptr : &f.members.back();
    for_each_subset_lex(f.ground_size, [&](const Bitset& c) {
        if (!empty && !last->lex_less(c)) return;
        if (empty && c.none()) return;  // ∅ never satisfies |C| > q
        if (extension_feasible(f, c, p, q)) out.push_back(c);
    });
    return out;
}

SearchResult max_design_search(int v, int p, int q, uint64_t node_budget) {
    if (v < 1 || p < 0 || q < 0) throw std::invalid_argument("need v >= 1, p,q >= 0");
    SearchResult res;
    res.budget = node_budget;
    res.certified = true;
    res.witness = SubsetFamily(v);

    // exact upper bound for early termination, when one is available
    long long hard_bound = -1;
    try {
        if (p == 1) hard_bound = (long long)upper_bound_p1(v, q).n_max;
        else if (p == 2) hard_bound = (long long)upper_bound_p2(v, q).n_max;
    } catch (const DegenerateBoundError&) {
        hard_bound = -1;
    }

    SubsetFamily cur(v);
    bool aborted = false;

    std::function<void(const std::vector<Bitset>&)> dfs = [&](const std::vector<Bitset>& cands) {
        if (aborted) return;
        if (++res.nodes > node_budget) {
            aborted = true;
            return;
        }
        if (cur.size() > res.n_max) {
            res.n_max = cur.size();
            res.witness = cur;
        }
        if (hard_bound >= 0 && res.n_max >= hard_bound) return;  // provably optimal
        if (cur.size() + int(cands.size()) <= res.n_max) return;  // cannot beat incumbent
        for (size_t k = 0; k < cands.size(); ++k) {
            cur.members.push_back(cands[k]);
            std::vector<Bitset> next;
            next.reserve(cands.size() - k - 1);
            for (size_t m = k + 1; m < cands.size(); ++m)
                if (extension_feasible(cur, cands[m], p, q)) next.push_back(cands[m]);
            dfs(next);
            cur.members.pop_back();
            if (aborted) return;
            if (hard_bound >= 0 && res.n_max >= hard_bound) return;
            if (cur.size() + int(cands.size() - k - 1) <= res.n_max) return;
        }
    };

    dfs(extend_candidates(cur, p, q));
    res.certified = !aborted;
    return res;
}

}  // namespace poolkit
