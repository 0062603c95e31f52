#pragma once

#include <cstdint>
#include <vector>

#include "poolkit/design.hpp"

namespace poolkit {

struct SearchResult {
    int n_max = 0;
    SubsetFamily witness;
    bool certified = false;  // search space exhausted (possibly via bound pruning)
    uint64_t nodes = 0;
    uint64_t budget = 0;
};

inline constexpr uint64_t kDefaultNodeBudget = 10'000'000;

/// True iff f ∪ {c} is still the dual of a (p,q)-solution, given that f
/// already is. Only the conditions involving c are evaluated.
bool extension_feasible(const SubsetFamily& f, const Bitset& c, int p, int q);

/// All C ⊆ {1..v} lexicographically after the last member of f (all
/// subsets when f is empty) that keep f a solution dual, in lex order.
std::vector<Bitset> extend_candidates(const SubsetFamily& f, int p, int q);

/// Exhaustive branch-and-bound for the maximum solution-dual size at
/// (v,p,q). DFS in lex order over families; prunes on remaining-candidate
/// count and, for p ∈ {1,2}, on the exact module bounds. The witness is
/// the lex-least maximum family. Desk scale only.
SearchResult max_design_search(int v, int p, int q, uint64_t node_budget = kDefaultNodeBudget);

}  // namespace poolkit
