#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "poolkit/bitset.hpp"

namespace poolkit {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

struct EnumerationCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Indexed family of subsets of a v-element ground set. Member i is the
/// per-object pool set B_i when the family is the dual of a design; it is
/// a block list when the family is a packing. Order is significant and
/// duplicate members are representable.
struct SubsetFamily {
    int ground_size = 0;
    std::vector<Bitset> members;

    SubsetFamily() = default;
    explicit SubsetFamily(int v) : ground_size(v) {}
    SubsetFamily(int v, std::vector<Bitset> m) : ground_size(v), members(std::move(m)) {
        for (const Bitset& b : members)
            if (b.capacity() != v) throw std::invalid_argument("member width != ground size");
    }
    /// 1-based element lists, as in all external formats.
    static SubsetFamily from_lists(int v, const std::vector<std::vector<int>>& lists);

    int size() const { return int(members.size()); }
    bool has_duplicate_members() const;
};

/// v pools over objects {1..n}; pool j holds the objects tested together.
/// Pools are pairwise distinct (a design is a set of pools).
class Design {
public:
    Design(int n, std::vector<Bitset> pools);
    static Design from_lists(int n, const std::vector<std::vector<int>>& pools);

    int num_pools() const { return int(pools_.size()); }
    int num_objects() const { return n_; }
    const std::vector<Bitset>& pools() const { return pools_; }

private:
    int n_;
    std::vector<Bitset> pools_;
};

/// Per-object view: member i = set of pools containing object i.
SubsetFamily dualize(const Design& d);

/// Transpose a family back into a design (objects and pools swapped).
/// Throws if two pools coincide, since a design is a set of pools.
Design design_from_dual(const SubsetFamily& dual);

/// Bad-pool pattern when exactly the objects in `bad` are bad.
Bitset phi(const SubsetFamily& dual, const Bitset& bad);
Bitset phi(const SubsetFamily& dual, const std::vector<int>& bad_1based);

struct SolutionWitness {
    struct Counterexample {
        Bitset bad_objects;  // A, over objects (0-based internally)
        int object;          // i ∉ A (0-based)
        Bitset deficit;      // B_i \ φ(A), of size ≤ q
    };
    struct OraclePair {
        Bitset a;        // |a| ≤ p
        Bitset a_prime;  // unrestricted
    };
    bool ok = false;
    std::optional<Counterexample> counterexample;
    std::optional<OraclePair> oracle_pair;

    static SolutionWitness pass() { return {true, std::nullopt, std::nullopt}; }
};

/// Direct (p,q)-solution check: for every A with |A| ≤ p and every i ∉ A,
/// |B_i \ φ(A)| > q. A is enumerated by cardinality then lexicographically
/// on sorted indices; the first counterexample in that order is returned.
SolutionWitness verify_solution(const SubsetFamily& dual, int p, int q);
SolutionWitness verify_solution(const Design& d, int p, int q);

/// Independent oracle via the defining condition: |φ(A) Δ φ(A')| > q for
/// all A ≠ A' with |A| ≤ p and A' unrestricted. Enumerates every subset
/// pair; refuses when Σ_{a≤p} C(n,a) · 2^n exceeds the cap below.
SolutionWitness verify_solution_oracle(const SubsetFamily& dual, int p, int q);
SolutionWitness verify_solution_oracle(const Design& d, int p, int q);

inline constexpr uint64_t kOracleCapPairs = uint64_t{1} << 26;

/// p = 1 shortcut: |B_i| > q for all i and |B \ B'| > q for all ordered
/// pairs of distinct members.
SolutionWitness verify_p1(const SubsetFamily& dual, int q);
SolutionWitness verify_p1(const Design& d, int q);

/// Enumerate all object sets A with |A| ≤ p by cardinality then lex order,
/// with φ(A) maintained incrementally. Callback returns true to stop.
void for_each_candidate(const SubsetFamily& dual, int p,
                        const std::function<bool(const Bitset& a, const Bitset& phi_a)>& fn);

/// Restrict every member to the pools not in `removed`, reindexing the
/// ground set. Models deleting failed pools from a design.
SubsetFamily restrict_family(const SubsetFamily& f, const Bitset& removed_pools);

}  // namespace poolkit
