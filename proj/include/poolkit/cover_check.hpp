#pragma once

#include <cstdint>
#include <vector>

#include "poolkit/design.hpp"

namespace poolkit {

/// Subsets of a base set B, held as masks over the local positions of B's
/// elements (|B| ≤ 20, enforced). Houses the private-set families of the
/// p = 2 cross-check.
struct CoverFamily {
    Bitset base;                  // B ⊆ {1..v}
    std::vector<uint32_t> sets;   // local masks, ascending
    std::vector<int> base_index;  // local position -> ground element (0-based)

    bool contains_mask(uint32_t m) const;
    /// Absolute-set view of one member, for reporting.
    Bitset to_absolute(uint32_t m) const;
};

inline constexpr int kCoverEnumerationCap = 20;

/// All b ⊆ B_i such that B_i is the unique family member containing b.
/// Members must be pairwise distinct (privacy is ill-posed otherwise).
CoverFamily private_sets(const SubsetFamily& dual, int member);

struct CoverViolation {
    enum class Kind { None, Closure, Partition };
    Kind kind = Kind::None;
    uint32_t b = 0, part1 = 0, part2 = 0;  // local masks; Closure uses b (in F) and part1 (missing superset)
};

/// (2,q)-cover check: upward closure within the base, and for every
/// b ⊆ base with |base \ b| ≤ q, every two-partition of b (unordered,
/// empty parts permitted) has a part in the family. Requires |base| > q.
bool is_2q_cover(const CoverFamily& f, int q, CoverViolation* violation = nullptr);

/// Independent p = 2 verifier: the design is a (2,q)-solution iff for
/// every member B_i the private sets form a (2,q)-cover of B_i.
SolutionWitness verify_via_lemma1(const SubsetFamily& dual, int q);
SolutionWitness verify_via_lemma1(const Design& d, int q);

}  // namespace poolkit
