#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poolkit/design.hpp"

namespace poolkit {

/// A (t,k,v)-packing: distinct k-subsets of {1..v} with pairwise
/// intersections of size at most t.
struct Packing {
    int v = 0;
    int t = 0;
    int k = 0;
    SubsetFamily blocks;
};

struct PackingCheck {
    bool ok = true;
    std::string reason;      // empty when ok
    int block_a = -1;        // offending block index(es), 0-based
    int block_b = -1;
};

PackingCheck verify_packing(const SubsetFamily& f, int t, int k, int v);

/// True iff the packing is a Steiner system S(t+1,k,v). Checks both the
/// size formula |P| = C(v,t+1)/C(k,t+1) and exact coverage of every
/// (t+1)-subset, and insists the two agree.
bool is_steiner(const SubsetFamily& f, int t, int k, int v);

/// Dual-transpose a packing with k = p·t + q + 1 into a design; such a
/// design is a (p,q)-solution. Throws when the parameter relation fails.
Design packing_to_design(const Packing& pk, int p, int q);

/// All ⌊v/2⌋-subsets of {1..v} as the dual; the maximum antichain, optimal
/// for (p,q) = (1,0). v = 1 uses the singleton layer (the empty layer is
/// not a solution).
Design sperner_design(int v);
SubsetFamily sperner_family(int v);

/// Hard-coded small Steiner systems: S(2,3,7), S(2,3,9), S(3,4,8).
/// Blocks and elements are sorted so goldens are bit-stable.
Packing steiner_catalog(const std::string& name);
std::vector<std::string> steiner_catalog_names();

/// Bose construction of a Steiner triple system, v ≡ 3 (mod 6).
Packing bose_sts(int v);

/// Deterministic lexicographic greedy packing: scan k-subsets in lex
/// order, keep a block iff it meets every kept block in ≤ t points.
Packing greedy_packing(int v, int k, int t);

}  // namespace poolkit
