#include "poolkit/constructions.hpp"

#include <algorithm>
#include <map>

#include "poolkit/bounds.hpp"

namespace poolkit {

namespace {

// all k-subsets of {0..v-1} in lex order on sorted index tuples
void for_each_combination(int v, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    if (k > v || k < 0) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    for (;;) {
        if (fn(c)) return;
        int i = k - 1;
        while (i >= 0 && c[i] == v - k + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace

PackingCheck verify_packing(const SubsetFamily& f, int t, int k, int v) {
    if (!(0 <= t && t < k && k <= v)) throw std::invalid_argument("need 0 <= t < k <= v");
    if (f.ground_size != v)
        return {false, "ground size mismatch", -1, -1};
    for (int i = 0; i < f.size(); ++i)
        if (f.members[i].count() != k)
            return {false, "block size != k", i, -1};
    for (int i = 0; i < f.size(); ++i) {
        for (int j = i + 1; j < f.size(); ++j) {
            if (f.members[i] == f.members[j]) return {false, "duplicate block", i, j};
            if (f.members[i].intersect_count(f.members[j]) > t)
                return {false, "intersection exceeds t", i, j};
        }
    }
    return {};
}

bool is_steiner(const SubsetFamily& f, int t, int k, int v) {
    PackingCheck pc = verify_packing(f, t, k, v);
    if (!pc.ok) throw std::invalid_argument("not a (t,k,v)-packing: " + pc.reason);

    // size criterion: |P| · C(k,t+1) = C(v,t+1)
    bool by_count = BigInt(f.size()) * binom(k, t + 1) == binom(v, t + 1);

    // coverage criterion: every (t+1)-subset in exactly one block
    bool by_cover = true;
    for_each_combination(v, t + 1, [&](const std::vector<int>& c) {
        Bitset sub = Bitset::of(v, c);
        int hits = 0;
        for (const Bitset& b : f.members)
            if (b.contains(sub)) ++hits;
        if (hits != 1) {
            by_cover = false;
            return true;
        }
        return false;
    });

    if (by_count != by_cover)
        throw std::logic_error("Steiner criteria disagree (count vs coverage)");
    return by_count;
}

Design packing_to_design(const Packing& pk, int p, int q) {
    const int expected = p * pk.t + q + 1;
    if (pk.k != expected)
        throw std::invalid_argument("packing block size k = " + std::to_string(pk.k) +
                                    " but (p,q) = (" + std::to_string(p) + "," +
                                    std::to_string(q) + ") with t = " + std::to_string(pk.t) +
                                    " requires k = " + std::to_string(expected));
    return design_from_dual(pk.blocks);
}

SubsetFamily sperner_family(int v) {
    if (v < 1) throw std::invalid_argument("v must be >= 1");
    const int layer = v == 1 ? 1 : v / 2;
    SubsetFamily f(v);
    for_each_combination(v, layer, [&](const std::vector<int>& c) {
        f.members.push_back(Bitset::of(v, c));
        return false;
    });
    return f;
}

Design sperner_design(int v) { return design_from_dual(sperner_family(v)); }

namespace {

Packing make_catalog_packing(int v, int t, int k, std::vector<std::vector<int>> blocks) {
    Packing pk;
    pk.v = v;
    pk.t = t;
    pk.k = k;
    pk.blocks = SubsetFamily::from_lists(v, blocks);
    return pk;
}

}  // namespace

Packing steiner_catalog(const std::string& name) {
    if (name == "S(2,3,7)") {
        // Fano plane
        return make_catalog_packing(7, 1, 3,
                                    {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5},
                                     {2, 6, 7}, {3, 4, 6}, {4, 5, 7}});
    }
    if (name == "S(2,3,9)") {
        // lines of the 3x3 affine plane
        return make_catalog_packing(9, 1, 3,
                                    {{1, 2, 3}, {1, 4, 7}, {1, 5, 9}, {1, 6, 8},
                                     {2, 4, 9}, {2, 5, 8}, {2, 6, 7}, {3, 4, 8},
                                     {3, 5, 7}, {3, 6, 9}, {4, 5, 6}, {7, 8, 9}});
    }
    if (name == "S(3,4,8)") {
        // extension of the Fano plane: each line plus the new point,
        // together with the line complements
        return make_catalog_packing(8, 2, 4,
                                    {{1, 2, 3, 6}, {1, 2, 4, 8}, {1, 2, 5, 7}, {1, 3, 4, 5},
                                     {1, 3, 7, 8}, {1, 4, 6, 7}, {1, 5, 6, 8}, {2, 3, 4, 7},
                                     {2, 3, 5, 8}, {2, 4, 5, 6}, {2, 6, 7, 8}, {3, 4, 6, 8},
                                     {3, 5, 6, 7}, {4, 5, 7, 8}});
    }
    throw std::invalid_argument("unknown Steiner system '" + name +
                                "'; known: S(2,3,7), S(2,3,9), S(3,4,8)");
}

std::vector<std::string> steiner_catalog_names() {
    return {"S(2,3,7)", "S(2,3,9)", "S(3,4,8)"};
}

Packing bose_sts(int v) {
    if (v < 3 || v % 6 != 3) throw std::invalid_argument("Bose construction needs v ≡ 3 (mod 6)");
    const int m = (v - 3) / 6;
    const int g = 2 * m + 1;  // points are (x, c) with x in Z_g, c in {0,1,2}
    auto pt = [&](int x, int c) { return ((x % g + g) % g) + c * g; };  // 0-based
    std::vector<std::vector<int>> blocks;
    for (int x = 0; x < g; ++x)
        blocks.push_back({pt(x, 0) + 1, pt(x, 1) + 1, pt(x, 2) + 1});
    // idempotent commutative quasigroup on Z_g: x∘y = (x+y)(m+1) mod g
    for (int x = 0; x < g; ++x)
        for (int y = x + 1; y < g; ++y) {
            int z = int((long long)(x + y) * (m + 1) % g);
            for (int c = 0; c < 3; ++c)
                blocks.push_back({pt(x, c) + 1, pt(y, c) + 1, pt(z, (c + 1) % 3) + 1});
        }
    for (auto& b : blocks) std::sort(b.begin(), b.end());
    std::sort(blocks.begin(), blocks.end());
    return make_catalog_packing(v, 1, 3, std::move(blocks));
}

Packing greedy_packing(int v, int k, int t) {
    if (!(0 <= t && t < k && k <= v)) throw std::invalid_argument("need 0 <= t < k <= v");
    Packing pk;
    pk.v = v;
    pk.t = t;
    pk.k = k;
    pk.blocks = SubsetFamily(v);
    for_each_combination(v, k, [&](const std::vector<int>& c) {
        Bitset cand = Bitset::of(v, c);
        for (const Bitset& b : pk.blocks.members)
            if (b.intersect_count(cand) > t) return false;
        pk.blocks.members.push_back(std::move(cand));
        return false;
    });
    return pk;
}

}  // namespace poolkit
