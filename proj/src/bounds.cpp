#include "poolkit/bounds.hpp"

#include <cmath>

namespace poolkit {

BigInt binom(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

ChainWeight kq(int v, int q) {
    if (v < 1) throw std::invalid_argument("v must be >= 1");
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    const long long lo = v / 2, hi = v - lo;
    BigRat even_part = 0;
    for (int s = 0; s <= q / 2; ++s) even_part += BigRat(binom(lo, s) * binom(hi, s));
    if (q % 2 == 0) return {even_part, 0};
    const long long span = 2 * lo / (q + 1);
    if (span == 0)
        throw DegenerateBoundError("T = 0: q + 1 exceeds 2*floor(v/2), bound formula degenerate");
    const long long s = (q + 1) / 2;
    BigRat odd_term(binom(lo, s) * binom(hi, s), BigInt(span));
    return {even_part + odd_term, span};
}

TStar tstar(int v, int q) {
    if (v < 1) throw std::invalid_argument("v must be >= 1");
    if (q < 0) throw std::invalid_argument("q must be >= 0");
    TStar r;
    // v(t+q) ≤ (5t+2)(t+q) + q(q−1), cross-multiplied to stay in integers
    auto satisfied = [&](long long t) {
        return (long long)v * (t + q) <= (5 * t + 2) * (t + q) + (long long)q * (q - 1);
    };
    long long t = 1;
    while (!satisfied(t)) ++t;  // RHS grows as 5t², always terminates
    r.value = int(t);
    // t = 0 would also satisfy the inequality (v too small for the
    // derivation's block-size semantics); flag rather than guess intent
    r.clamped = (t == 1) && ((q == 0 && v <= 2) || (q >= 1 && satisfied(0)));
    return r;
}

BoundReport upper_bound_p1(int v, int q) {
    ChainWeight w = kq(v, q);
    BoundReport r;
    r.v = v;
    r.p = 1;
    r.q = q;
    r.kq = w.kq;
    if (q % 2 == 1) r.t_span = w.span;
    BigRat bound = BigRat(binom(v, v / 2)) / w.kq;
    r.n_max = numerator(bound) / denominator(bound);  // floor (both positive)
    return r;
}

BoundReport upper_bound_p2(int v, int q) {
    TStar t = tstar(v, q);
    BoundReport r;
    r.v = v;
    r.p = 2;
    r.q = q;
    r.tstar = t.value;
    r.tstar_clamped = t.clamped;
    r.n_max = binom(v, t.value) / binom(2LL * t.value + q - 1, t.value);
    return r;
}

double min_pools_estimate(long long n, int p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (p == 1) return std::log(double(n)) / std::log(2.0);
    if (p == 2) return std::log(double(n)) / std::log(1.25);
    throw std::invalid_argument("estimate only available for p in {1,2}");
}

}  // namespace poolkit
