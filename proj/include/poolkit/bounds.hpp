#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>

namespace poolkit {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// C(a,b); 0 when b < 0 or b > a.
BigInt binom(long long a, long long b);

struct DegenerateBoundError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The exact chain-blocking weight K_q for the p = 1 bound, together with
/// the chain span T used in the odd-q formula (0 when q is even).
struct ChainWeight {
    BigRat kq;
    long long span = 0;  // T, only meaningful for q odd
};

/// q even: K_q = Σ_{s=0}^{q/2} C(⌊v/2⌋,s)·C(⌈v/2⌉,s).
/// q odd:  K_q = K_{q−1} + (1/T)·C(⌊v/2⌋,(q+1)/2)·C(⌈v/2⌉,(q+1)/2),
///         T = ⌊2⌊v/2⌋/(q+1)⌋. Throws DegenerateBoundError when T = 0.
ChainWeight kq(int v, int q);

/// Least t ≥ 1 with v ≤ 5t + 2 + q(q−1)/(t+q), evaluated in integers.
/// `clamped` flags the small-v range where even t = 0 would satisfy the
/// inequality and the bound's derivation does not apply cleanly.
struct TStar {
    int value = 1;
    bool clamped = false;
};
TStar tstar(int v, int q);

struct BoundReport {
    int v = 0, p = 0, q = 0;
    BigInt n_max;
    std::optional<BigRat> kq;          // p = 1
    std::optional<long long> t_span;   // p = 1, q odd
    std::optional<int> tstar;          // p = 2
    bool tstar_clamped = false;
};

/// n ≤ ⌊C(v,⌊v/2⌋) / K_q⌋, exact rational arithmetic throughout.
BoundReport upper_bound_p1(int v, int q);

/// n ≤ ⌊C(v,t*) / C(2t*+q−1,t*)⌋.
BoundReport upper_bound_p2(int v, int q);

/// Asymptotic minimum pool-count guide: log(n)/log(2) for p = 1,
/// log(n)/log(5/4) for p = 2. Not a certified bound.
double min_pools_estimate(long long n, int p);

}  // namespace poolkit
