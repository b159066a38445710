#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>

namespace latgb {

using Int = mpz_class;

// c = q*d + r with 0 <= r < |d|; the least non-negative remainder.
// d must be nonzero; q and r must not alias c or d.
void euclid_divmod(const Int& c, const Int& d, Int& q, Int& r);

// g = gcd(a, b) >= 0 and u*a + v*b = g.  For b != 0 the cofactor u is pinned
// to the representative of its class modulo m = |b|/g lying in (-m/2, m/2],
// so the pair (u, v) is a deterministic function of (a, b).
void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v);

Int gcd_int(const Int& a, const Int& b);
Int lcm_int(const Int& a, const Int& b);

// Does d divide x?  (d nonzero)
bool divides_int(const Int& d, const Int& x);

bool fits_int64(const Int& v);
std::int64_t to_int64(const Int& v);

}  // namespace latgb

// Adapter so Eigen dense matrices can carry exact integers as their scalar.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    using Real = mpz_class;
    using NonInteger = mpz_class;
    using Nested = mpz_class;
    using Literal = long;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 30,
        MulCost = 50
    };
};

}  // namespace Eigen
