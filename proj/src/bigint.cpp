#include "latgb/bigint.hpp"

#include <stdexcept>

static_assert(sizeof(long) == 8, "expects an LP64 platform (long == int64)");

namespace latgb {

void euclid_divmod(const Int& c, const Int& d, Int& q, Int& r) {
    if (sgn(d) == 0) throw std::invalid_argument("euclid_divmod: zero divisor");
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    // Floor division leaves r with the sign of d; shift into [0, |d|).
    if (sgn(r) < 0) {
        r -= d;
        q += 1;
    }
}

void ext_gcd(const Int& a, const Int& b, Int& g, Int& u, Int& v) {
    if (sgn(a) == 0 && sgn(b) == 0) {
        g = 0;
        u = 0;
        v = 0;
        return;
    }
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int q, rem, tmp;
    while (sgn(r) != 0) {
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), old_r.get_mpz_t(), r.get_mpz_t());
        old_r = r;
        r = rem;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    g = old_r;
    u = old_s;
    if (sgn(g) < 0) {
        g = -g;
        u = -u;
    }
    if (sgn(b) != 0) {
        Int m = abs(b) / g;
        if (m == 1) {
            u = 0;
        } else {
            Int qq, rr;
            euclid_divmod(u, m, qq, rr);
            if (2 * rr > m) rr -= m;  // representative in (-m/2, m/2]
            u = rr;
        }
        v = (g - u * a) / b;  // exact
    } else {
        v = 0;
    }
}

Int gcd_int(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm_int(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

bool divides_int(const Int& d, const Int& x) {
    if (sgn(d) == 0) throw std::invalid_argument("divides_int: zero divisor");
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

bool fits_int64(const Int& v) { return mpz_fits_slong_p(v.get_mpz_t()) != 0; }

std::int64_t to_int64(const Int& v) {
    if (!fits_int64(v)) throw std::overflow_error("to_int64: value out of range");
    return static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t()));
}

}  // namespace latgb
