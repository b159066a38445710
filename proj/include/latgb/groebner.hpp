#pragma once

#include <cstdint>
#include <vector>

#include "latgb/polynomial.hpp"
#include "latgb/ring.hpp"

namespace latgb {

// A generating set for an ideal of Z[x_1..x_n] together with the order it
// was computed under and the certification level reached so far:
//   strong         every term of every ideal element is reducible by some
//                  single basis element (monomial divides, coefficient
//                  divides after Euclidean division);
//   reduced        additionally: no term of any element is reducible by the
//                  others, leading coefficients positive, sorted ascending
//                  by leading monomial;
//   short_reduced  additionally certified: for each leading monomial the
//                  gcd of the applicable leading coefficients is attained
//                  by a single element.
struct GroebnerBasis {
    std::vector<Polynomial> elements;
    MonomialOrder order;
    bool strong = false;
    bool reduced = false;
    bool short_reduced = false;

    // Number of variables of the underlying ring (from the first element).
    int arity() const;
};

// For a monomial x^alpha, the ideal of leading coefficients of basis
// elements whose leading monomial divides x^alpha.  Over Z this is
// principal; `generator` is the non-negative gcd (0 when no element applies).
struct LeadingCoeffIdeal {
    Monomial monomial;
    std::vector<int> divisor_indices;  // positions into the basis, ascending
    Int generator;
};

struct BuchbergerOptions {
    std::int64_t max_steps = 200000;  // pairs processed before giving up
};

// Remainder of f under exhaustive term-by-term division by G: a term c*x^b
// is rewritten by the first g in G with lm(g) | x^b and a nonzero Euclidean
// quotient of c by lc(g); irreducible terms (including partial remainders
// 0 <= c' < |lc(g)|) move to the result.  Deterministic; the remainder of
// an ideal member under a strong basis is zero.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G);

// lcm-cancelling combination: coefficients lcm(lc_f, lc_g)/lc on each side.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);
// gcd-attaining combination built from the pinned Bezout pair of the two
// leading coefficients; its leading term is gcd(lc_f, lc_g) * lcm(lm_f, lm_g).
Polynomial g_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order);

// Completion over Z: processes S- and G-combinations of all pairs until
// every one reduces to zero.  Pairs are handled smallest lcm first.  The
// result is strong but not yet reduced.  Throws resource_error past
// opt.max_steps; precondition_error when no nonzero generator is given.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingContext& ctx,
                         const BuchbergerOptions& opt = {});

// Drops elements whose leading term is reducible by another, normalizes
// leading coefficients positive, tail-reduces to a fixpoint, sorts.
// Requires a strong basis; the result generates the same ideal.
GroebnerBasis inter_reduce(const GroebnerBasis& G);

// inter_reduce plus certification that each leading-coefficient ideal's gcd
// is attained by a single element (true for any inter-reduced strong basis
// over Z; verified, not assumed).
GroebnerBasis short_reduce(const GroebnerBasis& G);

// All leading coefficients equal to 1.  Requires short_reduced.
bool is_monic(const GroebnerBasis& G);

LeadingCoeffIdeal leading_coeff_ideal(const GroebnerBasis& G, const Monomial& m);

// Exhaustive pairwise check (no skip criteria): every S- and G-combination
// reduces to zero.  Test/certification helper.
bool verify_strong(const GroebnerBasis& G);

}  // namespace latgb
