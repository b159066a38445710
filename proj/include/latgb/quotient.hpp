#pragma once

#include <cstdint>
#include <vector>

#include "latgb/groebner.hpp"
#include "latgb/matrix.hpp"

namespace latgb {

// Structure report for the residue class ring Z[x_1..x_n] / <G>, viewed as
// a Z-module.  Residues decompose coordinatewise over the basis monomials
// (the monomials irreducible under G), with the coordinate at x^a living in
// Z / <leading-coefficient gcd at x^a>.  basis_monomials is only populated
// in the free finite-rank case; coeff_ideals lists, for each non-monic basis
// element, the obstruction at its leading monomial.
struct QuotientStructure {
    bool finitely_generated = false;
    bool free_module = false;           // free of finite rank over Z
    std::int64_t rank = -1;             // valid when free_module
    std::vector<Monomial> basis_monomials;  // ascending under the order
    std::vector<LeadingCoeffIdeal> coeff_ideals;
};

// Is the quotient finitely generated as a Z-module?  Exactly when every
// variable has a monic pure power among the leading terms.
// Requires a short-reduced basis.
bool is_finitely_generated(const GroebnerBasis& G);

// The monomials not divisible by any leading monomial of G, sorted
// ascending under G's order.  Finite precisely in the monic finitely
// generated case, which is required here.
std::vector<Monomial> standard_monomials(const GroebnerBasis& G);

// Free of finite rank?  False whenever some leading coefficient exceeds 1
// (the quotient then has torsion or a proper cyclic factor).  A monic basis
// with infinitely many standard monomials is free of infinite rank and is
// reported as infinite_rank_error rather than true or false.
bool is_free(const GroebnerBasis& G);

QuotientStructure quotient_structure(const GroebnerBasis& G);

// Coordinates of the residue of f in the free finite-rank case: the normal
// form's coefficients read off along Q.basis_monomials.
VecZ phi_vector(const Polynomial& f, const QuotientStructure& Q,
                const GroebnerBasis& G);

}  // namespace latgb
