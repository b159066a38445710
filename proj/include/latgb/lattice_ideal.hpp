#pragma once

#include <vector>

#include "latgb/groebner.hpp"
#include "latgb/lattice.hpp"
#include "latgb/snf.hpp"

namespace latgb {

// Sat(L) = { v : d*v in L for some nonzero integer d }; the smallest
// sublattice of the ambient space containing L with torsion-free quotient.
IntegerLattice saturate(const IntegerLattice& L);
// Equivalent to saturate(L) == L; decided from the invariant factors.
bool is_saturated(const IntegerLattice& L);

// A lattice together with the binomial generators x^{v+} - x^{v-} of its
// lattice ideal, one per basis row, where v = v+ - v- is the sign split.
struct LatticeIdealSpec {
    IntegerLattice lattice;
    std::vector<Polynomial> generators;
};

// Binomials from the canonical basis rows of L.  The ambient dimension must
// match the ring's variable count.  The zero lattice gives no generators.
LatticeIdealSpec lattice_ideal_generators(const IntegerLattice& L,
                                          const RingContext& ctx);

// Short-reduced basis of the toric ideal of L: the lattice is saturated
// first, its basis binomials are then saturated by the product of all
// variables via an auxiliary-variable elimination, and the result is
// re-completed under ctx's own order.  Returns an empty basis for the zero
// lattice.  The toric ideal of a saturated lattice is prime.
GroebnerBasis toric_generators(const IntegerLattice& L, const RingContext& ctx,
                               const BuchbergerOptions& opt = {});

}  // namespace latgb
