#pragma once

#include <cstdint>
#include <vector>

#include "latgb/matrix.hpp"
#include "latgb/quotient.hpp"

namespace latgb {

// A sublattice of Z^ambient_dim held by its canonical basis: the row-style
// Hermite form of any spanning set.  rank == number of basis rows; the zero
// lattice has none.  Two lattices are equal iff their fields are equal.
struct IntegerLattice {
    std::int64_t ambient_dim = 0;
    MatZ basis;

    std::int64_t rank() const { return basis.rows(); }
};

// Canonicalize a spanning set (rows) into a lattice.
IntegerLattice make_lattice(std::int64_t ambient_dim, const MatZ& spanning_rows);

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b);
bool lattice_contains(const IntegerLattice& L, const VecZ& v);
bool is_full_rank(const IntegerLattice& L);
// Positive determinant of a full-rank lattice (product of Hermite pivots);
// precondition_error otherwise.
Int lattice_det(const IntegerLattice& L);

// Image of the ideal generated by `gens` inside the free finite-rank
// quotient described by (G, Q): the lattice spanned by the coordinate
// vectors of f * b over all generators f and basis monomials b.  The image
// is closed under multiplication by every variable.
IntegerLattice embed_ideal(const std::vector<Polynomial>& gens,
                           const GroebnerBasis& G, const QuotientStructure& Q);

}  // namespace latgb
