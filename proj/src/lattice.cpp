#include "latgb/lattice.hpp"

#include "latgb/errors.hpp"

namespace latgb {

using Eigen::Index;

IntegerLattice make_lattice(std::int64_t ambient_dim, const MatZ& spanning_rows) {
    if (ambient_dim < 1)
        throw precondition_error("make_lattice: ambient dimension must be >= 1");
    if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_dim)
        throw precondition_error("make_lattice: row width does not match ambient dimension");
    IntegerLattice L;
    L.ambient_dim = ambient_dim;
    L.basis = spanning_rows.rows() == 0 ? MatZ(0, ambient_dim) : hnf(spanning_rows);
    return L;
}

bool lattice_equal(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_dim == b.ambient_dim && a.basis.rows() == b.basis.rows() &&
           a.basis == b.basis;
}

bool lattice_contains(const IntegerLattice& L, const VecZ& v) {
    if (v.size() != L.ambient_dim)
        throw precondition_error("lattice_contains: dimension mismatch");
    VecZ w = v;
    Int q, r;
    for (Index i = 0; i < L.basis.rows(); ++i) {
        Index p = -1;
        for (Index j = 0; j < L.basis.cols(); ++j)
            if (sgn(L.basis(i, j)) != 0) {
                p = j;
                break;
            }
        if (p < 0) continue;
        if (sgn(w(p)) == 0) continue;
        euclid_divmod(w(p), L.basis(i, p), q, r);
        if (sgn(r) != 0) return false;
        w -= q * L.basis.row(i).transpose();
    }
    for (Index j = 0; j < w.size(); ++j)
        if (sgn(w(j)) != 0) return false;
    return true;
}

bool is_full_rank(const IntegerLattice& L) { return L.rank() == L.ambient_dim; }

Int lattice_det(const IntegerLattice& L) {
    if (!is_full_rank(L))
        throw precondition_error("lattice_det: lattice is not full rank");
    Int d = 1;
    for (Index i = 0; i < L.basis.rows(); ++i) d *= L.basis(i, i);
    return d;
}

IntegerLattice embed_ideal(const std::vector<Polynomial>& gens,
                           const GroebnerBasis& G, const QuotientStructure& Q) {
    if (!Q.free_module)
        throw precondition_error(
            "embed_ideal: quotient has torsion or infinite rank, no lattice image");
    if (gens.empty())
        throw precondition_error("embed_ideal: empty generator list");
    const auto n = static_cast<Index>(Q.basis_monomials.size());
    if (n == 0)
        throw precondition_error("embed_ideal: trivial quotient has no ambient space");

    MatZ rows(static_cast<Index>(gens.size()) * n, n);
    Index r = 0;
    for (const auto& f : gens) {
        if (f.nvars() != G.arity())
            throw precondition_error("embed_ideal: generator arity mismatch");
        for (const auto& b : Q.basis_monomials) {
            const Polynomial fb = f.mul_term(b, 1);
            rows.row(r++) = phi_vector(fb, Q, G).transpose();
        }
    }
    return make_lattice(n, rows);
}

}  // namespace latgb
