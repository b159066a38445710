#include "latgb/matrix.hpp"

namespace latgb::detail {

using Eigen::Index;

MatZ hnf_impl(MatZ a) {
    const Index rows = a.rows();
    const Index cols = a.cols();
    Index r = 0;  // next pivot row
    Int g, u, v, q, rem;
    for (Index c = 0; c < cols && r < rows; ++c) {
        Index piv = -1;
        for (Index i = r; i < rows; ++i)
            if (sgn(a(i, c)) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r) a.row(piv).swap(a.row(r));
        // Clear the column below the pivot with unimodular 2x2 combinations.
        for (Index i = r + 1; i < rows; ++i) {
            if (sgn(a(i, c)) == 0) continue;
            const Int x = a(r, c);
            const Int y = a(i, c);
            ext_gcd(x, y, g, u, v);
            const Int ys = -(y / g);
            const Int xs = x / g;
            const RowVecZ nr = u * a.row(r) + v * a.row(i);
            const RowVecZ ni = ys * a.row(r) + xs * a.row(i);
            a.row(r) = nr;
            a.row(i) = ni;
        }
        if (sgn(a(r, c)) < 0) a.row(r) = -a.row(r).eval();
        // Reduce entries above the pivot into [0, pivot).
        for (Index i = 0; i < r; ++i) {
            euclid_divmod(a(i, c), a(r, c), q, rem);
            if (sgn(q) != 0) a.row(i) -= q * a.row(r);
        }
        ++r;
    }
    return a.topRows(r);
}

}  // namespace latgb::detail
