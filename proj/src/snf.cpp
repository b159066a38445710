#include "latgb/snf.hpp"

#include <stdexcept>

namespace latgb {

using Eigen::Index;

namespace {

// Book-keeping for the three matrices: row operations mirror onto U from the
// left, column operations mirror onto V from the right and invert onto Vinv
// from the left (E^-1 * Vinv keeps Vinv == V^-1).
struct Work {
    MatZ a, u, v, vinv;

    void swap_rows(Index i, Index j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        u.row(i).swap(u.row(j));
    }
    void swap_cols(Index i, Index j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        v.col(i).swap(v.col(j));
        vinv.row(i).swap(vinv.row(j));
    }
    // row_i -= q * row_j
    void row_sub(Index i, Index j, const Int& q) {
        a.row(i) -= q * a.row(j);
        u.row(i) -= q * u.row(j);
    }
    // col_i += t * col_j
    void col_add(Index i, Index j, const Int& t) {
        a.col(i) += t * a.col(j);
        v.col(i) += t * v.col(j);
        vinv.row(j) -= t * vinv.row(i);
    }
    void negate_row(Index i) {
        a.row(i) = -a.row(i).eval();
        u.row(i) = -u.row(i).eval();
    }
};

// Smallest |entry| wins; ties resolve to the first in row-major scan order.
bool find_pivot(const Work& w, Index t, Index& pi, Index& pj) {
    bool found = false;
    Int best;
    for (Index i = t; i < w.a.rows(); ++i)
        for (Index j = t; j < w.a.cols(); ++j) {
            if (sgn(w.a(i, j)) == 0) continue;
            Int mag = abs(w.a(i, j));
            if (!found || mag < best) {
                best = mag;
                pi = i;
                pj = j;
                found = true;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_decompose(MatZ m) {
    const Index rows = m.rows();
    const Index cols = m.cols();
    Work w;
    w.a = std::move(m);
    w.u = MatZ::Identity(rows, rows);
    w.v = MatZ::Identity(cols, cols);
    w.vinv = MatZ::Identity(cols, cols);

    const Index steps = std::min(rows, cols);
    Int q, r;
    for (Index t = 0; t < steps; ++t) {
        Index pi, pj;
        if (!find_pivot(w, t, pi, pj)) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            // Clear the pivot column; a nonzero remainder becomes the new,
            // strictly smaller pivot.
            for (Index i = t + 1; i < rows; ++i) {
                if (sgn(w.a(i, t)) == 0) continue;
                euclid_divmod(w.a(i, t), w.a(t, t), q, r);
                w.row_sub(i, t, q);
                if (sgn(r) != 0) {
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            // Clear the pivot row the same way with column operations.
            for (Index j = t + 1; j < cols; ++j) {
                if (sgn(w.a(t, j)) == 0) continue;
                euclid_divmod(w.a(t, j), w.a(t, t), q, r);
                w.col_add(j, t, -q);
                if (sgn(r) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            // Pivot must divide the remaining block; folding an offending
            // column into the pivot column restarts clearing with a smaller
            // pivot, so this loop terminates.
            for (Index i = t + 1; i < rows && !dirty; ++i)
                for (Index j = t + 1; j < cols && !dirty; ++j)
                    if (!divides_int(w.a(t, t), w.a(i, j))) {
                        w.col_add(t, j, 1);
                        dirty = true;
                    }
        }
        if (sgn(w.a(t, t)) < 0) w.negate_row(t);
    }

    SmithDecomposition out;
    for (Index t = 0; t < steps; ++t) {
        if (sgn(w.a(t, t)) == 0) break;
        out.invariant_factors.push_back(w.a(t, t));
    }
    out.rank = static_cast<std::int64_t>(out.invariant_factors.size());
    for (std::size_t k = 1; k < out.invariant_factors.size(); ++k)
        if (!divides_int(out.invariant_factors[k - 1], out.invariant_factors[k]))
            throw std::logic_error("smith_decompose: divisibility chain broken");
    out.D = std::move(w.a);
    out.U = std::move(w.u);
    out.V = std::move(w.v);
    out.Vinv = std::move(w.vinv);
    return out;
}

}  // namespace latgb
