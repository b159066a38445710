#include "latgb/tensor.hpp"

#include <algorithm>

#include "latgb/errors.hpp"

namespace latgb {

namespace {
constexpr std::int64_t kFlatGuard = 100000000;  // 1e8 entries
}

TensorShape::TensorShape(std::vector<std::int64_t> r) : radices(std::move(r)) {
    if (radices.empty())
        throw precondition_error("TensorShape: need at least one axis");
    for (auto x : radices)
        if (x < 1) throw precondition_error("TensorShape: radices must be >= 1");
    std::int64_t p = 1;
    for (auto x : radices) {
        p *= x;
        if (p > kFlatGuard) throw resource_error("TensorShape: too many entries");
    }
}

std::int64_t TensorShape::flat_size() const {
    std::int64_t p = 1;
    for (auto x : radices) p *= x;
    return p;
}

std::int64_t flat_index(const TensorShape& shape,
                        const std::vector<std::int64_t>& index) {
    if (static_cast<int>(index.size()) != shape.order())
        throw precondition_error("flat_index: arity mismatch");
    std::int64_t pos = 0;
    for (int k = 0; k < shape.order(); ++k) {
        const auto i = index[static_cast<std::size_t>(k)];
        const auto r = shape.radices[static_cast<std::size_t>(k)];
        if (i < 0 || i >= r) throw precondition_error("flat_index: index out of range");
        pos = pos * r + i;
    }
    return pos;
}

CoeffTensor zero_tensor(const TensorShape& shape) {
    CoeffTensor t{shape, {}};
    t.entries.assign(static_cast<std::size_t>(shape.flat_size()), Int(0));
    return t;
}

CoeffTensor poly_to_tensor(const Polynomial& f, const TensorShape& shape) {
    if (f.nvars() != shape.order())
        throw precondition_error("poly_to_tensor: arity mismatch");
    CoeffTensor t = zero_tensor(shape);
    for (const auto& [m, c] : f.terms()) {
        for (int k = 0; k < shape.order(); ++k)
            if (m.exponents[static_cast<std::size_t>(k)] >=
                shape.radices[static_cast<std::size_t>(k)])
                throw precondition_error("poly_to_tensor: exponent outside shape");
        t.entries[static_cast<std::size_t>(flat_index(shape, m.exponents))] = c;
    }
    return t;
}

Polynomial tensor_to_poly(const CoeffTensor& t) {
    const int n = t.shape.order();
    Polynomial f(n);
    std::vector<std::int64_t> idx(static_cast<std::size_t>(n), 0);
    for (std::int64_t pos = 0; pos < t.shape.flat_size(); ++pos) {
        const auto& c = t.entries[static_cast<std::size_t>(pos)];
        if (sgn(c) != 0) f.add_term(Monomial(idx), c);
        // Row-major odometer: last axis fastest.
        for (int k = n - 1; k >= 0; --k) {
            auto& e = idx[static_cast<std::size_t>(k)];
            if (++e < t.shape.radices[static_cast<std::size_t>(k)]) break;
            e = 0;
        }
    }
    return f;
}

VecZ tensor_to_vector(const CoeffTensor& t) {
    VecZ v(static_cast<Eigen::Index>(t.entries.size()));
    for (std::size_t i = 0; i < t.entries.size(); ++i)
        v(static_cast<Eigen::Index>(i)) = t.entries[i];
    return v;
}

CoeffTensor vector_to_tensor(const VecZ& v, const TensorShape& shape) {
    if (v.size() != shape.flat_size())
        throw precondition_error("vector_to_tensor: size mismatch");
    CoeffTensor t{shape, {}};
    t.entries.reserve(static_cast<std::size_t>(v.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i) t.entries.push_back(v(i));
    return t;
}

CoeffTensor cyclic_shift(const CoeffTensor& t, int axis) {
    const int n = t.shape.order();
    if (axis < 1 || axis > n)
        throw precondition_error("cyclic_shift: axis out of range");
    if (static_cast<std::int64_t>(t.entries.size()) != t.shape.flat_size())
        throw precondition_error("cyclic_shift: malformed tensor");
    const int k = axis - 1;
    const auto r = t.shape.radices[static_cast<std::size_t>(k)];
    // Stride of one step along the axis and size of one its full period.
    std::int64_t stride = 1;
    for (int l = k + 1; l < n; ++l) stride *= t.shape.radices[static_cast<std::size_t>(l)];
    const std::int64_t period = stride * r;
    CoeffTensor out = zero_tensor(t.shape);
    for (std::int64_t pos = 0; pos < t.shape.flat_size(); ++pos) {
        const std::int64_t j = (pos % period) / stride;  // index along the axis
        // Output slice j takes input slice j-1 (mod r).
        const std::int64_t src = j == 0 ? pos + (r - 1) * stride : pos - stride;
        out.entries[static_cast<std::size_t>(pos)] =
            t.entries[static_cast<std::size_t>(src)];
    }
    return out;
}

std::optional<CyclicViolation> find_cyclic_violation(const IntegerLattice& L,
                                                     const TensorShape& shape) {
    if (L.ambient_dim != shape.flat_size())
        throw precondition_error("find_cyclic_violation: ambient dimension mismatch");
    for (Eigen::Index i = 0; i < L.basis.rows(); ++i) {
        const CoeffTensor t = vector_to_tensor(L.basis.row(i).transpose(), shape);
        for (int axis = 1; axis <= shape.order(); ++axis) {
            const VecZ shifted = tensor_to_vector(cyclic_shift(t, axis));
            if (!lattice_contains(L, shifted))
                return CyclicViolation{static_cast<std::int64_t>(i), axis};
        }
    }
    return std::nullopt;
}

bool is_multivariate_cyclic(const IntegerLattice& L, const TensorShape& shape) {
    return !find_cyclic_violation(L, shape).has_value();
}

std::vector<std::int64_t> basis_to_tensor_permutation(
    const std::vector<Monomial>& basis_monomials, const TensorShape& shape) {
    if (static_cast<std::int64_t>(basis_monomials.size()) != shape.flat_size())
        throw precondition_error(
            "basis_to_tensor_permutation: basis does not fill the shape");
    std::vector<std::int64_t> perm;
    perm.reserve(basis_monomials.size());
    std::vector<bool> hit(basis_monomials.size(), false);
    for (const auto& m : basis_monomials) {
        if (m.nvars() != shape.order())
            throw precondition_error("basis_to_tensor_permutation: arity mismatch");
        const std::int64_t pos = flat_index(shape, m.exponents);
        if (hit[static_cast<std::size_t>(pos)])
            throw precondition_error("basis_to_tensor_permutation: duplicate monomial");
        hit[static_cast<std::size_t>(pos)] = true;
        perm.push_back(pos);
    }
    return perm;
}

IntegerLattice lattice_to_tensor_coordinates(const IntegerLattice& L,
                                             const std::vector<std::int64_t>& perm) {
    if (L.ambient_dim != static_cast<std::int64_t>(perm.size()))
        throw precondition_error("lattice_to_tensor_coordinates: dimension mismatch");
    MatZ out(L.basis.rows(), L.basis.cols());
    for (Eigen::Index q = 0; q < L.basis.cols(); ++q)
        out.col(static_cast<Eigen::Index>(perm[static_cast<std::size_t>(q)])) =
            L.basis.col(q);
    return make_lattice(L.ambient_dim, out);
}

}  // namespace latgb
