#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "latgb/lattice.hpp"
#include "latgb/polynomial.hpp"

namespace latgb {

// Shape r_1 x ... x r_n of coefficient tensors for residues modulo
// <x_1^r_1 - 1, ..., x_n^r_n - 1>.  All radices >= 1.
struct TensorShape {
    std::vector<std::int64_t> radices;

    explicit TensorShape(std::vector<std::int64_t> r);

    int order() const { return static_cast<int>(radices.size()); }
    std::int64_t flat_size() const;

    bool operator==(const TensorShape&) const = default;
};

// Dense coefficient tensor, flattened row-major with axis 1 slowest:
//   pos(i_1..i_n) = sum_k i_k * prod_{l > k} r_l.
// Entry at (i_1..i_n) is the coefficient of x_1^{i_1} ... x_n^{i_n}.
struct CoeffTensor {
    TensorShape shape;
    std::vector<Int> entries;  // size == shape.flat_size()
};

std::int64_t flat_index(const TensorShape& shape,
                        const std::vector<std::int64_t>& index);

CoeffTensor zero_tensor(const TensorShape& shape);
// Coefficients of f laid out on the shape.  Every exponent must be within
// the radices; no reduction is performed here.
CoeffTensor poly_to_tensor(const Polynomial& f, const TensorShape& shape);
Polynomial tensor_to_poly(const CoeffTensor& t);

VecZ tensor_to_vector(const CoeffTensor& t);
CoeffTensor vector_to_tensor(const VecZ& v, const TensorShape& shape);

// Cyclic shift along `axis` (1-based): output slice j equals input slice
// j - 1 mod r_axis.  Realizes multiplication by x_axis on residues.
CoeffTensor cyclic_shift(const CoeffTensor& t, int axis);

struct CyclicViolation {
    std::int64_t row;  // basis row whose shift escapes
    int axis;          // 1-based
};

// Is L (in tensor coordinates, ambient == flat size) closed under the
// cyclic shift of every axis?
std::optional<CyclicViolation> find_cyclic_violation(const IntegerLattice& L,
                                                     const TensorShape& shape);
bool is_multivariate_cyclic(const IntegerLattice& L, const TensorShape& shape);

// Bridge between quotient coordinates (basis monomials ascending under the
// monomial order) and tensor coordinates (row-major positions): perm[q] is
// the flat position of the q-th basis monomial.  The monomials must be
// exactly the box of the shape.
std::vector<std::int64_t> basis_to_tensor_permutation(
    const std::vector<Monomial>& basis_monomials, const TensorShape& shape);

// Rewrite a lattice from quotient coordinates to tensor coordinates by the
// permutation above, re-canonicalizing the basis.
IntegerLattice lattice_to_tensor_coordinates(const IntegerLattice& L,
                                             const std::vector<std::int64_t>& perm);

}  // namespace latgb
