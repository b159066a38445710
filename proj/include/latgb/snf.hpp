#pragma once

#include <cstdint>
#include <vector>

#include "latgb/matrix.hpp"

namespace latgb {

struct SNFResult {
    std::vector<Int> invariant_factors;  // positive, each divides the next
    std::int64_t rank = 0;
};

// U * M * V = D with U, V unimodular and D diagonal carrying the invariant
// factors.  Vinv is maintained alongside V; its first `rank` rows span the
// saturation of M's row space.
struct SmithDecomposition {
    MatZ D;
    MatZ U;
    MatZ V;
    MatZ Vinv;
    std::vector<Int> invariant_factors;
    std::int64_t rank = 0;
};

SmithDecomposition smith_decompose(MatZ m);

template <typename Derived>
SNFResult smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
    static_assert(std::is_same_v<typename Derived::Scalar, Int>,
                  "smith_normal_form expects exact integer matrices");
    SmithDecomposition d = smith_decompose(MatZ(m));
    return {std::move(d.invariant_factors), d.rank};
}

}  // namespace latgb
