#pragma once

#include <Eigen/Core>
#include <type_traits>

#include "latgb/bigint.hpp"

namespace latgb {

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RowVecZ = Eigen::Matrix<Int, 1, Eigen::Dynamic>;

namespace detail {
MatZ hnf_impl(MatZ a);
}

// Row-style Hermite normal form: pivots positive, pivot columns strictly
// increasing, entries above a pivot reduced into [0, pivot).  Zero rows are
// dropped, so the result has as many rows as the rank; the integer row
// space is preserved exactly.  Canonical: equal row spaces give equal forms.
template <typename Derived>
MatZ hnf(const Eigen::MatrixBase<Derived>& m) {
    static_assert(std::is_same_v<typename Derived::Scalar, Int>,
                  "hnf expects exact integer matrices");
    return detail::hnf_impl(MatZ(m));
}

}  // namespace latgb
