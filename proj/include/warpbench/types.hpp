#pragma once

#include <Eigen/Core>

namespace warpbench {

template <class Scalar_, int Rows_ = Eigen::Dynamic>
using vec_type = Eigen::Matrix<Scalar_, Rows_, 1>;

template <class Scalar_, int Rows_ = Eigen::Dynamic, int Cols_ = Eigen::Dynamic>
using mat_type = Eigen::Matrix<Scalar_, Rows_, Cols_>;

/// Search-space point in the unit cube.
using Point = vec_type<double>;

/// Bi-objective value, minimization convention.
using Objectives = vec_type<double, 2>;

using Matrix = mat_type<double>;

/// a dominates b: no worse in every objective and different somewhere.
template <class DA, class DB>
bool dominates(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b)
{
    bool strictly = false;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strictly = true;
    }
    return strictly;
}

} // namespace warpbench
