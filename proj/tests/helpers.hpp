#pragma once

#include <random>

#include "contactlie/algebra.hpp"

namespace testhelpers {

using contactlie::Mat3;
using contactlie::Vec3;

inline Mat3 random_invertible(std::mt19937_64& rng, double min_det = 0.2) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Mat3 p;
    do {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) p(i, j) = u(rng);
    } while (std::abs(p.determinant()) < min_det);
    return p;
}

// Expand a matrix in a basis of matrices by solving the vectorized system;
// independent of the library's closed-form coordinate formulas.
template <typename Mat>
Vec3 expand_in_basis(const std::array<Mat, 3>& basis, const Mat& w) {
    constexpr int n = Mat::RowsAtCompileTime * Mat::ColsAtCompileTime;
    Eigen::Matrix<double, n, 3> sys;
    for (int k = 0; k < 3; ++k) sys.col(k) = Eigen::Map<const Eigen::Matrix<double, n, 1>>(basis[k].data());
    Eigen::Matrix<double, n, 1> rhs = Eigen::Map<const Eigen::Matrix<double, n, 1>>(w.data());
    return sys.colPivHouseholderQr().solve(rhs);
}

} // namespace testhelpers
