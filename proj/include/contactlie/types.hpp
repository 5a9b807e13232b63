#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace contactlie {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Covec3 = Eigen::RowVector3d;

/// Default absolute tolerance for exact (small-integer) algebra data.
inline constexpr double kTol = 1e-12;

/// Covector applied to a vector.
inline double pairing(const Covec3& a, const Vec3& v) {
    const double s = a * v; // 1x1 product converts to scalar
    return s;
}

/// Input is malformed (non-antisymmetric tensor, dependent plane vectors, ...).
struct StructuralError : std::runtime_error {
    explicit StructuralError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The contact nondegeneracy condition failed where it was required.
struct ContactViolation : std::runtime_error {
    explicit ContactViolation(const std::string& msg) : std::runtime_error(msg) {}
};

/// Data that should be consistent (given the preconditions) is not.
struct NumericalInconsistency : std::runtime_error {
    explicit NumericalInconsistency(const std::string& msg) : std::runtime_error(msg) {}
};

/// Operation is excluded for this input (e.g. embedding an su(2) algebra).
struct UnsupportedCase : std::runtime_error {
    explicit UnsupportedCase(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad user-facing input (step sizes, singular matrices, unknown names).
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace contactlie
