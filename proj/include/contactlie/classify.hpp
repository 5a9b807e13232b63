#pragma once

#include <array>
#include <optional>
#include <string>

#include "contactlie/canonical_frame.hpp"
#include "contactlie/pullback.hpp"

namespace contactlie {

enum class CaseTag { Su2, Sl2Tilde, Case1, Case2, Case3Heis };

std::string to_string(CaseTag tag);

/// Output of the case analysis, in canonical-frame coordinates. A, B, C are
/// the chart generators (C is the geodesic field tangent to xi); h_span spans
/// the 2-dimensional subalgebra whose subgroup is factored on its own. For
/// Su2 no factorization exists and the generators are unset.
struct ClassificationResult {
    CaseTag tag = CaseTag::Su2;
    Vec3 A = Vec3::Zero();
    Vec3 B = Vec3::Zero();
    Vec3 C = Vec3::Zero();
    std::array<Vec3, 2> h_span{Vec3::Zero(), Vec3::Zero()};
    StructureConstants constants; // canonical bracket pattern
    double a = 0.0, b = 0.0, m1 = 0.0, m2 = 0.0;

    bool has_chart() const { return tag != CaseTag::Su2; }

    /// Chart of the second kind for the factorization. Throws UnsupportedCase
    /// for Su2 (no factorization; the algebra is excluded by hypothesis).
    SecondKindChart chart() const;
};

/// Case analysis on a canonical frame. Precedence: degenerate pair (a=b=0),
/// then the two solvable patterns, then the semisimple pair split by the
/// Killing signature. Throws NumericalInconsistency if the compatibility
/// constraints a*m1 = b*m2 = 0 fail beyond tolerance.
ClassificationResult classify(const CanonicalFrame& cf);

/// Change of basis to the standard sl(2) presentation
/// [v1,v0] = -v2, [v2,v0] = v1, [v2,v1] = v0.
struct Sl2StandardBasis {
    Mat3 Q; // columns: v0, v1, v2 of the standard basis, in input coordinates
};

/// Standardize an sl(2)-type algebra via its Killing form: the timelike
/// eigendirection becomes the elliptic generator v0, a spacelike unit
/// orthogonal to it becomes v1, and v2 = [v0, v1]. Throws UnsupportedCase if
/// the signature is not (2,1). If xi_plane is given, v1 is chosen inside it
/// (possible whether or not v0 is transverse to the plane).
Sl2StandardBasis sl2_standardize(const StructureConstants& c,
                                 std::optional<std::array<Vec3, 2>> xi_plane = std::nullopt);

/// Automorphism of su(2) (a rotation in the adjoint coordinates) carrying the
/// plane span{u, w} onto span{e1, e2}, built by rotating the Killing-unit
/// normal of the plane onto e0.
Mat3 su2_normalize(const Vec3& u, const Vec3& w);

} // namespace contactlie
