#pragma once

#include "contactlie/algebra.hpp"

namespace contactlie {

/// Basis (v0, v1, v2) with v1, v2 in xi and brackets
///   [v0,v1] = a v2,  [v0,v2] = b v1,  [v1,v2] = m1 v1 + m2 v2 - v0.
struct CanonicalFrame {
    Mat3 P; // columns: v0, v1, v2 in input coordinates
    double a = 0.0;
    double b = 0.0;
    double m1 = 0.0;
    double m2 = 0.0;
    bool heisenberg_branch = false;

    /// Exact structure constants of the bracket pattern above.
    StructureConstants pattern_constants() const;

    /// Max bracket component outside the pattern slots, measured on c
    /// transported to the canonical basis.
    double off_pattern_residual(const StructureConstants& c) const;
};

/// Construct the canonical frame from contact data. Follows the Reeb /
/// hollowing / rescaling steps; takes the degenerate branch when
/// ad_v0 restricted to xi vanishes (then a = b = m1 = 0 by construction).
CanonicalFrame canonical_frame(const StructureConstants& c, const ContactData& data,
                               double tol = kTol);

} // namespace contactlie
