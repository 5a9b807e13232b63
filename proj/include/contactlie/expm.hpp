#pragma once

#include "contactlie/types.hpp"

namespace contactlie {

/// exp(t * M) for a 3x3 real matrix, by scaling and squaring with an
/// order-10 truncated series. The scaled norm is kept below 1/8 so the
/// series tail stays far under the 1e-13 accuracy contract.
Mat3 expm3(const Mat3& m, double t = 1.0);

} // namespace contactlie
