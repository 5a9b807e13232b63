#include "contactlie/expm.hpp"

#include <cmath>

namespace contactlie {

Mat3 expm3(const Mat3& m, double t) {
    Mat3 a = t * m;
    const double norm = a.lpNorm<Eigen::Infinity>();

    int squarings = 0;
    if (norm > 0.125) {
        squarings = static_cast<int>(std::ceil(std::log2(norm / 0.125)));
        a /= std::pow(2.0, squarings);
    }

    // Horner evaluation of sum_{k<=10} a^k / k!.
    Mat3 acc = Mat3::Identity();
    for (int k = 10; k >= 1; --k) {
        acc = Mat3::Identity() + (a * acc) / static_cast<double>(k);
    }
    for (int s = 0; s < squarings; ++s) acc = acc * acc;
    return acc;
}

} // namespace contactlie
