// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace dfwalk {

/// Error function with exact odd symmetry: erf_scalar(-x) == -erf_scalar(x).
inline double erf_scalar(double x) {
    return std::copysign(std::erf(std::abs(x)), x);
}

/// Modified Bessel function of the first kind I_p(x), x >= 0.
inline double bessel_i(unsigned p, double x) {
    if (!(x >= 0.0)) {
        throw DomainError("bessel_i needs x >= 0, got " + std::to_string(x));
    }
    return std::cyl_bessel_i(static_cast<double>(p), x);
}

} // namespace dfwalk
