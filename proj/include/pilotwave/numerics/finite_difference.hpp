#pragma once

// 4th-order central difference stencils, used by the residual checks.

#include <stdexcept>

namespace pilotwave {

inline constexpr double kDefaultFdStep = 1e-4;

/// 4th-order central difference of order 1 or 2 at x with spacing h.
/// f must be finite on [x - 2h, x + 2h].
template <class F>
double central_diff(F&& f, double x, double h, int order) {
    const double fm2 = f(x - 2.0 * h);
    const double fm1 = f(x - h);
    const double fp1 = f(x + h);
    const double fp2 = f(x + 2.0 * h);
    if (order == 1) {
        return (-fp2 + 8.0 * fp1 - 8.0 * fm1 + fm2) / (12.0 * h);
    }
    if (order == 2) {
        const double f0 = f(x);
        return (-fp2 + 16.0 * fp1 - 30.0 * f0 + 16.0 * fm1 - fm2) / (12.0 * h * h);
    }
    throw std::invalid_argument("central_diff: order must be 1 or 2");
}

}  // namespace pilotwave
