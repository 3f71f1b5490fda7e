#pragma once

// Globally adaptive Gauss-Kronrod quadrature (15-point Kronrod rule with the
// embedded 7-point Gauss rule, QUADPACK-style error estimate and worst-first
// interval bisection).  The integrands in this project are smooth
// Gaussian/erf combinations, so the high-order rule converges in a handful
// of subdivisions.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pilotwave/errors.hpp"

namespace pilotwave {

struct QuadratureSpec {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 200;

    bool valid() const {
        return abs_tol > 0.0 && rel_tol > 0.0 && max_subdivisions >= 1;
    }
};

struct QuadratureResult {
    double value = 0.0;
    double err_estimate = 0.0;
};

namespace detail {

// Kronrod-15 abscissae (positive half) and weights; Gauss-7 weights sit on
// the odd-index abscissae.  Values from QUADPACK dqk15.
inline constexpr double kGK15Nodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double kGK15WeightsK[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
inline constexpr double kGK15WeightsG[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct Segment {
    double a, b;
    double value;
    double err;
    double resabs;
};

// One application of the K15/G7 pair on [a, b].
template <class F>
Segment gk15(F&& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double resk = kGK15WeightsK[7] * fc;
    double resg = kGK15WeightsG[3] * fc;
    double resabs = std::fabs(resk);

    double fv[15];
    fv[7] = fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kGK15Nodes[j];
        const double f1 = f(center - dx);
        const double f2 = f(center + dx);
        fv[j] = f1;
        fv[14 - j] = f2;
        resk += kGK15WeightsK[j] * (f1 + f2);
        resabs += kGK15WeightsK[j] * (std::fabs(f1) + std::fabs(f2));
        if (j % 2 == 1) resg += kGK15WeightsG[j / 2] * (f1 + f2);
    }

    const double reskh = resk * 0.5;
    double resasc = kGK15WeightsK[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j) {
        resasc += kGK15WeightsK[j] *
                  (std::fabs(fv[j] - reskh) + std::fabs(fv[14 - j] - reskh));
    }

    const double scale = std::fabs(half);
    resabs *= scale;
    resasc *= scale;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    err = std::max(err, 50.0 * DBL_EPSILON * resabs);

    return Segment{a, b, resk * half, err, resabs};
}

}  // namespace detail

/// Adaptive integral of f over [a, b] to within
/// max(abs_tol, rel_tol * |result|).  Throws NonConvergence when
/// max_subdivisions intervals are not enough (a singular or badly
/// under-resolved integrand).
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureSpec& spec) {
    if (a == b) return {0.0, 0.0};
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }

    std::vector<detail::Segment> segments;
    segments.reserve(16);
    segments.push_back(detail::gk15(f, a, b));

    double total = segments[0].value;
    double total_err = segments[0].err;
    double total_resabs = segments[0].resabs;

    while (total_err > std::max(spec.abs_tol, spec.rel_tol * std::fabs(total))) {
        // Roundoff-limited: subdividing further cannot reduce the estimate.
        if (total_err <= 100.0 * DBL_EPSILON * total_resabs) break;
        if (static_cast<int>(segments.size()) >= spec.max_subdivisions) {
            throw NonConvergence(
                "quadrature: " + std::to_string(spec.max_subdivisions) +
                " subdivisions exhausted (err=" + std::to_string(total_err) + ")");
        }
        auto worst = std::max_element(
            segments.begin(), segments.end(),
            [](const detail::Segment& s, const detail::Segment& t) {
                return s.err < t.err;
            });
        const detail::Segment old = *worst;
        const double mid = 0.5 * (old.a + old.b);
        if (mid <= old.a || mid >= old.b) {
            throw NonConvergence("quadrature: interval too small to bisect");
        }
        *worst = detail::gk15(f, old.a, mid);
        segments.push_back(detail::gk15(f, mid, old.b));

        total = 0.0;
        total_err = 0.0;
        total_resabs = 0.0;
        for (const auto& s : segments) {
            total += s.value;
            total_err += s.err;
            total_resabs += s.resabs;
        }
    }
    return {sign * total, total_err};
}

}  // namespace pilotwave
