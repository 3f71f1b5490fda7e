#pragma once

// Error-function family (erf, erfc, erfcx) from W. J. Cody's rational
// Chebyshev approximations ("Rational Chebyshev approximation for the error
// function", Math. Comp. 23 (1969)).  Self-contained on purpose: golden tests
// depend on bit-stable values across platforms, so nothing here calls the
// platform's erf.  Accuracy is ~1 ulp over the whole real line.

#include <cfloat>
#include <cmath>
#include <limits>

namespace pilotwave {

namespace detail {

// Coefficients for erf on |x| <= 0.46875.
inline constexpr double kErfA[5] = {
    3.1611237438705656e0,  1.13864154151050156e2, 3.77485237685302021e2,
    3.20937758913846947e3, 1.85777706184603153e-1};
inline constexpr double kErfB[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                                    1.28261652607737228e3, 2.84423683343917062e3};

// Coefficients for erfc on 0.46875 < |x| <= 4.
inline constexpr double kErfC[9] = {
    5.64188496988670089e-1, 8.88314979438837594e0, 6.61191906371416295e1,
    2.98635138197400131e2,  8.8195222124176909e2,  1.71204761263407058e3,
    2.05107837782607147e3,  1.23033935479799725e3, 2.15311535474403846e-8};
inline constexpr double kErfD[8] = {
    1.57449261107098347e1, 1.17693950891312499e2, 5.37181101862009858e2,
    1.62138957456669019e3, 3.29079923573345963e3, 4.36261909014324716e3,
    3.43936767414372164e3, 1.23033935480374942e3};

// Coefficients for erfc on |x| > 4 (asymptotic regime).
inline constexpr double kErfP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                                    1.25781726111229246e-1, 1.60837851487422766e-2,
                                    6.58749161529837803e-4, 1.63153871373020978e-2};
inline constexpr double kErfQ[5] = {2.56852019228982242e0,  1.87295284992346047e0,
                                    5.27905102951428412e-1, 6.05183413124413191e-2,
                                    2.33520497626869185e-3};

inline constexpr double kInvSqrtPi = 5.6418958354775628695e-1;  // 1/sqrt(pi)
inline constexpr double kErfThresh = 0.46875;
inline constexpr double kXSmall = 1.11e-16;
inline constexpr double kXBig = 26.543;       // erfc underflows beyond this
inline constexpr double kXHuge = 6.71e7;      // erfcx ~ 1/(x*sqrt(pi)) beyond this
inline constexpr double kXMax = 2.53e307;     // 1/(sqrt(pi)*DBL_MIN)
inline constexpr double kXNeg = -26.628;      // 2*exp(x^2) overflows below this

// exp(-y^2) with the argument split so that the rounding of y*y does not
// contaminate the result for large y (Cody's AINT trick).
inline double exp_neg_sq(double y) {
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
}

inline double exp_pos_sq(double y) {
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(ysq * ysq) * std::exp(del);
}

enum class ErfKind { Erf, Erfc, Erfcx };

// Cody's CALERF, restructured.  Computes erf/erfc/erfcx for one argument.
inline double calerf(double x, ErfKind kind) {
    const double y = std::fabs(x);
    double result;

    if (y <= kErfThresh) {
        const double ysq = (y > kXSmall) ? y * y : 0.0;
        double num = kErfA[4] * ysq;
        double den = ysq;
        for (int i = 0; i < 3; ++i) {
            num = (num + kErfA[i]) * ysq;
            den = (den + kErfB[i]) * ysq;
        }
        result = x * (num + kErfA[3]) / (den + kErfB[3]);
        if (kind != ErfKind::Erf) result = 1.0 - result;
        if (kind == ErfKind::Erfcx) result = std::exp(ysq) * result;
        return result;
    }

    if (y <= 4.0) {
        double num = kErfC[8] * y;
        double den = y;
        for (int i = 0; i < 7; ++i) {
            num = (num + kErfC[i]) * y;
            den = (den + kErfD[i]) * y;
        }
        result = (num + kErfC[7]) / (den + kErfD[7]);
        if (kind != ErfKind::Erfcx) result *= exp_neg_sq(y);
    } else {
        result = 0.0;
        bool done = false;
        if (y >= kXBig) {
            if (kind != ErfKind::Erfcx || y >= kXMax) {
                done = true;  // erfc underflows; erfcx beyond representable
            } else if (y >= kXHuge) {
                result = kInvSqrtPi / y;
                done = true;
            }
        }
        if (!done) {
            const double ysq = 1.0 / (y * y);
            double num = kErfP[5] * ysq;
            double den = ysq;
            for (int i = 0; i < 4; ++i) {
                num = (num + kErfP[i]) * ysq;
                den = (den + kErfQ[i]) * ysq;
            }
            result = ysq * (num + kErfP[4]) / (den + kErfQ[4]);
            result = (kInvSqrtPi - result) / y;
            if (kind != ErfKind::Erfcx) result *= exp_neg_sq(y);
        }
    }

    // Negative-argument fixups.
    switch (kind) {
        case ErfKind::Erf:
            result = (0.5 - result) + 0.5;
            if (x < 0.0) result = -result;
            break;
        case ErfKind::Erfc:
            if (x < 0.0) result = 2.0 - result;
            break;
        case ErfKind::Erfcx:
            if (x < 0.0) {
                if (x < kXNeg) {
                    // 2*exp(x^2) is not representable; saturate instead of
                    // returning inf so downstream products stay well defined.
                    result = std::numeric_limits<double>::max();
                } else {
                    const double twoexp = exp_pos_sq(x);
                    result = (twoexp + twoexp) - result;
                }
            }
            break;
    }
    return result;
}

}  // namespace detail

/// erf(z) = (2/sqrt(pi)) * integral of exp(-y^2) over [0, z].
inline double erf(double z) { return detail::calerf(z, detail::ErfKind::Erf); }

/// erfc(z) = 1 - erf(z), without cancellation for large z.
inline double erfc(double z) { return detail::calerf(z, detail::ErfKind::Erfc); }

/// erfcx(z) = exp(z^2) * erfc(z), evaluated without forming exp(z^2) for
/// z >= 0.  For z < -26.628 the true value exceeds DBL_MAX and the result
/// saturates at DBL_MAX (finite by contract on z in [-40, inf)).
inline double erfcx(double z) { return detail::calerf(z, detail::ErfKind::Erfcx); }

/// Numerically stable logistic 1/(1 + exp(-u)).
inline double logistic(double u) {
    if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
    const double eu = std::exp(u);
    return eu / (1.0 + eu);
}

}  // namespace pilotwave
