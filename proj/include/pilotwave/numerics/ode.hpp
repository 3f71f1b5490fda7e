#pragma once

// Adaptive Dormand-Prince 5(4) pair for the scalar guidance equation
// dx/dt = v(x, t), with Hairer's 4th-order dense-output interpolant so a
// trajectory can be resampled anywhere without re-solving.  Everything is
// deterministic: identical inputs give bit-identical results on a platform.

#include <cfloat>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "pilotwave/errors.hpp"

namespace pilotwave {

struct OdeSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    double initial_step = 1e-3;
    double max_step = 0.1;

    bool valid() const {
        return abs_tol > 0.0 && rel_tol > 0.0 && initial_step > 0.0 &&
               max_step >= initial_step;
    }
};

struct TrajectorySample {
    double t;
    double x;
};

/// Time-ordered sampling of one solution x(t).  Times strictly increase and
/// there are at least the two endpoint samples.
struct Trajectory {
    std::vector<TrajectorySample> samples;
    bool dense = false;

    double initial_position() const { return samples.front().x; }
    double final_position() const { return samples.back().x; }
    double final_time() const { return samples.back().t; }
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double kDpC2 = 1.0 / 5.0, kDpC3 = 3.0 / 10.0, kDpC4 = 4.0 / 5.0,
                        kDpC5 = 8.0 / 9.0;
inline constexpr double kDpA21 = 1.0 / 5.0;
inline constexpr double kDpA31 = 3.0 / 40.0, kDpA32 = 9.0 / 40.0;
inline constexpr double kDpA41 = 44.0 / 45.0, kDpA42 = -56.0 / 15.0,
                        kDpA43 = 32.0 / 9.0;
inline constexpr double kDpA51 = 19372.0 / 6561.0, kDpA52 = -25360.0 / 2187.0,
                        kDpA53 = 64448.0 / 6561.0, kDpA54 = -212.0 / 729.0;
inline constexpr double kDpA61 = 9017.0 / 3168.0, kDpA62 = -355.0 / 33.0,
                        kDpA63 = 46732.0 / 5247.0, kDpA64 = 49.0 / 176.0,
                        kDpA65 = -5103.0 / 18656.0;
inline constexpr double kDpB1 = 35.0 / 384.0, kDpB3 = 500.0 / 1113.0,
                        kDpB4 = 125.0 / 192.0, kDpB5 = -2187.0 / 6784.0,
                        kDpB6 = 11.0 / 84.0;
// b - bhat (error weights, 5th minus embedded 4th order).
inline constexpr double kDpE1 = 71.0 / 57600.0, kDpE3 = -71.0 / 16695.0,
                        kDpE4 = 71.0 / 1920.0, kDpE5 = -17253.0 / 339200.0,
                        kDpE6 = 22.0 / 525.0, kDpE7 = -1.0 / 40.0;
// Dense-output weights (Hairer, Norsett & Wanner, DOPRI5 CONTD5).
inline constexpr double kDpD1 = -12715105075.0 / 11282082432.0;
inline constexpr double kDpD3 = 87487479700.0 / 32700410799.0;
inline constexpr double kDpD4 = -10690763975.0 / 1880347072.0;
inline constexpr double kDpD5 = 701980252875.0 / 199316789632.0;
inline constexpr double kDpD6 = -1453857185.0 / 822651844.0;
inline constexpr double kDpD7 = 69997945.0 / 29380423.0;

}  // namespace detail

/// One accepted step [t0, t0+h] with its quartic interpolant.
struct DenseStep {
    double t0 = 0.0;
    double h = 0.0;
    double r1 = 0.0, r2 = 0.0, r3 = 0.0, r4 = 0.0, r5 = 0.0;

    double position(double t) const {
        const double theta = (t - t0) / h;
        const double theta1 = 1.0 - theta;
        return r1 + theta * (r2 + theta1 * (r3 + theta * (r4 + theta1 * r5)));
    }
};

namespace detail {

struct NullStepObserver {
    void operator()(const DenseStep&) const {}
};

}  // namespace detail

/// Integrates dx/dt = v(x, t) from (x0, t0) to t1 > t0 and returns x(t1).
/// on_step receives every accepted step in order, carrying the dense
/// interpolant.  Throws StepFailure when the step size underflows (stiff or
/// singular field) and propagates exceptions from v.
template <class V, class StepObserver = detail::NullStepObserver>
double integrate_ode(V&& v, double x0, double t0, double t1, const OdeSpec& spec,
                     StepObserver&& on_step = StepObserver{}) {
    if (!(t1 > t0)) throw Error("integrate_ode: t1 must exceed t0");
    if (!spec.valid()) throw Error("integrate_ode: invalid OdeSpec");

    const double span = t1 - t0;
    const double safety = 0.9;
    const double fac_min = 0.2;

    double t = t0;
    double x = x0;
    double h = std::min(spec.initial_step, std::min(spec.max_step, span));
    double k1 = v(x, t);
    double fac_max = 5.0;

    while (t < t1) {
        const double h_min =
            std::max(1e-14 * span, 4.0 * DBL_EPSILON * std::fabs(t));
        if (h < h_min) {
            throw StepFailure("integrate_ode: step size underflow at t=" +
                              std::to_string(t));
        }
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }

        const double k2 = v(x + h * (detail::kDpA21 * k1), t + detail::kDpC2 * h);
        const double k3 = v(x + h * (detail::kDpA31 * k1 + detail::kDpA32 * k2), t + detail::kDpC3 * h);
        const double k4 =
            v(x + h * (detail::kDpA41 * k1 + detail::kDpA42 * k2 + detail::kDpA43 * k3), t + detail::kDpC4 * h);
        const double k5 =
            v(x + h * (detail::kDpA51 * k1 + detail::kDpA52 * k2 + detail::kDpA53 * k3 + detail::kDpA54 * k4),
              t + detail::kDpC5 * h);
        const double k6 =
            v(x + h * (detail::kDpA61 * k1 + detail::kDpA62 * k2 + detail::kDpA63 * k3 + detail::kDpA64 * k4 +
                       detail::kDpA65 * k5),
              t + h);
        const double x_new =
            x + h * (detail::kDpB1 * k1 + detail::kDpB3 * k3 + detail::kDpB4 * k4 + detail::kDpB5 * k5 + detail::kDpB6 * k6);
        const double k7 = v(x_new, t + h);  // FSAL

        const double err_raw =
            h * (detail::kDpE1 * k1 + detail::kDpE3 * k3 + detail::kDpE4 * k4 + detail::kDpE5 * k5 + detail::kDpE6 * k6 +
                 detail::kDpE7 * k7);
        const double scale =
            spec.abs_tol +
            spec.rel_tol * std::max(std::fabs(x), std::fabs(x_new));
        const double err = std::fabs(err_raw) / scale;

        if (!std::isfinite(err) || !std::isfinite(x_new)) {
            h *= 0.5;
            fac_max = 1.0;
            continue;
        }

        if (err <= 1.0) {
            DenseStep step;
            step.t0 = t;
            step.h = h;
            step.r1 = x;
            step.r2 = x_new - x;
            step.r3 = h * k1 - step.r2;
            step.r4 = step.r2 - h * k7 - step.r3;
            step.r5 = h * (detail::kDpD1 * k1 + detail::kDpD3 * k3 + detail::kDpD4 * k4 + detail::kDpD5 * k5 +
                           detail::kDpD6 * k6 + detail::kDpD7 * k7);
            on_step(static_cast<const DenseStep&>(step));

            t = last ? t1 : t + h;
            x = x_new;
            k1 = k7;

            double fac = safety * std::pow(err > 0.0 ? 1.0 / err : 1e10, 0.2);
            fac = std::min(fac_max, std::max(fac_min, fac));
            h = std::min(h * fac, spec.max_step);
            fac_max = 5.0;
        } else {
            const double fac =
                std::max(fac_min, safety * std::pow(1.0 / err, 0.2));
            h *= fac;
            fac_max = 1.0;
        }
    }
    return x;
}

/// Solves the guidance equation and returns the trajectory.  With
/// keep_steps the samples are the accepted step boundaries (dense=true);
/// otherwise only the two endpoints are kept.
template <class V>
Trajectory solve_ode(V&& v, double x0, double t0, double t1, const OdeSpec& spec,
                     bool keep_steps = true) {
    Trajectory trajectory;
    trajectory.dense = keep_steps;
    trajectory.samples.push_back({t0, x0});
    double x_final;
    if (keep_steps) {
        x_final = integrate_ode(v, x0, t0, t1, spec, [&](const DenseStep& s) {
            const double t_end = s.t0 + s.h;
            if (t_end < t1) {
                trajectory.samples.push_back({t_end, s.position(t_end)});
            }
        });
    } else {
        x_final = integrate_ode(v, x0, t0, t1, spec);
    }
    trajectory.samples.push_back({t1, x_final});
    return trajectory;
}

}  // namespace pilotwave
