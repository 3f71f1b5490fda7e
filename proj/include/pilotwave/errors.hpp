#pragma once

#include <stdexcept>
#include <string>

namespace pilotwave {

// Common base so callers can catch everything from this library at once.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
struct NonConvergence : Error {
    using Error::Error;
};

// ODE step size underflowed; the velocity field is effectively singular here.
struct StepFailure : Error {
    using Error::Error;
};

// Evaluation requested outside the certified domain of a closed form.
struct DomainError : Error {
    using Error::Error;
};

// Velocity requested at a density node (rho ~ 0 away from the symmetry point).
struct NodeSingularity : Error {
    using Error::Error;
};

// Recurrence seeded exactly on the unstable equilibrium x = 0.
struct DegenerateEquilibrium : Error {
    using Error::Error;
};

// An operation that needs data received none.
struct EmptyInput : Error {
    using Error::Error;
};

}  // namespace pilotwave
