// errors.hpp: exception types raised by the heatfcs core library

#pragma once

#include <stdexcept>
#include <string>

namespace heatfcs {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Two Floquet eigenphases too close to separate (quasienergy crossing).
class QuasienergyCrossingError : public Error {
public:
    using Error::Error;
};

// Fourier series of a coupling operator not converged at the requested harmonic cutoff.
class TruncationError : public Error {
public:
    TruncationError(const std::string& what, int required_k_max)
        : Error(what), required_k_max_(required_k_max) {}
    int required_k_max() const noexcept { return required_k_max_; }

private:
    int required_k_max_;
};

// A12 + A21 = 0: the population generator has no relaxation.
class DegenerateGeneratorError : public Error {
public:
    using Error::Error;
};

// Richardson extrapolation of a numerical derivative did not settle.
class DifferentiationError : public Error {
public:
    using Error::Error;
};

// Second-order expansion of the dominant eigenvalue is not a valid Gaussian (b <= 0).
class InvalidExpansionError : public Error {
public:
    using Error::Error;
};

// Atom window misses more probability mass than allowed.
class MassDeficitError : public Error {
public:
    using Error::Error;
};

// Comb decomposition of the characteristic function produced non-real atom weights.
class DecompositionError : public Error {
public:
    using Error::Error;
};

// Counting-field grid too coarse for the requested time.
class ResolutionError : public Error {
public:
    using Error::Error;
};

// Monte Carlo heat sample off the {n Omega + m Omega_R} lattice.
class LatticeViolationError : public Error {
public:
    using Error::Error;
};

// Trajectory exceeded the per-trajectory event budget.
class EventCapError : public Error {
public:
    using Error::Error;
};

// RateTable or other value object violates its invariants.
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace heatfcs
