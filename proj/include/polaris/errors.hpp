#pragma once

#include <stdexcept>
#include <string>

namespace polaris {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// omega is inside the guard band around the one-photon ionization
/// threshold omega = 1/2, where 1/lambda diverges.
class ThresholdProximity : public Error {
public:
    ThresholdProximity(double omega, double band)
        : Error("omega = " + std::to_string(omega) +
                " is within " + std::to_string(band) +
                " of the ionization threshold 0.5"),
          omega(omega), band(band) {}
    double omega;
    double band;
};

/// A recurrence denominator q+1-1/lambda vanished: omega coincides with an
/// intermediate np resonance omega_n = (1 - 1/n^2)/2.
class ResonancePole : public Error {
public:
    ResonancePole(double omega, int n, double omega_n)
        : Error("omega = " + std::to_string(omega) +
                " hits the n=" + std::to_string(n) +
                " intermediate resonance at omega = " + std::to_string(omega_n)),
          omega(omega), n(n), omega_n(omega_n) {}
    double omega;
    int n;          // principal quantum number of the resonant np state
    double omega_n; // exact resonance frequency
};

/// Evaluation requested exactly on a branch point of the kernel.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Adaptive refinement could not reach the requested tolerance.
class QuadratureFailure : public Error {
public:
    QuadratureFailure(double achieved, double requested)
        : Error("quadrature stalled at error " + std::to_string(achieved) +
                " (requested " + std::to_string(requested) + ")"),
          achieved(achieved), requested(requested) {}
    double achieved;
    double requested;
};

/// The radial boundary-value solve did not produce an admissible solution.
class NonConvergence : public Error {
public:
    explicit NonConvergence(const std::string& msg) : Error(msg) {}
};

} // namespace polaris
