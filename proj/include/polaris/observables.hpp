#pragma once

// Physical observables assembled from the reduced integrals:
//   tau2(w) = 2/(3 w^3) [ I~(1,1,lt,4) - I(1,1,l,4) ]
//   M(w)    = 1 - 2/(3 w^2) [ I(1,1,l,3) + I~(1,1,lt,3) ]
// plus the Stark shift/width and elastic photon-scattering cross sections
// derived from them.  M(w) = w^2 tau2(w) holds identically (gauge check).

#include <cmath>
#include <complex>

#include "polaris/continuation.hpp"

namespace polaris {

enum class Observable { Tau2, KHMatrix, PTerm };

struct ComplexResponse {
    Complex value;
    Observable observable;
    double omega;
    ContinuationReport report;
};

struct EvalOptions {
    double threshold_band = kDefaultThresholdBand;
    ContinuationOptions continuation{};

    // Small-omega policy: tighten the quadrature below this frequency to
    // survive the w^3 cancellation between the two integral sectors.
    double small_omega = 2e-3;
    double small_omega_tol = 1e-14;

    ContinuationOptions effective(double w) const {
        ContinuationOptions c = continuation;
        if (w < small_omega) {
            c.quad.abs_tol = std::min(c.quad.abs_tol, small_omega_tol);
            c.quad.rel_tol = std::min(c.quad.rel_tol, small_omega_tol);
        }
        return c;
    }
};

/// Dipole dynamic polarizability tau^(2)(omega).
inline ComplexResponse tau2(PhotonFrequency f, const EvalOptions& opt = {}) {
    const BranchedLambda bl = lambda_pair(f, opt.threshold_band);
    const ContinuationOptions copt = opt.effective(f.omega);
    const auto plain = integral_i({1, 1, 4, IntegralKind::Plain}, bl, copt);
    const auto tilde = integral_i({1, 1, 4, IntegralKind::Tilde}, bl, copt);
    const double w = f.omega;
    return {2.0 / (3.0 * w * w * w) * (tilde.value - plain.value),
            Observable::Tau2, w, plain.report};
}

/// Kramers-Heisenberg matrix element M(omega).
inline ComplexResponse kh_matrix(PhotonFrequency f, const EvalOptions& opt = {}) {
    const BranchedLambda bl = lambda_pair(f, opt.threshold_band);
    const ContinuationOptions copt = opt.effective(f.omega);
    const auto plain = integral_i({1, 1, 3, IntegralKind::Plain}, bl, copt);
    const auto tilde = integral_i({1, 1, 3, IntegralKind::Tilde}, bl, copt);
    const double w = f.omega;
    return {1.0 - 2.0 / (3.0 * w * w) * (plain.value + tilde.value),
            Observable::KHMatrix, w, plain.report};
}

/// Single-sign dispersion term P, defined so that
/// M(w) = 1 - P(w) - P(-w) holds exactly.  For x > 0 this is the
/// absorption-first sector (plain integral); for x < 0 the emission-first
/// sector (tilde integral, since lambda(-|x|) = lambda~(|x|)).
inline ComplexResponse p_term(double omega_signed, const EvalOptions& opt = {}) {
    if (omega_signed == 0.0)
        throw DomainError("p_term requires a nonzero signed frequency");
    const double w = std::abs(omega_signed);
    const BranchedLambda bl = lambda_pair(PhotonFrequency(w), opt.threshold_band);
    const ContinuationOptions copt = opt.effective(w);
    const double pref = 2.0 / (3.0 * w * w);
    if (omega_signed > 0.0) {
        const auto plain = integral_i({1, 1, 3, IntegralKind::Plain}, bl, copt);
        return {pref * plain.value, Observable::PTerm, omega_signed, plain.report};
    }
    const auto tilde = integral_i({1, 1, 3, IntegralKind::Tilde}, bl, copt);
    return {pref * tilde.value, Observable::PTerm, omega_signed, tilde.report};
}

/// Characteristic atomic field strength intensity, W/cm^2.
constexpr double kAtomicIntensity = 7.016e16;

struct StarkShift {
    double delta_e;   // level shift, atomic units
    double gamma;     // level width, atomic units (>= 0 above threshold)
    double intensity; // W/cm^2
};

/// Second-order ac-Stark shift and width at a given laser intensity:
/// delta E - i Gamma = -(I/I0) tau^(2)(omega).
inline StarkShift stark_shift(PhotonFrequency f, double intensity_w_cm2,
                              const EvalOptions& opt = {}) {
    if (intensity_w_cm2 < 0.0)
        throw DomainError("intensity must be non-negative");
    const ComplexResponse t = tau2(f, opt);
    const double ratio = intensity_w_cm2 / kAtomicIntensity;
    return {-ratio * t.value.real(), ratio * t.value.imag(), intensity_w_cm2};
}

struct CrossSection {
    double theta;    // scattering angle, radians
    double value;    // dsigma/dOmega in units of the squared length prefactor
    double msquared; // |M(omega)|^2
};

/// Polarized differential cross section, in units of the squared length
/// prefactor: (eps.eps')^2 |M|^2.
inline double cross_section_polarized(PhotonFrequency f, double eps_dot_eps_prime,
                                      const EvalOptions& opt = {}) {
    if (std::abs(eps_dot_eps_prime) > 1.0)
        throw DomainError("|eps . eps'| must not exceed 1");
    const Complex m = kh_matrix(f, opt).value;
    return eps_dot_eps_prime * eps_dot_eps_prime * std::norm(m);
}

/// Unpolarized differential cross section in units of r0^2:
/// (1/2)(1 + cos^2 theta) |M|^2.  Integrated over solid angle this gives
/// sigma/sigma_T = |M|^2.
inline CrossSection cross_section_unpolarized(PhotonFrequency f, double theta,
                                              const EvalOptions& opt = {}) {
    if (theta < 0.0 || theta > M_PI)
        throw DomainError("theta must lie in [0, pi]");
    const Complex m = kh_matrix(f, opt).value;
    const double m2 = std::norm(m);
    const double c = std::cos(theta);
    return {theta, 0.5 * (1.0 + c * c) * m2, m2};
}

} // namespace polaris
