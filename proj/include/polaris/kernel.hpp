#pragma once

// Branch-resolved complex parameters lambda = sqrt(1-2w), lambda~ = sqrt(1+2w)
// and the kernel functions K, K~ built from them.  All complex powers are
// principal-branch: z^w = exp(w Log z), arg in (-pi, pi].

#include <cmath>
#include <complex>

#include "polaris/errors.hpp"

namespace polaris {

using Complex = std::complex<double>;

/// Photon frequency in atomic units (Hartree).  Strictly positive and kept
/// outside a configurable guard band around the threshold omega = 1/2.
struct PhotonFrequency {
    double omega;

    explicit PhotonFrequency(double w) : omega(w) {
        if (!(w > 0.0))
            throw DomainError("photon frequency must be positive, got " +
                              std::to_string(w));
    }
};

enum class Regime {
    BelowThreshold, // w < 1/2: lambda real in (0,1)
    AboveThreshold  // w > 1/2: lambda = +i sqrt(2w-1)
};

struct BranchedLambda {
    Complex lambda;       // sqrt(1-2w), continued to +i sqrt(2w-1) above threshold
    double lambda_tilde;  // sqrt(1+2w), real > 1 for all w > 0
    Regime regime;
    double omega;

    Complex inv_lambda() const { return 1.0 / lambda; }
};

constexpr double kDefaultThresholdBand = 1e-6;

/// Resolve lambda and lambda~ for a frequency.  Rejects omega inside the
/// threshold guard band, where 1/lambda is too large for double precision.
inline BranchedLambda lambda_pair(PhotonFrequency f,
                                  double threshold_band = kDefaultThresholdBand) {
    const double w = f.omega;
    if (std::abs(w - 0.5) < threshold_band)
        throw ThresholdProximity(w, threshold_band);
    BranchedLambda bl;
    bl.omega = w;
    bl.lambda_tilde = std::sqrt(1.0 + 2.0 * w);
    if (w < 0.5) {
        bl.lambda = Complex(std::sqrt(1.0 - 2.0 * w), 0.0);
        bl.regime = Regime::BelowThreshold;
    } else {
        // +i branch: the continuation consistent with the retarded pole
        // prescription; gives Im tau > 0 above threshold.
        bl.lambda = Complex(0.0, std::sqrt(2.0 * w - 1.0));
        bl.regime = Regime::AboveThreshold;
    }
    return bl;
}

/// Integer exponent offsets (p, q) of the kernels.
struct KernelParams {
    int p;
    int q;
};

namespace detail {

// z^w via the principal logarithm, with the real-positive fast path.
inline Complex cpow(Complex z, Complex w) {
    if (z.imag() == 0.0 && z.real() > 0.0 && w.imag() == 0.0)
        return Complex(std::pow(z.real(), w.real()), 0.0);
    return std::exp(w * std::log(z));
}

} // namespace detail

/// Kernel prefactor ((1-lambda)/(1+lambda))^(1/lambda).
inline Complex kernel_prefactor(Complex lam) {
    return detail::cpow((1.0 - lam) / (1.0 + lam), 1.0 / lam);
}

/// K(p,q,lambda,s) = ((1-l)/(1+l))^(1/l) (s+l)^(p+1/l) (s-l)^(q-1/l)
inline Complex kernel_k(KernelParams pq, Complex lam, Complex s) {
    const Complex il = 1.0 / lam;
    if (s == lam && std::real(Complex(pq.q) - il) < 0.0)
        throw DomainError("kernel K evaluated on the branch point s = lambda");
    if (s == -lam && std::real(Complex(pq.p) + il) < 0.0)
        throw DomainError("kernel K evaluated on the branch point s = -lambda");
    return kernel_prefactor(lam) *
           detail::cpow(s + lam, double(pq.p) + il) *
           detail::cpow(s - lam, double(pq.q) - il);
}

/// K~(p,q,lambda~,s) = ((l-1)/(l+1))^(1/l) (l+s)^(p+1/l) (l-s)^(q-1/l);
/// real for 1 <= s <= lambda~ since lambda~ > 1.
inline double kernel_k_tilde(KernelParams pq, double lamt, double s) {
    const double il = 1.0 / lamt;
    if (s == lamt && double(pq.q) - il < 0.0)
        throw DomainError("kernel K~ evaluated at the singular endpoint s = lambda~");
    const double pref = std::pow((lamt - 1.0) / (lamt + 1.0), il);
    return pref * std::pow(lamt + s, double(pq.p) + il) *
           std::pow(lamt - s, double(pq.q) - il);
}

} // namespace polaris
