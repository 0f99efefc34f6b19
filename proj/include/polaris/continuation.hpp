#pragma once

// Reduced integrals
//   I(p,q,lambda,n)  = n! C(lambda)  int_lambda^1  (s+l)^(p+1/l) (s-l)^(q-1/l) / (1+s)^(n+1) ds
//   I~(p,q,lambda~,n) = n! C~(lambda~) int_1^lambda~ (l+s)^(p+1/l) (l-s)^(q-1/l) / (1+s)^(n+1) ds
// with analytic continuation of the plain integral past the s = lambda
// endpoint singularity via the partial-integration recurrence
//   I(p,q,n) = [ n! K(p,q+1,l,1)/2^(n+1) + I(p,q+1,n+1) - (p+1/l) I(p-1,q+1,n) ]
//              / (q+1-1/l)
// applied until Re(q-1/l) > sigma_min.  Internally the integrals are carried
// in the scaled form Ihat = I (1+l)^(n+1)/n! so that deep continuations stay
// inside double range.

#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <tuple>
#include <vector>

#include "polaris/kernel.hpp"
#include "polaris/quadrature.hpp"

namespace polaris {

enum class IntegralKind { Plain, Tilde };

struct IntegralSpec {
    int p = 1;
    int q = 1;
    int n = 4; // radial power of the e^{-2r} r^n weight
    IntegralKind kind = IntegralKind::Plain;
};

struct ContinuationReport {
    int depth = 0;                 // recurrence applications
    double min_denominator = std::numeric_limits<double>::infinity();
    bool near_resonance = false;   // min_denominator < warn_band
};

struct ContinuationOptions {
    // Continue until Re(q - 1/lambda) > sigma_min.  Existence only needs
    // > -1; one margin unit past zero leaves a C^1 integrand at s = lambda,
    // which the cubic endpoint substitution then renders fully smooth.
    double sigma_min = 1.0;
    double delta_pole = 1e-10; // hard pole rejection on |q+1-1/lambda|
    double warn_band = 1e-4;   // near_resonance reporting band
    QuadratureOptions quad{};
    // Optional interior waypoints for the plain contour from lambda to 1
    // (used to validate contour independence above threshold).
    std::vector<Complex> detour{};
};

/// Intermediate-resonance frequencies omega_n = (1 - 1/n^2)/2, n = 2..n_max.
inline std::vector<double> resonance_locator(int n_max) {
    if (n_max < 2)
        throw DomainError("resonance_locator requires n_max >= 2");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n_max) - 1);
    for (int n = 2; n <= n_max; ++n)
        out.push_back(0.5 * (1.0 - 1.0 / (double(n) * double(n))));
    return out;
}

namespace detail {

// One straight contour segment of the scaled plain integrand:
//   pref * (s+l)^(p+1/l) (s-l)^(q-1/l) ((1+l)/(1+s))^(n+1)
// Segments starting at the branch point s = lambda are parametrized as
// s = lambda + x^3 (b - lambda), which maps the residual (s-l)^(q-1/l)
// endpoint behaviour onto a smooth function of x.
inline Complex plain_segment(Complex pref, int p, int q, int n, Complex lam,
                             Complex a, Complex b, const QuadratureOptions& quad) {
    const Complex il = 1.0 / lam;
    const Complex pe = double(p) + il;
    const Complex qe = double(q) - il;
    const Complex np1 = double(n + 1);
    const bool from_branch = (a == lam);
    auto f = [&](double t) -> Complex {
        const double u = from_branch ? t * t * t : t;
        const double jac = from_branch ? 3.0 * t * t : 1.0;
        const Complex s = a + u * (b - a);
        const Complex sml = s - lam;
        Complex smf;
        if (sml == Complex(0.0, 0.0))
            smf = Complex(0.0, 0.0); // endpoint, Re(qe) > 0 after continuation
        else
            smf = cpow(sml, qe);
        return cpow(s + lam, pe) * smf * cpow((1.0 + lam) / (1.0 + s), np1) *
               (jac * (b - a));
    };
    return pref * integrate(f, 0.0, 1.0, quad);
}

class PlainEvaluator {
public:
    PlainEvaluator(Complex lam, double omega, const ContinuationOptions& opt)
        : lam_(lam), il_(1.0 / lam), omega_(omega), opt_(opt),
          pref_(kernel_prefactor(lam)) {}

    // Scaled integral Ihat(p,q,n) = I(p,q,lambda,n) (1+lambda)^(n+1) / n!
    Complex eval(int p, int q, int n, ContinuationReport& rep) {
        const auto key = std::make_tuple(p, q, n);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        Complex val;
        if (std::real(double(q) - il_) > opt_.sigma_min) {
            val = leaf(p, q, n);
        } else {
            const Complex den = double(q) + 1.0 - il_;
            const double aden = std::abs(den);
            if (aden < opt_.delta_pole) {
                const int nres = q + 1;
                throw ResonancePole(omega_, nres,
                                    0.5 * (1.0 - 1.0 / (double(nres) * double(nres))));
            }
            if (aden < rep.min_denominator) rep.min_denominator = aden;
            // scaled form of the partial-integration recurrence
            const Complex boundary =
                cpow(0.5 * (1.0 + lam_), double(n + 1)) *
                kernel_k({p, q + 1}, lam_, Complex(1.0, 0.0));
            val = (boundary +
                   (double(n + 1) / (1.0 + lam_)) * eval(p, q + 1, n + 1, rep) -
                   (double(p) + il_) * eval(p - 1, q + 1, n, rep)) /
                  den;
        }
        memo_[key] = val;
        return val;
    }

private:
    Complex leaf(int p, int q, int n) {
        Complex total{0.0, 0.0};
        Complex a = lam_;
        std::vector<Complex> pts = opt_.detour;
        pts.push_back(Complex(1.0, 0.0));
        for (const Complex& b : pts) {
            total += plain_segment(pref_, p, q, n, lam_, a, b, opt_.quad);
            a = b;
        }
        return total;
    }

    Complex lam_;
    Complex il_;
    double omega_;
    const ContinuationOptions& opt_;
    Complex pref_;
    std::map<std::tuple<int, int, int>, Complex> memo_;
};

inline Complex tilde_integral(int p, int q, int n, double lamt,
                              const QuadratureOptions& quad) {
    const double il = 1.0 / lamt;
    const double pref = std::pow((lamt - 1.0) / (lamt + 1.0), il);
    const double pe = double(p) + il;
    const double qe = double(q) - il; // > 0 for q >= 1 since lamt > 1
    // substitute s = lamt - x^3 (lamt - 1) to smooth the (lamt-s)^qe endpoint
    const double span = lamt - 1.0;
    auto f = [&](double x) -> Complex {
        const double lms = x * x * x * span;
        const double s = lamt - lms;
        const double lf = lms > 0.0 ? std::pow(lms, qe) : 0.0;
        return Complex(std::pow(lamt + s, pe) * lf /
                           std::pow(1.0 + s, double(n + 1)) *
                           3.0 * x * x * span,
                       0.0);
    };
    double nfact = 1.0;
    for (int k = 2; k <= n; ++k) nfact *= double(k);
    return nfact * pref * integrate(f, 0.0, 1.0, quad);
}

} // namespace detail

struct IntegralResult {
    Complex value;
    ContinuationReport report;
};

/// Evaluate a reduced integral, continuing the plain kind past endpoint
/// singularities with the recurrence.  The tilde kind never needs
/// continuation for q >= 1.
inline IntegralResult integral_i(const IntegralSpec& spec, const BranchedLambda& bl,
                                 const ContinuationOptions& opt = {}) {
    if (spec.n < 0)
        throw DomainError("integral_i requires n >= 0");
    IntegralResult res;
    if (spec.kind == IntegralKind::Tilde) {
        res.value = detail::tilde_integral(spec.p, spec.q, spec.n,
                                           bl.lambda_tilde, opt.quad);
        return res;
    }
    detail::PlainEvaluator ev(bl.lambda, bl.omega, opt);
    const Complex scaled = ev.eval(spec.p, spec.q, spec.n, res.report);
    // undo the (1+lambda)^(n+1)/n! scaling at the root
    double nfact = 1.0;
    for (int k = 2; k <= spec.n; ++k) nfact *= double(k);
    res.value = scaled * nfact / detail::cpow(1.0 + bl.lambda, double(spec.n + 1));
    // depth of the continuation chain: q was raised until Re(q-1/l) > sigma_min
    // (strictly), i.e. the smallest d with d > Re(1/l) + sigma_min - q
    const double need = std::real(1.0 / bl.lambda) + opt.sigma_min - double(spec.q);
    res.report.depth = need >= 0.0 ? static_cast<int>(std::floor(need)) + 1 : 0;
    res.report.near_resonance = res.report.min_denominator < opt.warn_band;
    return res;
}

} // namespace polaris
