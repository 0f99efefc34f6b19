#pragma once

// Adaptive Gauss-Kronrod (G7/K15) quadrature for complex-valued integrands
// on a real parameter interval.  Worst-interval-first refinement on a global
// error budget; evaluation order is deterministic.

#include <cmath>
#include <complex>
#include <vector>

#include "polaris/errors.hpp"

namespace polaris {

struct QuadratureOptions {
    double abs_tol = 1e-15;
    double rel_tol = 1e-13;
    int max_depth = 60;       // bisection depth cap per interval
    int max_intervals = 4096; // total subdivision cap
};

namespace detail {

// G7/K15 nodes and weights on [-1,1].
// column 0: node, column 1: Gauss weight (0 for Kronrod-only), column 2: Kronrod weight
constexpr double kGK15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
std::complex<double> gk15(const F& f, double a, double b, double& err) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    std::complex<double> y0 = f(mid);
    std::complex<double> g7 = kGK15[0][1] * y0;
    std::complex<double> k15 = kGK15[0][2] * y0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15[i][0];
        const std::complex<double> yi = f(mid + dx) + f(mid - dx);
        g7 += kGK15[i][1] * yi;
        k15 += kGK15[i][2] * yi;
    }
    g7 *= half;
    k15 *= half;
    // raw |K15-G7| difference; deliberately not sharpened, the integrands
    // here can have endpoint derivative singularities
    err = std::abs(k15 - g7);
    return k15;
}

struct Segment {
    double a, b;
    std::complex<double> value;
    double err;
    int depth;
};

} // namespace detail

/// Integrate a complex-valued function of a real parameter over [a,b].
template <class F>
std::complex<double> integrate(const F& f, double a, double b,
                               const QuadratureOptions& opt = {}) {
    if (a == b) return {0.0, 0.0};
    std::vector<detail::Segment> segs;
    segs.reserve(64);
    {
        double err;
        auto v = detail::gk15(f, a, b, err);
        segs.push_back({a, b, v, err, 0});
    }
    for (;;) {
        std::complex<double> total{0.0, 0.0};
        double toterr = 0.0;
        for (const auto& s : segs) {
            total += s.value;
            toterr += s.err;
        }
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
        if (toterr <= tol) return total;
        // split the worst segment (leftmost on ties, for determinism)
        size_t worst = 0;
        for (size_t i = 1; i < segs.size(); ++i)
            if (segs[i].err > segs[worst].err) worst = i;
        if (static_cast<int>(segs.size()) >= opt.max_intervals ||
            segs[worst].depth >= opt.max_depth) {
            // refinement exhausted: accept if the residual error is merely
            // round-off level relative to the accumulated magnitude
            double mag = 0.0;
            for (const auto& s : segs) mag += std::abs(s.value);
            if (toterr <= 1e-12 * std::max(1e-300, mag)) return total;
            throw QuadratureFailure(toterr, tol);
        }
        const detail::Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        double e1, e2;
        const auto v1 = detail::gk15(f, s.a, mid, e1);
        const auto v2 = detail::gk15(f, mid, s.b, e2);
        segs[worst] = {s.a, mid, v1, e1, s.depth + 1};
        segs.push_back({mid, s.b, v2, e2, s.depth + 1});
    }
}

} // namespace polaris
