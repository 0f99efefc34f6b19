#pragma once

// Independent validation path: solves the Dalgarno-Lewis radial equations
//   r y'' + (4-2r) y' + (2 w r - 2) y = S(r)      (plain sector)
//   r y'' + (4-2r) y' - (2 w r + 2) y = S(r)      (tilde sector)
// with S = 2r for the f / f~ functions and S = 2 for the (scaled) u / u~
// functions, directly on a radial grid, and computes tau^(2) and M by
// explicit radial quadrature.  No kernel or contour machinery is used, so
// this path cross-checks the closed-form evaluation end to end.
//
// Discretization: second-order central differences on a uniform grid, solved
// on h and h/2 and Richardson-combined to fourth order.  The inner boundary
// imposes the regularity condition 4 y'(0) - 2 y(0) = S(0) (the r -> 0 limit
// of the equation); the outer boundary takes the optimally truncated
// asymptotic power series in 1/r.  Both homogeneous solutions of the plain
// equation grow at infinity, so outer-boundary error is strongly damped in
// the interior; the bounded solution is unique below the first resonance.

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "polaris/errors.hpp"
#include "polaris/kernel.hpp"

namespace polaris {

enum class RadialFunction { F, FTilde, U, UTilde };

struct RadialSolution {
    std::vector<double> grid;     // ascending, r[0] = 0
    std::vector<Complex> values;  // f/f~ are real; u/u~ purely imaginary
    RadialFunction which;
    double omega;

    bool is_tilde() const {
        return which == RadialFunction::FTilde || which == RadialFunction::UTilde;
    }
    bool is_momentum() const {
        return which == RadialFunction::U || which == RadialFunction::UTilde;
    }
    /// The real radial profile (f, f~, or Im u, Im u~).
    double real_at(size_t i) const {
        return is_momentum() ? values[i].imag() : values[i].real();
    }
};

struct OracleOptions {
    double base_step = 2e-3;
    double rmax_override = 0.0;       // 0 = automatic
    bool allow_between_resonances = false; // permit 0.375 < w < 0.5 plain solves
};

namespace oracle_detail {

inline double coeff_c(bool tilde, double w, double r) {
    return tilde ? -(2.0 * w * r + 2.0) : (2.0 * w * r - 2.0);
}

// Asymptotic series y ~ sum_k d_k r^-k at the outer boundary, summed to the
// smallest term.  RHS index: S = 2r feeds k = 0, S = 2 feeds k = 1.
inline double asymptotic_value(bool tilde, bool rhs_linear, double w, double R) {
    const double sgn = tilde ? -1.0 : 1.0;
    std::vector<double> d;
    d.reserve(25);
    for (int k = 0; k < 25; ++k) {
        const double rhs_k =
            ((rhs_linear && k == 0) || (!rhs_linear && k == 1)) ? 2.0 : 0.0;
        const double dm1 = k >= 1 ? d[k - 1] : 0.0;
        const double dm2 = k >= 2 ? d[k - 2] : 0.0;
        d.push_back((rhs_k - double(2 * k - 4) * dm1 -
                     double((k - 2) * (k - 5)) * dm2) /
                    (2.0 * w * sgn));
    }
    double total = 0.0, prev = std::numeric_limits<double>::infinity();
    double rk = 1.0;
    for (int k = 0; k < 25; ++k) {
        const double term = d[k] * rk;
        if (k > 2 && std::abs(term) > prev) break;
        total += term;
        prev = std::abs(term);
        rk /= R;
    }
    return total;
}

// One tridiagonal FD solve at step h; returns y on the N+1 point grid.
inline std::vector<double> fd_solve(bool tilde, bool rhs_linear, double w,
                                    double rmax, size_t N) {
    const double h = rmax / double(N);
    std::vector<double> lo(N + 1), di(N + 1), up(N + 1), b(N + 1);
    // interior rows
    for (size_t i = 1; i < N; ++i) {
        const double r = h * double(i);
        lo[i] = r / (h * h) - (4.0 - 2.0 * r) / (2.0 * h);
        di[i] = -2.0 * r / (h * h) + coeff_c(tilde, w, r);
        up[i] = r / (h * h) + (4.0 - 2.0 * r) / (2.0 * h);
        b[i] = rhs_linear ? 2.0 * r : 2.0;
    }
    // inner boundary: 4 y'(0) - 2 y(0) = S(0) with the one-sided stencil
    // y'(0) = (-3 y0 + 4 y1 - y2)/(2h); y2 is eliminated with row 1 to keep
    // the system tridiagonal.
    {
        double a0 = -3.0 * 4.0 / (2.0 * h) - 2.0;
        double c0 = 4.0 * 4.0 / (2.0 * h);
        double e0 = -1.0 * 4.0 / (2.0 * h);
        double s0 = rhs_linear ? 0.0 : 2.0;
        // y2 = (b1 - lo1 y0 - di1 y1)/up1
        a0 -= e0 * lo[1] / up[1];
        c0 -= e0 * di[1] / up[1];
        s0 -= e0 * b[1] / up[1];
        di[0] = a0;
        up[0] = c0;
        b[0] = s0;
    }
    // outer boundary: Dirichlet from the asymptotic series
    lo[N] = 0.0;
    di[N] = 1.0;
    b[N] = asymptotic_value(tilde, rhs_linear, w, rmax);
    // Thomas sweep
    std::vector<double> y(N + 1);
    for (size_t i = 1; i <= N; ++i) {
        const double m = lo[i] / di[i - 1];
        di[i] -= m * up[i - 1];
        b[i] -= m * b[i - 1];
    }
    y[N] = b[N] / di[N];
    for (size_t i = N; i-- > 0;)
        y[i] = (b[i] - up[i] * y[i + 1]) / di[i];
    return y;
}

inline double auto_rmax(bool tilde, double w) {
    // Outer-boundary error decays inward at rate (1 - lambda) for the plain
    // sector; push the boundary out until the series is accurate and the
    // damping sufficient.  Tilde solves damp at rate >= 1 and need less.
    if (tilde) return 60.0;
    const double lam = w < 0.5 ? std::sqrt(1.0 - 2.0 * w) : 0.0;
    const double rate = std::max(1.0 - lam, 1e-2);
    return std::max(60.0, 40.0 + 30.0 / rate);
}

} // namespace oracle_detail

/// Solve one radial Dalgarno-Lewis equation, returning the Richardson-
/// combined (fourth-order) grid solution.
inline RadialSolution solve_dalgarno(PhotonFrequency f, RadialFunction which,
                                     const OracleOptions& opt = {}) {
    const double w = f.omega;
    const bool tilde = which == RadialFunction::FTilde ||
                       which == RadialFunction::UTilde;
    const bool rhs_linear = which == RadialFunction::F ||
                            which == RadialFunction::FTilde;
    if (!tilde && w >= 0.375 && !opt.allow_between_resonances)
        throw NonConvergence(
            "plain-sector oracle is restricted to omega < 0.375 (first "
            "intermediate resonance); set allow_between_resonances to "
            "evaluate between resonances");
    if (!tilde && w >= 0.5)
        throw NonConvergence("plain-sector oracle requires omega < 1/2");
    const double rmax = opt.rmax_override > 0.0
                            ? opt.rmax_override
                            : oracle_detail::auto_rmax(tilde, w);
    size_t N = static_cast<size_t>(std::ceil(rmax / opt.base_step));
    if (N % 2 == 1) ++N; // Simpson-friendly
    const auto coarse = oracle_detail::fd_solve(tilde, rhs_linear, w, rmax, N);
    const auto fine = oracle_detail::fd_solve(tilde, rhs_linear, w, rmax, 2 * N);

    RadialSolution sol;
    sol.which = which;
    sol.omega = w;
    sol.grid.resize(N + 1);
    sol.values.resize(N + 1);
    const double h = rmax / double(N);
    const bool momentum = !rhs_linear;
    for (size_t i = 0; i <= N; ++i) {
        sol.grid[i] = h * double(i);
        const double y = (4.0 * fine[2 * i] - coarse[i]) / 3.0;
        // u = i v: the momentum-sector profile is purely imaginary
        sol.values[i] = momentum ? Complex(0.0, y) : Complex(y, 0.0);
    }
    return sol;
}

namespace oracle_detail {

// Simpson integral of e^{-2r} r^pow y(r) over the solution grid.
inline double weighted_integral(const RadialSolution& s, int pow) {
    const size_t N = s.grid.size() - 1;
    const double h = s.grid[1] - s.grid[0];
    auto g = [&](size_t i) {
        const double r = s.grid[i];
        return std::exp(-2.0 * r) * std::pow(r, pow) * s.real_at(i);
    };
    double sum = g(0) + g(N);
    for (size_t i = 1; i < N; i += 2) sum += 4.0 * g(i);
    for (size_t i = 2; i < N; i += 2) sum += 2.0 * g(i);
    return sum * h / 3.0;
}

} // namespace oracle_detail

/// tau^(2) by radial quadrature: (4/3) int e^{-2r} r^4 (f + f~) dr.
inline Complex oracle_tau2(PhotonFrequency f, const OracleOptions& opt = {}) {
    const auto sf = solve_dalgarno(f, RadialFunction::F, opt);
    const auto sft = solve_dalgarno(f, RadialFunction::FTilde, opt);
    return Complex((oracle_detail::weighted_integral(sf, 4) +
                    oracle_detail::weighted_integral(sft, 4)) *
                       4.0 / 3.0,
                   0.0);
}

/// M by radial quadrature: 1 + (4/3) int e^{-2r} r^3 Im(u + u~) dr.
inline Complex oracle_kh(PhotonFrequency f, const OracleOptions& opt = {}) {
    const auto su = solve_dalgarno(f, RadialFunction::U, opt);
    const auto sut = solve_dalgarno(f, RadialFunction::UTilde, opt);
    return Complex(1.0 + (oracle_detail::weighted_integral(su, 3) +
                          oracle_detail::weighted_integral(sut, 3)) *
                             4.0 / 3.0,
                   0.0);
}

/// Scaled residual of the defining ODE at interior grid points, using
/// five-point stencils on the solved grid.  Returns the maximum over the
/// interior of |L[y] - S| / (1 + sum of term magnitudes).
inline double ode_residual(const RadialSolution& s) {
    const size_t N = s.grid.size() - 1;
    const double h = s.grid[1] - s.grid[0];
    const bool tilde = s.is_tilde();
    const bool rhs_linear = !s.is_momentum();
    double worst = 0.0;
    for (size_t i = 2; i + 2 <= N; ++i) {
        const double r = s.grid[i];
        auto y = [&](size_t j) { return s.real_at(j); };
        const double d1 = (y(i - 2) - 8.0 * y(i - 1) + 8.0 * y(i + 1) - y(i + 2)) /
                          (12.0 * h);
        const double d2 = (-y(i - 2) + 16.0 * y(i - 1) - 30.0 * y(i) +
                           16.0 * y(i + 1) - y(i + 2)) /
                          (12.0 * h * h);
        const double t1 = r * d2;
        const double t2 = (4.0 - 2.0 * r) * d1;
        const double t3 = oracle_detail::coeff_c(tilde, s.omega, r) * y(i);
        const double S = rhs_linear ? 2.0 * r : 2.0;
        const double res = t1 + t2 + t3 - S;
        const double scale = 1.0 + std::abs(t1) + std::abs(t2) + std::abs(t3) +
                             std::abs(S);
        worst = std::max(worst, std::abs(res) / scale);
    }
    return worst;
}

} // namespace polaris
