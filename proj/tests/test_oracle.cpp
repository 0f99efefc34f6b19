#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "polaris/observables.hpp"
#include "polaris/ode_oracle.hpp"

using namespace polaris;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("radial solutions satisfy the defining equation") {
    const auto sf = solve_dalgarno(PhotonFrequency(0.1), RadialFunction::F);
    CHECK(ode_residual(sf) < 1e-8);
    const auto sut = solve_dalgarno(PhotonFrequency(0.3), RadialFunction::UTilde);
    CHECK(ode_residual(sut) < 1e-8);
}

TEST_CASE("momentum and length radial functions are linked") {
    // v = w f - 1 and v~ = -(w f~ + 1) pointwise (u = i v, u~ = i v~),
    // checked inside the region that the e^{-2r} weight can reach
    const double w = 0.2;
    const auto sf = solve_dalgarno(PhotonFrequency(w), RadialFunction::F);
    const auto su = solve_dalgarno(PhotonFrequency(w), RadialFunction::U);
    const auto sft = solve_dalgarno(PhotonFrequency(w), RadialFunction::FTilde);
    const auto sut = solve_dalgarno(PhotonFrequency(w), RadialFunction::UTilde);
    double worst = 0.0, worst_t = 0.0;
    for (size_t i = 0; i < sf.grid.size() && sf.grid[i] <= 20.0; ++i)
        worst = std::max(worst,
                         std::abs(su.real_at(i) - (w * sf.real_at(i) - 1.0)));
    for (size_t i = 0; i < sft.grid.size() && sft.grid[i] <= 20.0; ++i)
        worst_t = std::max(
            worst_t, std::abs(sut.real_at(i) + (w * sft.real_at(i) + 1.0)));
    CHECK(worst < 1e-6);
    CHECK(worst_t < 1e-6);
}

TEST_CASE("oracle agrees with the closed-form evaluation") {
    for (double w : {0.1, 0.3}) {
        CAPTURE(w);
        const PhotonFrequency f(w);
        const double t_oracle = oracle_tau2(f).real();
        const double t_closed = tau2(f).value.real();
        CHECK_THAT(t_oracle, WithinRel(t_closed, 1e-10));
        const double m_oracle = oracle_kh(f).real();
        const double m_closed = kh_matrix(f).value.real();
        CHECK_THAT(m_oracle, WithinRel(m_closed, 1e-10));
    }
}

TEST_CASE("oracle between the first two resonances") {
    OracleOptions opt;
    opt.allow_between_resonances = true;
    const PhotonFrequency f(0.45);
    CHECK_THAT(oracle_tau2(f, opt).real(),
               WithinRel(tau2(f).value.real(), 1e-6));
}

TEST_CASE("plain sector is guarded past the first resonance") {
    CHECK_THROWS_AS(solve_dalgarno(PhotonFrequency(0.4), RadialFunction::F),
                    NonConvergence);
    CHECK_NOTHROW(solve_dalgarno(PhotonFrequency(0.6), RadialFunction::FTilde));
}

TEST_CASE("momentum-sector profiles are purely imaginary") {
    const auto su = solve_dalgarno(PhotonFrequency(0.1), RadialFunction::U);
    for (size_t i = 0; i < su.values.size(); i += 500)
        CHECK(su.values[i].real() == 0.0);
    CHECK(su.is_momentum());
    CHECK_FALSE(su.is_tilde());
}
