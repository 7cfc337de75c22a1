#include <cmath>
#include <doctest.h>

#include "aclab/radial_fibers.hpp"

using namespace aclab;

namespace {

RadialGauge disc_gauge(double beta, double R = 1.0) { return RadialGauge(FieldSpec::constant(beta), 0.0, R); }

} // namespace

TEST_CASE("fiber counts for beta = 3 on the unit disc")
{
    const RadialGauge g = disc_gauge(3.0);
    CHECK(fiber_count(0, g, {}).count.count_negative == 1);
    CHECK(fiber_count(1, g, {}).count.count_negative == 1);
    CHECK(fiber_count(2, g, {}).count.count_negative == 0);
    CHECK(fiber_count(-1, g, {}).count.count_negative == 0);
    const RadialTotal t = total_count(g, {});
    CHECK(t.total.count_negative == 2);
    CHECK(t.total.certificate.passed);
    CHECK(t.total.consistent());
}

TEST_CASE("zero field has no negative fibers")
{
    const RadialGauge g = disc_gauge(0.0);
    for (int m = -3; m <= 3; ++m) CHECK(fiber_count(m, g, {}).count.count_negative == 0);
    CHECK(total_count(g, {}).total.count_negative == 0);
}

TEST_CASE("Gaussian field 4 exp(-r^2): flux 2(1 - 1/e) and two negative eigenvalues")
{
    const FieldSpec b = FieldSpec::radial([](double r) { return 4.0 * std::exp(-r * r); }, "gauss");
    const RadialGauge g(b, 0.0, 1.0);
    CHECK(g.total_flux() == doctest::Approx(2.0 * (1.0 - std::exp(-1.0))).epsilon(1e-10));
    CHECK(total_count(g, {}).total.count_negative == 2);
}

TEST_CASE("disc staircase equals ceil(beta/2)")
{
    for (double beta : {0.5, 1.0, 2.0, 3.0, 4.2, 6.0, 7.9, 13.0}) {
        const RadialTotal t = total_count(disc_gauge(beta), {});
        CHECK(t.total.count_negative == static_cast<int>(std::ceil(beta / 2.0)));
    }
}

TEST_CASE("non-monotone field: the m = -1 potential dips below zero but the fiber stays nonnegative")
{
    const double delta = 0.05;
    const double beta = 48.0 / std::pow(1.0 + 12.0 * delta, 2);
    const FieldSpec b = FieldSpec::radial([=](double r) { return beta * ((r - 0.5) * (r - 0.5) + delta); }, "bump");
    const RadialGauge g(b, 0.0, 1.0);
    const double a = g.a(1.0);
    CHECK((1.0 + a) * (1.0 + a) - b.radial_value(1.0) == doctest::Approx(1.0 - 4.0 / std::pow(1.0 + 12.0 * delta, 2)));
    const FiberResult f = fiber_count(-1, g, {});
    CHECK(f.count.count_negative == 0);
}

TEST_CASE("zero-mode derivative (m - Phi) R^(m-1)")
{
    const auto z1 = zero_mode_derivative(1, disc_gauge(2.0));
    CHECK(std::abs(z1.exact) < 1e-14);
    CHECK(std::abs(z1.numeric) < 1e-6);
    const auto z0 = zero_mode_derivative(0, disc_gauge(0.0));
    CHECK(z0.exact == 0.0);
    const auto z2 = zero_mode_derivative(2, disc_gauge(3.0));
    CHECK(z2.exact == doctest::Approx(0.5));
    CHECK(z2.numeric == doctest::Approx(0.5).epsilon(1e-6));
    const auto zr = zero_mode_derivative(3, disc_gauge(1.0, 1.5));
    CHECK(zr.numeric == doctest::Approx(zr.exact).epsilon(1e-6));
}

TEST_CASE("Feynman-Hellmann slope is negative at the zero-mode crossing")
{
    const FieldSpec one = FieldSpec::constant(1.0);
    const FeynmanHellmann f0 = feynman_hellmann_slope(0, one, 1.0);
    CHECK(f0.slope < 0.0);
    // m = 0, B = 1: slope = -int B |u0|^2 r dr with u0 constant normalized in L2(r dr) = 2/R^2... = -1.
    CHECK(f0.slope == doctest::Approx(-1.0).epsilon(1e-6));
    const FeynmanHellmann f1 = feynman_hellmann_slope(1, FieldSpec::constant(2.0), 1.0);
    CHECK(f1.slope < 0.0);
    CHECK(f1.beta_star == doctest::Approx(1.0)); // the profile B = 2 already carries flux 1
    CHECK(std::abs(f1.eigenvalue) < 1e-6);
    CHECK_THROWS_AS(feynman_hellmann_slope(1, FieldSpec::constant(0.0), 1.0), InvalidInput);
}

TEST_CASE("Galerkin counts are monotone under nested refinement")
{
    for (double beta : {3.0, 7.9, 20.0}) {
        const RadialGauge g = disc_gauge(beta);
        int prev = -1;
        for (int n : {256, 512, 1024, 2048}) {
            FiberOptions opt;
            opt.n = n;
            const int c = total_count(g, {}, opt).total.count_negative;
            CHECK(c >= prev);
            prev = c;
        }
        CHECK(prev == static_cast<int>(std::ceil(beta / 2.0)));
    }
}

TEST_CASE("negative fibers are nonnegative and fibers at or above the flux have no negatives")
{
    const FieldSpec b = FieldSpec::radial([](double r) { return 6.0 - 2.0 * r; }, "6-2r");
    const RadialGauge g(b, 0.0, 1.0);
    FiberOptions opt;
    opt.basis = FiberBasis::Plain;
    for (int m = -4; m <= -1; ++m) CHECK(fiber_count(m, g, {}, opt).lowest.front() >= -1e-8);
    const int top = static_cast<int>(std::ceil(g.total_flux()));
    for (int m = top; m <= top + 3; ++m) CHECK(fiber_count(m, g, {}).count.count_negative == 0);
}

TEST_CASE("zero mode at integer flux is resolved to 1e-6")
{
    FiberOptions opt;
    opt.basis = FiberBasis::Plain;
    const FiberResult f = fiber_count(1, disc_gauge(2.0), {}, opt);
    CHECK(std::abs(f.lowest.front()) <= 1e-6);
    const FiberResult w = fiber_count(1, disc_gauge(2.0), {});
    CHECK(w.critical);
    CHECK(w.count.count_negative == 0);
}

TEST_CASE("plain and ground-state bases agree away from criticality")
{
    const RadialGauge g = disc_gauge(3.0);
    for (int m = 0; m <= 2; ++m) {
        FiberOptions plain;
        plain.basis = FiberBasis::Plain;
        const FiberResult a = fiber_count(m, g, {}, plain);
        const FiberResult b = fiber_count(m, g, {});
        CHECK(a.count.count_negative == b.count.count_negative);
        CHECK(a.lowest.front() == doctest::Approx(b.lowest.front()).epsilon(1e-5));
    }
}

TEST_CASE("annulus fibers: B = 8 on (0.5, 1) gives the bound")
{
    const RadialGauge g(FieldSpec::constant(8.0), 0.5, 1.0);
    const RadialTotal t = total_count(g, {});
    const int bound = -1 + static_cast<int>(std::ceil(g.flux_outer())) + static_cast<int>(std::ceil(g.flux_inner()));
    CHECK(t.total.count_negative >= bound);
    CHECK(t.total.count_negative == 4);
}

TEST_CASE("Robin coefficient shifts the count")
{
    const RadialGauge g = disc_gauge(3.0);
    CHECK(total_count(g, RadialBoundary{-0.5, 0.0}).total.count_negative == 2);
    CHECK(total_count(g, RadialBoundary{0.5, 0.0}).total.count_negative == 1);
}

TEST_CASE("removing the origin dof for m = 0 is rejected")
{
    FiberOptions opt;
    opt.origin = OriginDof::Remove;
    opt.basis = FiberBasis::Plain;
    CHECK_THROWS_AS(fiber_count(0, disc_gauge(1.0), {}, opt), InvalidInput);
}

TEST_CASE("a fiber cutoff below the flux is rejected")
{
    CHECK_THROWS_AS(total_count(disc_gauge(12.0), {}, {}, 2), InvalidInput);
    CHECK(total_count(disc_gauge(12.0), {}, {}, 6).total.certificate.passed);
}
