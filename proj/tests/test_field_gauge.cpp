#include <cmath>
#include <doctest.h>

#include "aclab/gauge.hpp"
#include "aclab/mesh.hpp"

using namespace aclab;

TEST_CASE("constant field on the unit disc has the closed-form potential")
{
    for (double beta : {0.0, 1.0, 3.0, -2.0}) {
        const GaugeData g = solve_radial_potential(FieldSpec::constant(beta), DomainSpec::disc(1.0));
        for (double r : {0.0, 0.3, 0.7, 1.0}) {
            CHECK(g.radial->phi(r) == doctest::Approx(beta * (r * r - 1.0) / 4.0).epsilon(1e-12));
            CHECK(g.radial->a(r) == doctest::Approx(beta * r / 2.0).epsilon(1e-12));
        }
        CHECK(g.flux[0] == doctest::Approx(beta / 2.0).epsilon(1e-12));
    }
}

TEST_CASE("annulus potential vanishes on both circles and matches the log-quadratic solution")
{
    // (1/r)(r phi')' = 2, phi(1/2) = phi(1) = 0: phi = r^2/2 + c log r - 1/2, c = -0.375 / log 2.
    const double c = -0.375 / std::log(2.0);
    const GaugeData g = solve_radial_potential(FieldSpec::constant(2.0), DomainSpec::annulus(0.5, 1.0));
    for (double r : {0.5, 0.6, 0.8, 1.0})
        CHECK(g.radial->phi(r) == doctest::Approx(r * r / 2.0 + c * std::log(r) - 0.5).scale(1.0).epsilon(1e-10));
    CHECK(g.flux[0] == doctest::Approx(1.0 + c).epsilon(1e-10));
    CHECK(g.flux[1] == doctest::Approx(-(0.25 + c)).epsilon(1e-10));
    CHECK(g.flux[0] == doctest::Approx(0.45899).epsilon(1e-4));
    CHECK(g.flux[1] == doctest::Approx(0.29101).epsilon(1e-4));
    CHECK(g.total_flux == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("Stokes identity: per-component fluxes add up to the field flux")
{
    const FieldSpec b = FieldSpec::radial([](double r) { return 1.0 + r * r; }, "1+r^2");
    const DomainSpec ann = DomainSpec::annulus(0.3, 1.2);
    const GaugeData g = solve_radial_potential(b, ann);
    CHECK(g.flux[0] + g.flux[1] == doctest::Approx(field_flux(b, ann)).epsilon(1e-10));
    const GaugeData f = solve_potential_2d(b, ann, 4);
    // Residual flux is exact for the polygon; the gap to the curved domain is O(h^2).
    CHECK(f.flux[0] + f.flux[1] == doctest::Approx(field_flux(b, ann)).epsilon(1e-3));
    CHECK(f.flux[0] == doctest::Approx(g.flux[0]).epsilon(2e-3));
    CHECK(f.flux[1] == doctest::Approx(g.flux[1]).epsilon(2e-3));
}

TEST_CASE("finite-element gauge on the disc reproduces beta/2")
{
    for (double beta : {1.0, 4.0}) {
        const GaugeData g = solve_potential_2d(FieldSpec::constant(beta), DomainSpec::disc(1.0), 4);
        CHECK(std::abs(g.flux[0] - beta / 2.0) <= 1e-3 * beta);
        CHECK(g.diagnostics.boundary_phi <= 1e-12);
    }
    const GaugeData z = solve_potential_2d(FieldSpec::constant(0.0), DomainSpec::disc(1.0), 3);
    CHECK(z.nodal_phi.cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("field -4 x2 gives the explicit cubic potential and A_tau = -sin s")
{
    const FieldSpec b = FieldSpec::analytic([](const Vec2& x) { return -4.0 * x.y(); }, "-4x2");
    const GaugeData g = solve_potential_2d(b, DomainSpec::disc(1.0), 5);
    double err = 0.0;
    for (int i = 0; i < g.mesh->num_nodes(); ++i) {
        const Vec2& x = g.mesh->nodes[i];
        err = std::max(err, std::abs(g.nodal_phi[i] - 0.5 * x.y() * (1.0 - x.squaredNorm())));
    }
    CHECK(err < 2e-3);
    CHECK(std::abs(g.flux[0]) < 1e-8);
    const PeriodicFunction at = g.tangential_trace(0);
    double trace_err = 0.0;
    for (int k = 0; k < 32; ++k) {
        const double s = two_pi * k / 32;
        trace_err = std::max(trace_err, std::abs(at(s) + std::sin(s)));
    }
    CHECK(trace_err < 2e-2);
}

TEST_CASE("finite-element gauge identities converge under refinement")
{
    // A is the recovered (continuous P1) gradient: div A, nu.A and the boundary-quadrature flux gap are
    // discretization errors that must shrink level by level; the residual flux converges at O(h^2).
    const FieldSpec b = FieldSpec::analytic([](const Vec2& x) { return 2.0 + x.x(); }, "2+x1");
    const DomainSpec D = DomainSpec::mapped_disc(ConformalMap({Complex(0.2, 0.0)}));
    GaugeDiagnostics prev;
    double prev_err = 0.0;
    for (int level : {2, 3, 4}) {
        const GaugeData g = solve_potential_2d(b, D, level);
        const double err = std::abs(g.total_flux - g.field_flux);
        // (1/2pi)(2 |Omega| + int x1), with |Omega| = 1.08 pi and int x1 = Re int_D F |F'|^2 = 0.2 pi.
        CHECK(g.field_flux == doctest::Approx(1.08 + 0.1).epsilon(1e-10));
        CHECK(g.diagnostics.boundary_phi < 1e-12);
        if (level > 2) {
            CHECK(g.diagnostics.div_residual < 0.8 * prev.div_residual);
            CHECK(g.diagnostics.curl_residual < 0.8 * prev.curl_residual);
            CHECK(g.diagnostics.normal_residual < 0.6 * prev.normal_residual);
            CHECK(g.diagnostics.quadrature_flux_gap < 0.6 * prev.quadrature_flux_gap);
            CHECK(err < 0.35 * prev_err);
        }
        prev = g.diagnostics;
        prev_err = err;
    }
    CHECK(prev.div_residual < 0.05);
    CHECK(prev_err < 1e-3);
}

TEST_CASE("Robin fluxes")
{
    const DomainSpec disc = DomainSpec::disc(1.0);
    CHECK(robin_fluxes(RobinSpec::neumann(), disc).total == 0.0);
    CHECK(robin_fluxes(RobinSpec::uniform(0.7), disc).total == doctest::Approx(0.7).epsilon(1e-14));
    const RobinSpec cosine = RobinSpec::per_component({PeriodicFunction::trig(two_pi, TrigSeries{0.0, {1.0}, {}})});
    CHECK(std::abs(robin_fluxes(cosine, disc).total) < 1e-14);
    const DomainSpec ann = DomainSpec::annulus(0.5, 1.0);
    const RobinFluxes rf = robin_fluxes(RobinSpec::uniform(1.0), ann);
    CHECK(rf.per_component[0] == doctest::Approx(1.0));
    CHECK(rf.per_component[1] == doctest::Approx(0.5));
}

TEST_CASE("invalid gauge inputs are rejected")
{
    CHECK_THROWS_AS(DomainSpec::annulus(1.0, 0.5), InvalidInput);
    CHECK_THROWS_AS(DomainSpec::disc(-1.0), InvalidInput);
    CHECK_THROWS_AS(RobinSpec::per_component({PeriodicFunction::constant(1.0, 0.0)}).check_against(DomainSpec::disc(1.0)),
                    InvalidInput);
}
