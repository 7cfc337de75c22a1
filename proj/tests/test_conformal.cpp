#include <cmath>
#include <doctest.h>

#include "aclab/conformal.hpp"

using namespace aclab;

TEST_CASE("identity map leaves the data unchanged")
{
    const Pullback p = pullback(ConformalMap(), FieldSpec::constant(3.0), RobinSpec::uniform(0.2));
    for (const Vec2& x : {Vec2(0.0, 0.0), Vec2(0.3, -0.4), Vec2(0.9, 0.1)}) CHECK(p.field(x) == doctest::Approx(3.0));
    const PeriodicFunction g = p.robin.on_component(0, two_pi);
    CHECK(g(1.0) == doctest::Approx(0.2));
}

TEST_CASE("F = z + 0.2 z^2: pulled-back field and preserved fluxes")
{
    const ConformalMap F({Complex(0.2, 0.0)});
    const Pullback p = pullback(F, FieldSpec::constant(2.0), RobinSpec::uniform(0.5));
    for (const Vec2& x : {Vec2(0.1, 0.2), Vec2(-0.5, 0.5), Vec2(0.7, -0.1)}) {
        const Complex z(x.x(), x.y());
        CHECK(p.field(x) == doctest::Approx(2.0 * std::norm(1.0 + 0.4 * z)).epsilon(1e-12));
    }
    // |Omega| = pi (1 + 2 * 0.04).
    CHECK(p.flux_disc == doctest::Approx(2.0 * 1.08 / 2.0).epsilon(1e-10));
    CHECK(p.flux_gap() < 1e-8);
    CHECK(p.robin_gap() < 1e-8);
    CHECK(F.image_area() == doctest::Approx(1.08 * pi));
}

TEST_CASE("non-univalent maps are rejected")
{
    CHECK_THROWS_AS(ConformalMap({Complex(0.6, 0.0)}).check_univalent(), InvalidInput);
    CHECK_THROWS_AS(pullback(ConformalMap({Complex(0.0, 0.0), Complex(0.5, 0.0)}), FieldSpec::constant(1.0),
                             RobinSpec::neumann()),
                    InvalidInput);
}

TEST_CASE("counts agree across the map")
{
    const InvarianceResult id = invariance_check(ConformalMap(), FieldSpec::constant(3.0), RobinSpec::neumann(), 3);
    CHECK(id.image.count_negative == 2);
    CHECK(id.disc.count_negative == 2);
    const InvarianceResult a =
        invariance_check(ConformalMap({Complex(0.2, 0.0)}), FieldSpec::constant(3.0), RobinSpec::neumann(), 3);
    CHECK(a.equal());
    const InvarianceResult b = invariance_check(ConformalMap({Complex(0.0, 0.0), Complex(0.15, 0.0)}),
                                                FieldSpec::constant(5.0), RobinSpec::uniform(0.3), 3);
    CHECK(b.equal());
    CHECK(b.data.flux_gap() < 1e-8);
}
