#include <cmath>
#include <random>
#include <doctest.h>

#include "aclab/ac_index.hpp"

using namespace aclab;

TEST_CASE("ceil_ac")
{
    CHECK(ceil_ac(1.5).value == 2);
    CHECK(ceil_ac(0.0).value == 0);
    CHECK(ceil_ac(-0.3).value == 0);
    CHECK(ceil_ac(2.0 + 1e-12).value == 2);
    CHECK(ceil_ac(2.0 + 1e-12).critical);
    CHECK_FALSE(ceil_ac(2.1).critical);
    CHECK(ceil_ac(-1.0).value == -1);
}

TEST_CASE("lower bound examples")
{
    CHECK(lower_bound(FluxLedger{0, {1.5}, {}}) == 2);
    CHECK(lower_bound(FluxLedger{1, {2.3, 0.4}, {}}) == 3);
    CHECK(lower_bound(FluxLedger{0, {-1.0}, {}}) == -1);
    CHECK(lower_bound(FluxLedger{0, {1.5}, {0.5}}) == 1);
    CHECK(lower_bound(FluxLedger{0, {1.5}, {-0.5}}) == 2);
    CHECK_THROWS_AS(lower_bound(FluxLedger{1, {1.5}, {}}), InvalidInput);
}

TEST_CASE("index examples")
{
    CHECK(aps_index(FluxLedger{0, {0.0}, {}}) == 0);
    CHECK(aps_index(FluxLedger{1, {2.3, 0.4}, {}}) == 3);
    CHECK(aps_index(FluxLedger{0, {1.5}, {}}) == 2);
}

TEST_CASE("eta term and the Grubb identity")
{
    CHECK(eta_term(FluxLedger{0, {1.5}, {}}) == doctest::Approx(0.0).scale(1.0));
    CHECK(grubb_index(FluxLedger{0, {1.5}, {}}) == doctest::Approx(2.0));
    CHECK(eta_term(FluxLedger{0, {2.0}, {}}) == doctest::Approx(0.5));
    CHECK(grubb_index(FluxLedger{0, {2.0}, {}}) == doctest::Approx(2.0));
    CHECK(eta_term(FluxLedger{1, {1.2, 0.3}, {}}) == doctest::Approx(-0.5));
    CHECK(grubb_index(FluxLedger{1, {1.2, 0.3}, {}}) == doctest::Approx(2.0));
    CHECK_THROWS_AS(eta_term(FluxLedger{0, {1.5}, {0.2}}), InvalidInput);
}

TEST_CASE("random ledgers: index bookkeeping equals the bound")
{
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> dd(0, 4);
    std::uniform_real_distribution<double> U(-6.0, 6.0);
    std::bernoulli_distribution coin(0.3);
    for (int trial = 0; trial < 10000; ++trial) {
        FluxLedger L{dd(rng), {}, {}};
        const bool robin = coin(rng);
        for (int j = 0; j <= L.d; ++j) {
            L.flux.push_back(coin(rng) ? std::round(U(rng)) : U(rng));
            if (robin) L.robin_flux.push_back(U(rng));
        }
        REQUIRE(aps_index(L) == lower_bound(L));
        if (!robin) CHECK(std::abs(grubb_index(L) - aps_index(L)) < 1e-9);
    }
}

TEST_CASE("rational mode: exact identities")
{
    CHECK(ceil_exact(Rational(7, 3)) == 3);
    CHECK(ceil_exact(Rational(-7, 3)) == -2);
    CHECK(ceil_exact(Rational(4, 2)) == 2);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-60, 60), den(1, 12), dd(0, 3);
    for (int trial = 0; trial < 10000; ++trial) {
        RationalLedger L{dd(rng), {}, {}};
        for (int j = 0; j <= L.d; ++j) L.flux.push_back(Rational(num(rng), den(rng)));
        REQUIRE(aps_index(L) == lower_bound(L));
        REQUIRE(grubb_index(L) == Rational(aps_index(L)));
    }
}

TEST_CASE("boundary term from curvature: (1 - d)/2")
{
    CHECK(boundary_term_from_curvature(DomainSpec::disc(2.0)) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(boundary_term_from_curvature(DomainSpec::annulus(0.4, 1.0)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK(boundary_term_from_curvature(DomainSpec::mapped_disc(ConformalMap({Complex(0.2, 0.1), Complex(0.05, 0.0)}))) ==
          doctest::Approx(0.5).epsilon(1e-8));
}
