#include <cmath>
#include <map>
#include <doctest.h>

#include "aclab/ac_index.hpp"
#include "aclab/hardy_toeplitz.hpp"

using namespace aclab;

namespace {

PeriodicFunction trig(double a0, std::vector<double> c, std::vector<double> s = {})
{
    return PeriodicFunction::trig(two_pi, TrigSeries{a0, std::move(c), std::move(s)});
}

// Direct quadrature of int conj(v)(-i v' + V v) ds for v(s) = exp(c e^{is}); trapezoid rule, spectrally accurate.
double direct_form(Complex c, const PeriodicFunction& V, int n = 512)
{
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const double s = two_pi * k / n;
        const Complex z = std::exp(Complex(0.0, s));
        const Complex v = std::exp(c * z);
        const Complex dv = c * Complex(0.0, 1.0) * z * v;
        sum += (std::conj(v) * (Complex(0.0, -1.0) * dv + V(s) * v)).real();
    }
    return sum * two_pi / n;
}

std::map<int, Complex> exp_series(Complex c, int terms = 40)
{
    std::map<int, Complex> a;
    Complex t = 1.0;
    for (int n = 0; n < terms; ++n) {
        a[n] = t;
        t *= c / double(n + 1);
    }
    return a;
}

} // namespace

TEST_CASE("constant potentials: diagonal compression")
{
    for (int M : {3, 16, 64}) CHECK(toeplitz_count(PeriodicFunction::constant(two_pi, -2.5), M).count_negative == 3);
    CHECK(toeplitz_count(PeriodicFunction::constant(two_pi, 0.0), 32).count_negative == 0);
    const SpectralCount c = toeplitz_count(PeriodicFunction::constant(two_pi, -2.5), 10);
    REQUIRE(c.eigenvalues_below.size() == 3);
    CHECK(c.eigenvalues_below[0] == doctest::Approx(-2.5));
    CHECK(c.eigenvalues_below[2] == doctest::Approx(-0.5));
}

TEST_CASE("lower bound ceil(-Phi_V) and stabilization")
{
    for (const auto& V : {trig(-1.2, {1.0}), trig(-0.4, {}, {0.0, 0.5}), PeriodicFunction::constant(two_pi, -2.5)}) {
        const int bound = ceil_ac(-V.flux()).value;
        const int c64 = toeplitz_count(V, 64).count_negative;
        const int c128 = toeplitz_count(V, 128).count_negative;
        const int c256 = toeplitz_count(V, 256).count_negative;
        CHECK(c128 >= bound);
        CHECK(c64 <= c128);
        CHECK(c128 == c256);
    }
}

TEST_CASE("compression counts are nondecreasing in M")
{
    const PeriodicFunction V = trig(-0.9, {1.4, 0.3}, {0.6});
    int prev = 0;
    for (int M = 1; M <= 40; ++M) {
        const int c = toeplitz_count(V, M).count_negative;
        CHECK(c >= prev);
        prev = c;
    }
}

TEST_CASE("Toeplitz matrix entries")
{
    const Eigen::MatrixXcd T = toeplitz_matrix(trig(0.2, {0.6}), 4);
    CHECK(T.rows() == 5);
    CHECK(T(3, 3).real() == doctest::Approx(3.2));
    CHECK(T(1, 0).real() == doctest::Approx(0.3));
    CHECK(std::abs(T(2, 0)) < 1e-15);
}

TEST_CASE("Cayley transfer preserves the integral")
{
    const CayleyTransfer one = cayley_transfer(PeriodicFunction::constant(two_pi, 1.0));
    CHECK(one.line_integral == doctest::Approx(two_pi).epsilon(1e-9));
    CHECK(one.W[one.W.size() / 2] == doctest::Approx(2.0));
    const CayleyTransfer zero = cayley_transfer(PeriodicFunction::constant(two_pi, 0.0));
    CHECK(zero.W.cwiseAbs().maxCoeff() == 0.0);
    const CayleyTransfer c = cayley_transfer(trig(0.0, {1.0}));
    CHECK(std::abs(c.line_integral) <= 1e-6);
    CHECK_FALSE(c.flagged);
    const CayleyTransfer m = cayley_transfer(trig(0.3, {0.2}, {0.7}));
    CHECK(m.line_integral == doctest::Approx(m.circle_integral).epsilon(1e-6));
}

TEST_CASE("Bessel series against the library function")
{
    for (double x : {0.5, 1.0, 2.0}) CHECK(bessel_i1_series(x) == doctest::Approx(std::cyl_bessel_i(1.0, x)).epsilon(1e-14));
}

TEST_CASE("holomorphic witness form")
{
    // v = e^{ims} on the disc with uniform beta: 2 pi (m - beta/2).
    for (int m : {0, 1, 3})
        CHECK(holomorphic_witness_form({{m, 1.0}}, PeriodicFunction::constant(two_pi, -1.5)) ==
              doctest::Approx(two_pi * (m - 1.5)));
    CHECK(holomorphic_witness_form({{0, 1.0}}, PeriodicFunction::constant(two_pi, 0.4)) == doctest::Approx(two_pi * 0.4));

    const PeriodicFunction V = trig(0.0, {}, {1.0});
    const double i1 = bessel_i1_series(1.0);
    // Trace of e^{-iz/2}: the form is 3 pi I_1(1) > 0.
    const double literal = holomorphic_witness_form(exp_series(Complex(0.0, -0.5)), V);
    CHECK(literal == doctest::Approx(direct_form(Complex(0.0, -0.5), V)).epsilon(1e-12));
    CHECK(literal == doctest::Approx(3.0 * pi * i1).epsilon(1e-12));
    // Trace of e^{iz/2}: -pi I_1(1) < 0.
    const double flipped = holomorphic_witness_form(exp_series(Complex(0.0, 0.5)), V);
    CHECK(flipped == doctest::Approx(direct_form(Complex(0.0, 0.5), V)).epsilon(1e-12));
    CHECK(flipped == doctest::Approx(-pi * i1).epsilon(1e-12));
    CHECK(flipped == doctest::Approx(-1.77549).epsilon(1e-5));

    CHECK_THROWS_AS(holomorphic_witness_form({{-1, 1.0}}, V), InvalidInput);
}
