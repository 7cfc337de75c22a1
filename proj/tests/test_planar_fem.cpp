#include <cmath>
#include <random>
#include <sstream>
#include <doctest.h>
#include <Eigen/Eigenvalues>

#include "aclab/ac_index.hpp"
#include "aclab/planar_fem.hpp"

using namespace aclab;

namespace {

const DomainSpec kDisc = DomainSpec::disc(1.0);

MagneticForm disc_form(double beta, int level, const RobinSpec& robin = RobinSpec::neumann())
{
    const FieldSpec f = FieldSpec::constant(beta);
    return assemble(kDisc, planar_gauge(f, kDisc, level), f, robin, level);
}

// u_m = e^{-phi} z^m with phi = beta (|x|^2 - 1)/4.
SmoothFunction zero_mode(double beta, int m)
{
    return [=](const Vec2& x) {
        const Complex z(x.x(), x.y());
        const double e = std::exp(-beta * (x.squaredNorm() - 1.0) / 4.0);
        const Complex zm = std::pow(z, m), dzm = m == 0 ? Complex(0.0) : double(m) * std::pow(z, m - 1);
        SmoothValue v;
        v.value = e * zm;
        v.grad = Eigen::Vector2cd(e * (-beta * x.x() / 2.0 * zm + dzm), e * (-beta * x.y() / 2.0 * zm + Complex(0, 1) * dzm));
        return v;
    };
}

} // namespace

TEST_CASE("zero field: Neumann Laplacian with the constant zero mode")
{
    const MagneticForm f = disc_form(0.0, 3);
    const Eigen::VectorXcd one = Eigen::VectorXcd::Ones(f.K.rows());
    CHECK((f.K * one).norm() < 1e-12);
    const SpectralCount c = count_negative(f);
    CHECK(c.count_negative == 0);
    CHECK(c.count_nonpositive == 1);
    CHECK(std::abs(c.certificate.passed));
    CHECK(f.hermitian_defect < 1e-14);
}

TEST_CASE("Robin constant: form of u = 1 is 2 pi c")
{
    double prev = 1e9;
    for (int level : {2, 3, 4}) {
        const MagneticForm f = disc_form(0.0, level, RobinSpec::uniform(0.7));
        const double err = std::abs(f.value(Eigen::VectorXcd::Ones(f.K.rows())) - two_pi * 0.7);
        CHECK(err < prev);
        prev = err;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("form of the interpolated zero mode converges to 2 pi (m - beta/2)")
{
    for (int m : {0, 2}) {
        double prev = 1e9;
        for (int level : {2, 3, 4}) {
            const MagneticForm f = disc_form(3.0, level);
            const auto u = zero_mode(3.0, m);
            const Eigen::VectorXcd x = interpolate(*f.mesh, [&](const Vec2& p) { return u(p).value; });
            const double err = std::abs(f.value(x) - two_pi * (m - 1.5));
            CHECK(err < prev);
            prev = err;
        }
        CHECK(prev < 0.05);
    }
}

TEST_CASE("counts on the disc and the annulus")
{
    CHECK(count_negative(disc_form(3.0, 4)).count_negative == 2);
    CHECK(count_negative(disc_form(0.0, 3)).count_negative == 0);
    CHECK(count_negative(disc_form(3.0, 4, RobinSpec::uniform(0.5))).count_negative == 1);
    CHECK(count_negative(disc_form(3.0, 4, RobinSpec::uniform(-0.5))).count_negative == 2);

    const DomainSpec ann = DomainSpec::annulus(0.5, 1.0);
    const FieldSpec b = FieldSpec::constant(8.0);
    const GaugeData g = planar_gauge(b, ann, 4);
    const SpectralCount c = count_negative(assemble(ann, g, b, RobinSpec::neumann(), 4));
    CHECK(c.count_negative >= lower_bound(FluxLedger{1, g.flux, {}}));
    CHECK(c.count_negative == 4);
}

TEST_CASE("counts are monotone under nested refinement")
{
    const FieldSpec b = FieldSpec::analytic([](const Vec2& x) { return 5.0 + 2.0 * x.x(); }, "5+2x1");
    int prev = 0;
    for (int level : {2, 3, 4}) {
        const int c = count_negative(assemble(kDisc, planar_gauge(b, kDisc, level), b, RobinSpec::neumann(), level))
                          .count_negative;
        CHECK(c >= prev);
        prev = c;
    }
    CHECK(prev >= 3); // bound ceil(2.5)
}

TEST_CASE("form identity: bulk dbar term plus boundary current")
{
    // Zero mode: the dbar term vanishes and both sides approach 2 pi (m - Phi).
    double prev = 1e9;
    for (int level : {2, 3, 4}) {
        const FieldSpec b = FieldSpec::constant(3.0);
        const FormIdentity r = form_identity_residual(zero_mode(3.0, 1), kDisc, planar_gauge(b, kDisc, level), b,
                                                      RobinSpec::neumann(), level);
        CHECK(r.residual < prev + 1e-12);
        prev = r.residual;
        CHECK(r.lhs == doctest::Approx(two_pi * (1 - 1.5)).epsilon(2e-2));
    }
    const FieldSpec zero = FieldSpec::constant(0.0);
    const FormIdentity one = form_identity_residual(
        [](const Vec2&) { return SmoothValue{1.0, Eigen::Vector2cd::Zero()}; }, kDisc, planar_gauge(zero, kDisc, 3),
        zero, RobinSpec::neumann(), 3);
    CHECK(std::abs(one.lhs) < 1e-12);
    CHECK(std::abs(one.rhs) < 1e-12);

    // Random harmonic function from a band-limited trace, B = 1 with the finite-element gauge.
    std::mt19937 rng(5);
    std::normal_distribution<double> N;
    std::vector<Complex> a, c;
    for (int k = 0; k <= 4; ++k) {
        a.emplace_back(N(rng), N(rng));
        c.emplace_back(N(rng), N(rng));
    }
    auto u = [&](const Vec2& x) {
        const Complex z(x.x(), x.y()), zb = std::conj(z);
        SmoothValue v{0.0, Eigen::Vector2cd::Zero()};
        for (int k = 0; k <= 4; ++k) {
            v.value += a[k] * std::pow(z, k) + c[k] * std::pow(zb, k);
            if (k > 0) {
                const Complex dz = a[k] * double(k) * std::pow(z, k - 1), dzb = c[k] * double(k) * std::pow(zb, k - 1);
                v.grad += Eigen::Vector2cd(dz + dzb, Complex(0, 1) * dz - Complex(0, 1) * dzb);
            }
        }
        return v;
    };
    // Exact gauge: the identity holds on the polygonal mesh up to quadrature error.
    const FieldSpec unit = FieldSpec::constant(1.0);
    CHECK(form_identity_residual(u, kDisc, planar_gauge(unit, kDisc, 4), unit, RobinSpec::neumann(), 4).residual <= 1e-3);
    CHECK(form_identity_residual(u, kDisc, planar_gauge(unit, kDisc, 4), unit, RobinSpec::uniform(0.3), 4).residual <=
          1e-10);
    // Finite-element gauge: the recovered A differs from J grad phi_h by O(h), and so does the residual.
    const FieldSpec one_field = FieldSpec::analytic([](const Vec2&) { return 1.0; }, "1");
    double prev_fem = 1e9;
    for (int level : {2, 3, 4}) {
        const double res = form_identity_residual(u, kDisc, solve_potential_2d(one_field, kDisc, level), one_field,
                                                  RobinSpec::uniform(0.3), level)
                               .residual;
        CHECK(res < 0.6 * prev_fem);
        prev_fem = res;
    }
    CHECK(prev_fem < 2e-3);
}

TEST_CASE("second Pauli component")
{
    auto second = [&](double beta) {
        const FieldSpec f = FieldSpec::constant(beta);
        return pauli_second_component_count(kDisc, planar_gauge(f, kDisc, 3), f, RobinSpec::neumann(), 3);
    };
    CHECK(second(1.0).count_negative == 0);
    const SpectralCount z = second(0.0);
    CHECK(z.count_negative == 0);
    CHECK(z.count_nonpositive == 1);
    CHECK(second(-2.0).count_negative == count_negative(disc_form(2.0, 3)).count_negative);
    CHECK(second(-5.0).count_negative == count_negative(disc_form(5.0, 3)).count_negative);
}

TEST_CASE("gauge shift A + grad chi leaves the count unchanged")
{
    const FieldSpec b = FieldSpec::constant(5.0);
    const GaugeData g = planar_gauge(b, kDisc, 4);
    const GaugeData s = shifted_gauge(g, [](const Vec2& x) { return Vec2(x.y() + 0.5, x.x()); });
    const SpectralCount a = count_negative(assemble(kDisc, g, b, RobinSpec::neumann(), 4));
    const SpectralCount c = count_negative(assemble(kDisc, s, b, RobinSpec::neumann(), 4));
    CHECK(a.count_negative == c.count_negative);
    REQUIRE(a.eigenvalues_below.size() == c.eigenvalues_below.size());
    for (std::size_t i = 0; i < a.eigenvalues_below.size(); ++i)
        CHECK(a.eigenvalues_below[i] == doctest::Approx(c.eigenvalues_below[i]).epsilon(2e-2));
}

TEST_CASE("inertia and Lanczos against dense generalized eigenvalues")
{
    const MagneticForm f = disc_form(4.0, 2);
    const Eigen::MatrixXcd K(f.K), M(f.M);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(K, M);
    const Eigen::VectorXd ev = es.eigenvalues();
    for (double sigma : {-1.0, 0.0, 3.0, 10.0}) {
        int below = 0;
        for (int i = 0; i < ev.size(); ++i) below += ev[i] < sigma;
        CHECK(pencil_inertia(f.K, f.M, sigma).negative == below);
        CHECK(pencil_inertia(f.K, f.M, sigma, 0).negative == below);
    }
    const std::vector<double> low = lowest_eigenvalues(f.K, f.M, 5, spectrum_lower_bound(f.K, f.M, 1.0));
    REQUIRE(low.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(low[i] == doctest::Approx(ev[i]).epsilon(1e-8));
}

TEST_CASE("level mismatch and mesh round trip")
{
    const FieldSpec b = FieldSpec::analytic([](const Vec2& x) { return 1.0 + x.y(); }, "1+x2");
    const GaugeData g = solve_potential_2d(b, kDisc, 2);
    CHECK_THROWS_AS(assemble(kDisc, g, b, RobinSpec::neumann(), 3), InvalidInput);
    std::stringstream io;
    write_mesh(io, *g.mesh);
    const TriMesh back = read_mesh(io);
    CHECK(back.num_nodes() == g.mesh->num_nodes());
    CHECK(back.num_triangles() == g.mesh->num_triangles());
    CHECK(back.area() == doctest::Approx(g.mesh->area()).epsilon(1e-14));
}
