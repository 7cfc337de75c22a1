// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed here.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aclab/ac_index.hpp"
#include "aclab/boundary_dirac.hpp"
#include "aclab/conformal.hpp"
#include "aclab/hardy_toeplitz.hpp"
#include "aclab/planar_fem.hpp"
#include "aclab/radial_fibers.hpp"
#include "aclab/semiclassical.hpp"

using namespace aclab;

namespace {

constexpr int kRadialN = 4096;
constexpr int kFemLevel = 5;
constexpr double kStaircaseSeconds = 120.0;
constexpr double kDiracTol = 1e-8;
constexpr double kConjugationTol = 1e-8;
constexpr double kWitnessTol = 1e-8;
constexpr double kHNTol = 0.02;
constexpr double kSumETol = 0.10;
constexpr double kSumGapTol = 0.15;
constexpr int kRandomLedgers = 10000;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args)
{
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int ceil_int(double x) { return ceil_ac(x).value; }

PeriodicFunction trig(double a0, std::vector<double> c, std::vector<double> s = {})
{
    return PeriodicFunction::trig(two_pi, TrigSeries{a0, std::move(c), std::move(s)});
}

int radial_count(const FieldSpec& f, const DomainSpec& d, const RobinSpec& g = RobinSpec::neumann())
{
    const GaugeData gauge = solve_radial_potential(f, d, kRadialN);
    FiberOptions opt;
    opt.n = kRadialN;
    const RadialTotal t = total_count(*gauge.radial, radial_boundary(g, d), opt);
    if (!t.total.certificate.passed) throw NumericalFailure("radial truncation certificate failed");
    return t.total.count_negative;
}

int fem_count(const FieldSpec& f, const DomainSpec& d, const RobinSpec& g = RobinSpec::neumann(), int level = kFemLevel)
{
    const GaugeData gauge = planar_gauge(f, d, level);
    return count_negative(assemble(d, gauge, f, g, level)).count_negative;
}

Outcome disc_staircase()
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string rows;
    for (double beta : {0.5, 1.0, 2.0, 3.0, 4.2, 6.0, 7.9}) {
        const FieldSpec f = FieldSpec::constant(beta);
        const DomainSpec D = DomainSpec::disc(1.0);
        const int want = ceil_int(beta / 2.0), r = radial_count(f, D), p = fem_count(f, D);
        ok = ok && r == want && p == want;
        rows += fmt(" b=%.1f:%d/%d/%d", beta, want, r, p);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ok = ok && secs < kStaircaseSeconds;
    return {ok, "ceil/radial/fem" + rows + fmt("; %.1f s (limit %.0f s)", secs, kStaircaseSeconds)};
}

Outcome gaussian_field()
{
    const FieldSpec f = FieldSpec::radial([](double r) { return 4.0 * std::exp(-r * r); }, "4exp(-r^2)");
    const DomainSpec D = DomainSpec::disc(1.0);
    const int want = ceil_int(2.0 * (1.0 - std::exp(-1.0)));
    const int r = radial_count(f, D), p = fem_count(f, D);
    return {r == want && p == want, fmt("expected %d, radial %d, fem %d", want, r, p)};
}

Outcome dirac_exactness()
{
    double dev = 0.0, conj = 0.0;
    for (const auto& V : {PeriodicFunction::constant(two_pi, 0.0), PeriodicFunction::constant(two_pi, 0.5),
                          trig(0.0, {1.0}), trig(0.7, {0.3})}) {
        dev = std::max(dev, numeric_spectrum_check(V, 64).deviation);
        for (double alpha : {0.25, -1.3}) conj = std::max(conj, conjugation_residual(V, alpha, 64));
    }
    return {dev <= kDiracTol && conj <= kConjugationTol,
            fmt("max eigenvalue deviation %.2e (tol %.0e), conjugation residual %.2e (tol %.0e)", dev, kDiracTol, conj,
                kConjugationTol)};
}

Outcome toeplitz_bound()
{
    bool ok = true;
    std::string rows;
    const std::vector<std::pair<std::string, PeriodicFunction>> cases{
        {"-2.5", PeriodicFunction::constant(two_pi, -2.5)},
        {"-1.2+cos", trig(-1.2, {1.0})},
        {"-0.4+0.5sin2", trig(-0.4, {}, {0.0, 0.5})}};
    for (const auto& [name, V] : cases) {
        const int bound = ceil_int(-V.flux());
        const int c64 = toeplitz_count(V, 64).count_negative, c128 = toeplitz_count(V, 128).count_negative,
                  c256 = toeplitz_count(V, 256).count_negative;
        ok = ok && c128 >= bound && c64 == c128 && c128 == c256;
        if (V.constant_value()) {
            for (int M : {3, 8, 64, 128, 256}) ok = ok && toeplitz_count(V, M).count_negative == bound;
        }
        rows += fmt(" %s: bound %d, M=64/128/256 -> %d/%d/%d;", name.c_str(), bound, c64, c128, c256);
    }
    return {ok, rows};
}

Outcome annulus_bound()
{
    const FieldSpec f = FieldSpec::constant(8.0);
    const DomainSpec A = DomainSpec::annulus(0.5, 1.0);
    const GaugeData g = solve_radial_potential(f, A, kRadialN);
    const int bound = lower_bound(FluxLedger{1, g.flux, {}});
    const int p = fem_count(f, A), r = radial_count(f, A);
    return {p >= bound && p == r,
            fmt("Phi = (%.6f, %.6f), bound %d, fem %d, radial %d", g.flux[0], g.flux[1], bound, p, r)};
}

Outcome robin_shift()
{
    bool ok = true;
    std::string rows;
    for (double c : {-0.5, 0.5}) {
        const int want = ceil_int(1.5 - c);
        const int p = fem_count(FieldSpec::constant(3.0), DomainSpec::disc(1.0), RobinSpec::uniform(c));
        ok = ok && p >= want;
        rows += fmt(" c=%+.1f: bound %d, fem %d;", c, want, p);
    }
    return {ok, rows};
}

Outcome conformal_invariance()
{
    const InvarianceResult r =
        invariance_check(ConformalMap({Complex(0.2, 0.0)}), FieldSpec::constant(3.0), RobinSpec::neumann(), kFemLevel);
    return {r.equal(), fmt("image %d, pulled-back disc %d (level %d), flux gap %.1e", r.image.count_negative,
                           r.disc.count_negative, kFemLevel, r.data.flux_gap())};
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

Outcome witness()
{
    const PeriodicFunction V = trig(0.0, {}, {1.0});
    const double target = -pi * bessel_i1_series(1.0);
    const double literal = holomorphic_witness_form(exp_series(Complex(0.0, -0.5)), V);
    const double flipped = holomorphic_witness_form(exp_series(Complex(0.0, 0.5)), V);
    return {std::abs(literal - target) <= kWitnessTol,
            fmt("v = e^{-iz/2}: %.10f vs -pi I1(1) = %.10f (gap %.2e, tol %.0e); diagnostic v = e^{iz/2}: %.10f",
                literal, target, std::abs(literal - target), kWitnessTol, flipped)};
}

Outcome semiclassical_staircase()
{
    const SweepResult s = sweep_disc(1.0, {0.2, 0.1, 0.05, 0.02, 0.01});
    bool ok = true;
    std::string rows;
    double hN = 0.0;
    for (const auto& p : s.points) {
        ok = ok && p.count == ceil_int(1.0 / (2.0 * p.h)) && p.certified;
        rows += fmt(" h=%g:%d", p.h, p.count);
        if (p.h == 0.01) hN = p.h * p.count;
    }
    const double rel = std::abs(hN - 0.5) / 0.5;
    ok = ok && rel <= kHNTol;
    return {ok, "N" + rows + fmt("; h N at 0.01 = %.4f (rel %.2e, tol %.0e)", hN, rel, kHNTol)};
}

Outcome eigenvalue_sum_check()
{
    const EigenvalueSums e = eigenvalue_sums(1.0, 0.02);
    const DeGennesConstant c = de_gennes_C1();
    const double rel_e = std::abs(e.sum_e - 0.5) / 0.5;
    const double rel_gap = std::abs(e.sum_gap_scaled - c.C1 * e.length_term) / (c.C1 * e.length_term);
    return {rel_e <= kSumETol && rel_gap <= kSumGapTol,
            fmt("sum e = %.5f (rel %.3f, tol %.2f); sum (h-e)/sqrt h = %.5f vs C1 = %.7f +- %.1e (rel %.3f, tol %.2f)",
                e.sum_e, rel_e, kSumETol, e.sum_gap_scaled, c.C1, c.error, rel_gap, kSumGapTol)};
}

Outcome index_oracle()
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> dd(0, 5), num(-200, 200), den(1, 24);
    std::uniform_real_distribution<double> U(-8.0, 8.0);
    std::bernoulli_distribution coin(0.5);
    int float_bad = 0, rational_bad = 0;
    for (int i = 0; i < kRandomLedgers; ++i) {
        FluxLedger L{dd(rng), {}, {}};
        const bool robin = coin(rng);
        for (int j = 0; j <= L.d; ++j) {
            L.flux.push_back(U(rng));
            if (robin) L.robin_flux.push_back(U(rng));
        }
        float_bad += aps_index(L) != lower_bound(L);

        RationalLedger R{dd(rng), {}, {}};
        for (int j = 0; j <= R.d; ++j) R.flux.push_back(Rational(num(rng), den(rng)));
        rational_bad += aps_index(R) != lower_bound(R) || grubb_index(R) != Rational(aps_index(R));
    }
    return {float_bad == 0 && rational_bad == 0,
            fmt("%d float ledgers: %d mismatches; %d rational ledgers: %d mismatches", kRandomLedgers, float_bad,
                kRandomLedgers, rational_bad)};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>> kCriteria{
    {"disc staircase", disc_staircase},
    {"radial nonincreasing field", gaussian_field},
    {"boundary Dirac exactness", dirac_exactness},
    {"Toeplitz lower bound", toeplitz_bound},
    {"annulus bound", annulus_bound},
    {"Robin shift", robin_shift},
    {"conformal invariance", conformal_invariance},
    {"strict-inequality witness", witness},
    {"semiclassical staircase", semiclassical_staircase},
    {"eigenvalue sums", eigenvalue_sum_check},
    {"index oracle self-consistency", index_oracle},
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Acceptance criteria"};
    std::vector<int> which;
    app.add_option("--criterion", which, "Criterion numbers to run (default: all)")
        ->check(CLI::Range(1, static_cast<int>(kCriteria.size())));
    CLI11_PARSE(app, argc, argv);
    if (which.empty())
        for (int i = 1; i <= static_cast<int>(kCriteria.size()); ++i) which.push_back(i);

    int failed = 0;
    for (int k : which) {
        const auto& [name, check] = kCriteria[k - 1];
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", k, name.c_str(), o.detail.c_str());
        std::fflush(stdout);
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
