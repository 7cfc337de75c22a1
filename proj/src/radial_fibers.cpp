#include "aclab/radial_fibers.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "aclab/parallel.hpp"
#include "aclab/quadrature.hpp"

namespace aclab {

namespace {

// int_0^1 N_i N_j / (c + t) dt for N_0 = 1 - t, N_1 = t, c = r_a / h.
Eigen::Matrix2d inverse_r_block(double c)
{
    Eigen::Matrix2d S;
    if (c > 4.0) {
        S.setZero();
        for (int q = 0; q < quad::gauss8.n; ++q) {
            const double t = quad::gauss8.x[q];
            const Eigen::Vector2d N(1.0 - t, t);
            S += quad::gauss8.w[q] / (c + t) * N * N.transpose();
        }
        return S;
    }
    if (c == 0.0) {
        // Only the N_1 N_1 entry is finite; the origin dof is removed in this case.
        S << 0.0, 0.0, 0.0, 0.5;
        return S;
    }
    const double I0 = std::log((c + 1.0) / c);
    const double I1 = 1.0 - c * I0;
    const double I2 = 0.5 - c + c * c * I0;
    S << I0 - 2.0 * I1 + I2, I1 - I2, I1 - I2, I2;
    return S;
}

Eigen::Matrix2d weighted_mass(double ra, double h)
{
    Eigen::Matrix2d M;
    M << h * (ra / 3.0 + h / 12.0), h * (ra / 6.0 + h / 12.0), h * (ra / 6.0 + h / 12.0), h * (ra / 3.0 + h / 4.0);
    return M;
}

FiberBasis resolve_basis(int m, const FiberGrid& grid, FiberBasis requested)
{
    const bool disc = grid.r_in() == 0.0;
    if (requested == FiberBasis::Automatic) return (!disc || m >= 0) ? FiberBasis::GroundState : FiberBasis::Plain;
    if (requested == FiberBasis::GroundState && disc && m < 0)
        throw InvalidInput("fiber m = " + std::to_string(m) +
                           ": the ground-state basis r^m e^{-phi} is not admissible for m < 0 on the disc");
    return requested;
}

} // namespace

RadialBoundary radial_boundary(const RobinSpec& robin, const DomainSpec& domain)
{
    if (!domain.is_radial()) throw InvalidInput("radial boundary data needs a disc or annulus");
    robin.check_against(domain);
    RadialBoundary bc;
    const auto g0 = robin.constant_on(0);
    if (!g0) throw InvalidInput("radial fibers need a constant Robin coefficient on each circle");
    bc.g_outer = *g0;
    if (domain.components() > 1) {
        const auto g1 = robin.constant_on(1);
        if (!g1) throw InvalidInput("radial fibers need a constant Robin coefficient on each circle");
        bc.g_inner = *g1;
    }
    return bc;
}

FiberGrid::FiberGrid(const RadialGauge& gauge, int n)
    : gauge_(&gauge), n_(n), r_in_(gauge.r_in()), r_out_(gauge.r_out())
{
    if (n < 2) throw InvalidInput("fiber grid needs at least two elements");
    h_ = (r_out_ - r_in_) / n_;
    x_.resize(static_cast<std::size_t>(n_) * nq);
    a_.resize(x_.size());
    phi_.resize(x_.size());
    B_.resize(x_.size());
    double s = 0.0;
    for (int e = 0; e < n_; ++e)
        for (int q = 0; q < nq; ++q) {
            const std::size_t k = static_cast<std::size_t>(e) * nq + q;
            const double x = node(e) + quad::gauss5.x[q] * h_;
            x_[k] = x;
            a_[k] = gauge.a(x);
            phi_[k] = gauge.phi(x);
            B_[k] = gauge.B(x);
            s = std::max(s, std::abs(B_[k]) + a_[k] * a_[k]);
        }
    scale_ = 1.0 + s;
}

FiberPencil assemble_fiber(int m, const FiberGrid& grid, const RadialBoundary& bc, const FiberOptions& opt)
{
    FiberPencil fp;
    fp.basis = resolve_basis(m, grid, opt.basis);
    fp.guard = opt.zero_guard * grid.potential_scale();
    const bool disc = grid.r_in() == 0.0;
    const int n = grid.n();
    const double h = grid.h();
    const RadialGauge& gauge = grid.gauge();
    const double dm = m;

    if (fp.basis == FiberBasis::GroundState) {
        if (opt.origin == OriginDof::Remove && disc && m == 0)
            throw InvalidInput("fiber m = 0 keeps the origin dof");
        // log psi^2 = 2 m log r - 2 phi, shifted so the largest weight is O(1).
        auto logw = [&](double x, double phi) { return 2.0 * dm * std::log(x) - 2.0 * phi; };
        double shift = logw(grid.r_out(), 0.0);
        if (!disc) shift = std::max(shift, logw(grid.r_in(), 0.0));
        for (int e = 0; e < n; ++e)
            for (int q = 0; q < FiberGrid::nq; ++q) shift = std::max(shift, logw(grid.x(e, q), grid.phi(e, q)));
        for (int e = 0; e < n; ++e) {
            double s = 0.0;
            Eigen::Matrix2d M = Eigen::Matrix2d::Zero();
            for (int q = 0; q < FiberGrid::nq; ++q) {
                const double x = grid.x(e, q);
                const double w = std::exp(logw(x, grid.phi(e, q)) - shift) * x;
                const double t = quad::gauss5.x[q];
                const Eigen::Vector2d N(1.0 - t, t);
                s += quad::gauss5.w[q] * w / h;
                M += quad::gauss5.w[q] * h * w * N * N.transpose();
            }
            fp.pencil.add_laplacian_element(s, M);
        }
        auto coefficient = [&](double c) {
            if (std::abs(c) < opt.critical_tolerance) {
                fp.critical = true;
                return 0.0;
            }
            return c;
        };
        const double c_out = coefficient(dm - gauge.flux_outer() + bc.g_outer * grid.r_out());
        const double right = c_out * std::exp(logw(grid.r_out(), 0.0) - shift);
        double left = 0.0;
        if (!disc) {
            const double c_in = coefficient(-dm - gauge.flux_inner() + bc.g_inner * grid.r_in());
            left = c_in * std::exp(logw(grid.r_in(), 0.0) - shift);
        }
        fp.pencil.set_boundary(left, right);
        return fp;
    }

    if (disc) {
        if (opt.origin == OriginDof::Remove && m == 0)
            throw InvalidInput("fiber m = 0 keeps the origin dof (u(0) is unconstrained)");
        if (opt.origin == OriginDof::Keep && m != 0)
            throw InvalidInput("fiber m = " + std::to_string(m) + " must remove the origin dof");
        fp.origin_removed = m != 0;
    }
    for (int e = 0; e < n; ++e) {
        const double ra = grid.node(e);
        const double rmid = ra + 0.5 * h;
        Eigen::Matrix2d K;
        K << rmid / h, -rmid / h, -rmid / h, rmid / h;
        if (m != 0) K += dm * dm * inverse_r_block(ra / h);
        for (int q = 0; q < FiberGrid::nq; ++q) {
            const double x = grid.x(e, q), a = grid.a(e, q);
            const double w = -2.0 * dm * a / x + a * a - grid.B(e, q);
            const double t = quad::gauss5.x[q];
            const Eigen::Vector2d N(1.0 - t, t);
            K += quad::gauss5.w[q] * h * w * x * N * N.transpose();
        }
        fp.pencil.add_element(K, weighted_mass(ra, h));
    }
    fp.pencil.set_boundary(disc ? 0.0 : bc.g_inner * grid.r_in(), bc.g_outer * grid.r_out());
    fp.pencil.set_dirichlet(fp.origin_removed, false);
    fp.critical = false;
    return fp;
}

FiberResult fiber_count(int m, const FiberGrid& grid, const RadialBoundary& bc, const FiberOptions& opt)
{
    const FiberPencil fp = assemble_fiber(m, grid, bc, opt);
    FiberResult r;
    r.m = m;
    r.basis = fp.basis;
    r.origin_removed = fp.origin_removed;
    const bool weighted = fp.basis == FiberBasis::GroundState;
    const int neg = fp.pencil.count_below(weighted ? 0.0 : -fp.guard);
    const int nonpos = fp.pencil.count_below(fp.guard);
    r.count.count_negative = neg;
    r.count.count_nonpositive = nonpos;
    r.count.threshold = 0.0;
    for (int j = 0; j < neg; ++j) r.count.eigenvalues_below.push_back(fp.pencil.eigenvalue(j));
    for (int j = 0; j < opt.report_lowest; ++j)
        r.lowest.push_back(j < neg ? r.count.eigenvalues_below[j] : fp.pencil.eigenvalue(j));
    r.critical = fp.critical || nonpos != neg;
    r.count.threshold_critical = r.critical;
    r.count.certificate.method = weighted ? "radial-fiber/ground-state" : "radial-fiber/p1";
    r.count.certificate.level = grid.n();
    r.count.certificate.tolerance = weighted ? opt.critical_tolerance : fp.guard;
    r.count.certificate.fiber_min = r.count.certificate.fiber_max = m;
    return r;
}

FiberResult fiber_count(int m, const RadialGauge& gauge, const RadialBoundary& bc, const FiberOptions& opt)
{
    const FiberGrid grid(gauge, opt.n);
    return fiber_count(m, grid, bc, opt);
}

RadialTotal total_count(const RadialGauge& gauge, const RadialBoundary& bc, const FiberOptions& opt, int M)
{
    const double phi = gauge.total_flux();
    const double phig = bc.g_outer * gauge.r_out() + bc.g_inner * gauge.r_in();
    const int needed = static_cast<int>(std::ceil(std::abs(phi) + std::abs(phig)));
    if (M < 0) M = needed + 8;
    if (M < needed)
        throw InvalidInput("fiber cutoff M = " + std::to_string(M) + " is below ceil(|Phi| + |Phi_g|) = " +
                           std::to_string(needed));
    const FiberGrid grid(gauge, opt.n);
    RadialTotal t;
    t.cutoff = M;
    t.fibers.resize(static_cast<std::size_t>(2 * M + 1));
    parallel_for(2 * M + 1, [&](int i) { t.fibers[i] = fiber_count(i - M, grid, bc, opt); });

    auto& c = t.total;
    c.threshold = 0.0;
    for (const auto& f : t.fibers) {
        c.count_negative += f.count.count_negative;
        c.count_nonpositive += f.count.count_nonpositive;
        c.threshold_critical = c.threshold_critical || f.critical;
        c.eigenvalues_below.insert(c.eigenvalues_below.end(), f.count.eigenvalues_below.begin(),
                                   f.count.eigenvalues_below.end());
    }
    std::sort(c.eigenvalues_below.begin(), c.eigenvalues_below.end());
    auto& cert = c.certificate;
    cert.method = "radial-fibers";
    cert.level = opt.n;
    cert.truncation = M;
    cert.tolerance = opt.critical_tolerance;
    cert.fiber_min = -M;
    cert.fiber_max = M;
    const double lo_minus = t.fibers.front().lowest.empty() ? 0.0 : t.fibers.front().lowest.front();
    const double lo_plus = t.fibers.back().lowest.empty() ? 0.0 : t.fibers.back().lowest.front();
    cert.passed = lo_minus >= 0.0 && lo_plus >= 0.0;
    if (!cert.passed)
        cert.note = "a fiber at |m| = M has a negative eigenvalue; raise the fiber cutoff M";
    return t;
}

ZeroModeSlope zero_mode_derivative(int m, const RadialGauge& gauge)
{
    if (!gauge.is_disc()) throw InvalidInput("zero-mode derivative is defined on the disc");
    if (m < 0) throw InvalidInput("zero-mode derivative needs m >= 0");
    const double R = gauge.r_out();
    ZeroModeSlope z;
    z.exact = (m - gauge.total_flux()) * std::pow(R, m - 1);
    auto u = [&](double r) { return std::pow(r, m) * std::exp(-gauge.phi(r)); };
    const double d = 1e-3 * R;
    z.numeric = (-u(R + 2 * d) + 8.0 * u(R + d) - 8.0 * u(R - d) + u(R - 2 * d)) / (12.0 * d);
    return z;
}

FeynmanHellmann feynman_hellmann_slope(int m, const FieldSpec& field, double R, int n)
{
    if (m < 0) throw InvalidInput("Feynman-Hellmann slope needs m >= 0");
    const RadialGauge unit(field, 0.0, R);
    const double phi1 = unit.total_flux();
    if (std::abs(phi1) < 1e-14) throw InvalidInput("Feynman-Hellmann slope: the field has zero flux");
    FeynmanHellmann fh;
    fh.beta_star = m / phi1;
    const RadialGauge scaled(field.scaled(fh.beta_star), 0.0, R);
    const FiberGrid grid(scaled, n);
    const FiberGrid unit_grid(unit, n);
    FiberOptions opt;
    opt.n = n;
    opt.basis = FiberBasis::Plain;
    const FiberPencil fp = assemble_fiber(m, grid, RadialBoundary{}, opt);
    fh.eigenvalue = fp.pencil.eigenvalue(0);
    const Eigen::VectorXd u = fp.pencil.eigenvector(fh.eigenvalue);
    // d/d beta of (m/r - beta a_1)^2 - beta B_1.
    double slope = 0.0;
    const double h = grid.h();
    for (int e = 0; e < n; ++e)
        for (int q = 0; q < FiberGrid::nq; ++q) {
            const double x = grid.x(e, q), t = quad::gauss5.x[q];
            const double a1 = unit_grid.a(e, q);
            const double dW = -2.0 * (m / x - fh.beta_star * a1) * a1 - unit_grid.B(e, q);
            const double ux = (1.0 - t) * u[e] + t * u[e + 1];
            slope += quad::gauss5.w[q] * h * dW * ux * ux * x;
        }
    fh.slope = slope / fp.pencil.mass_form(u);
    return fh;
}

void write_fiber_csv(std::ostream& out, const RadialTotal& total)
{
    out.precision(12);
    std::size_t k = 0;
    for (const auto& f : total.fibers) k = std::max(k, f.lowest.size());
    out << "m,count,critical";
    for (std::size_t j = 0; j < k; ++j) out << ",lambda_" << j + 1;
    out << "\n";
    for (const auto& f : total.fibers) {
        out << f.m << "," << f.count.count_negative << "," << (f.critical ? 1 : 0);
        for (double v : f.lowest) out << "," << v;
        out << "\n";
    }
}

} // namespace aclab
