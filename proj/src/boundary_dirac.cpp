#include "aclab/boundary_dirac.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "aclab/quadrature.hpp"

namespace aclab {

namespace {

constexpr Complex I(0.0, 1.0);

// Fourier coefficients of e^{i Theta_V} on modes -K..K via the Fourier antiderivative.
Eigen::VectorXcd phase_coefficients(const PeriodicFunction& V, int K)
{
    const int n = 8192;
    const Eigen::VectorXd s = periodic_grid(V.length(), n);
    const Eigen::VectorXd theta = dirac_phase(V, s);
    Eigen::VectorXcd g(n);
    for (int j = 0; j < n; ++j) g[j] = std::exp(I * theta[j]);
    return fft_coefficients(g, K);
}

// Smallest pad with |c_k| < 1e-16 for |k| > pad.
int tail_pad(const Eigen::VectorXcd& c)
{
    const int K = (static_cast<int>(c.size()) - 1) / 2;
    for (int p = K; p >= 0; --p)
        if (std::abs(c[K + p]) >= 1e-16 || std::abs(c[K - p]) >= 1e-16) return std::min(K, p + 1);
    return 0;
}

// Cumulative int_0^{s_j} f on the uniform grid (Gauss-8 per interval).
Eigen::VectorXd cumulative_integral(const PeriodicFunction& f, int n)
{
    const double h = f.length() / n;
    Eigen::VectorXd out(n);
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
        out[j] = acc;
        for (int q = 0; q < quad::gauss8.n; ++q) acc += quad::gauss8.w[q] * h * f((j + quad::gauss8.x[q]) * h);
    }
    return out;
}

// Orthonormal Fourier coefficients <e_k, u>, e_k = L^{-1/2} e^{i k w s}, of uniform samples.
Eigen::VectorXcd orthonormal_coefficients(const Eigen::VectorXcd& samples, double L, int K)
{
    return std::sqrt(L) * fft_coefficients(samples, K);
}

} // namespace

PeriodicFunction boundary_potential(const PeriodicFunction& g, const PeriodicFunction& a_tau)
{
    return g.plus(-a_tau);
}

PeriodicFunction conjugate_boundary_potential(const PeriodicFunction& g, const PeriodicFunction& a_tau)
{
    return (-g).plus(-a_tau);
}

int BoundarySpectrum::kernel_dimension() const
{
    return std::abs(flux - std::round(flux)) < 1e-12 ? 1 : 0;
}

Eigen::VectorXd dirac_phase(const PeriodicFunction& V, const Eigen::VectorXd& s, int K)
{
    const Eigen::VectorXcd c = fourier_coefficients(V, K);
    const double w = V.frequency();
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(s.size());
    for (Eigen::Index j = 0; j < s.size(); ++j) {
        Complex acc = 0.0;
        for (int k = 1; k <= K; ++k) {
            const Complex e = std::exp(I * (k * w * s[j]));
            acc += c[K + k] * (e - 1.0) / (I * (k * w));
            acc += c[K - k] * (std::conj(e) - 1.0) / (-I * (k * w));
        }
        theta[j] = -acc.real();
    }
    return theta;
}

BoundarySpectrum dirac_spectrum(const PeriodicFunction& V, int m_lo, int m_hi, int samples)
{
    if (m_hi < m_lo) throw InvalidInput("dirac spectrum: empty mode window");
    BoundarySpectrum b;
    b.length = V.length();
    b.flux = V.flux();
    b.m_lo = m_lo;
    b.m_hi = m_hi;
    const int count = m_hi - m_lo + 1;
    b.eigenvalues.resize(count);
    for (int m = m_lo; m <= m_hi; ++m) b.eigenvalues[m - m_lo] = b.mu(m);
    if (samples > 0) {
        b.s = periodic_grid(b.length, samples);
        const Eigen::VectorXd theta = dirac_phase(V, b.s);
        const double w = V.frequency();
        b.eigenfunctions.resize(samples, count);
        for (int m = m_lo; m <= m_hi; ++m)
            for (int j = 0; j < samples; ++j)
                b.eigenfunctions(j, m - m_lo) = std::exp(I * (m * w * b.s[j] + theta[j])) / std::sqrt(b.length);
    }
    return b;
}

Eigen::MatrixXcd dirac_matrix(const PeriodicFunction& V, int M)
{
    const int n = 2 * M + 1;
    const Eigen::VectorXcd c = fourier_coefficients(V, 2 * M, 16 * M + 64);
    const double w = V.frequency();
    Eigen::MatrixXcd H(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) H(i, j) = c[2 * M + i - j];
    for (int i = 0; i < n; ++i) H(i, i) += w * (i - M);
    return H;
}

NumericCheck numeric_spectrum_check(const PeriodicFunction& V, int M)
{
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dirac_matrix(V, M), Eigen::EigenvaluesOnly);
    NumericCheck r;
    r.numeric = es.eigenvalues();
    const int n = static_cast<int>(r.numeric.size());
    const int lo = n / 3, hi = 2 * n / 3;
    const double w = V.frequency(), phi = V.flux();
    const long m0 = std::lround(r.numeric[lo] / w - phi);
    for (int i = lo; i < hi; ++i) {
        const double mu = w * (double(m0 + (i - lo)) + phi);
        r.deviation = std::max(r.deviation, std::abs(r.numeric[i] - mu));
        ++r.compared;
    }
    return r;
}

Projection spectral_projection(const PeriodicFunction& V, double alpha, int M)
{
    const Eigen::VectorXcd g = phase_coefficients(V, 512);
    Projection p;
    p.pad = tail_pad(g);
    const int K = 512;
    const int D = M + p.pad;
    const int n = 2 * D + 1;
    const double w = V.frequency(), phi = V.flux();
    p.P = Eigen::MatrixXcd::Zero(n, n);
    for (int m = -M; m <= M; ++m) {
        const double mu = w * (m + phi);
        if (std::abs(mu - alpha) < 1e-12) p.ambiguous = true;
        if (!(mu < alpha)) continue;
        Eigen::VectorXcd f = Eigen::VectorXcd::Zero(n);
        for (int k = -D; k <= D; ++k)
            if (std::abs(k - m) <= K) f[k + D] = g[K + k - m];
        p.P.noalias() += f * f.adjoint();
        ++p.rank;
    }
    return p;
}

double conjugation_residual(const PeriodicFunction& V, double alpha, int M)
{
    const double L = V.length(), w = V.frequency(), phi = V.flux();
    const int K = 512;
    const int n = 8192;

    // Direct path: sample the phase from quadrature of V.
    const Eigen::VectorXd s = periodic_grid(L, n);
    const Eigen::VectorXd intV = cumulative_integral(V, n);
    Eigen::VectorXcd gs(n);
    for (int j = 0; j < n; ++j) gs[j] = std::exp(I * (w * phi * s[j] - intV[j]));
    const Eigen::VectorXcd g_direct = fft_coefficients(gs, K);
    // Fourier path: antiderivative by division of coefficients.
    const Eigen::VectorXcd g_fourier = phase_coefficients(V, K);

    const int pad = std::max(tail_pad(g_direct), tail_pad(g_fourier));
    const int D = M + pad;
    const int dim = 2 * D + 1;
    auto column = [&](const Eigen::VectorXcd& g, int m) {
        Eigen::VectorXcd f = Eigen::VectorXcd::Zero(dim);
        for (int k = -D; k <= D; ++k)
            if (std::abs(k - m) <= K) f[k + D] = g[K + k - m];
        return f;
    };
    Eigen::MatrixXcd lhs = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd U = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::VectorXd pi0 = Eigen::VectorXd::Zero(dim);
    for (int m = -M; m <= M; ++m) {
        U.col(m + D) = column(g_fourier, m);
        if (w * m < alpha - w * phi) pi0[m + D] = 1.0;
        if (w * (m + phi) < alpha) {
            const Eigen::VectorXcd f = column(g_direct, m);
            lhs.noalias() += f * f.adjoint();
        }
    }
    const Eigen::MatrixXcd rhs = U * pi0.asDiagonal() * U.adjoint();
    const int c = M / 2;
    return (lhs - rhs).block(D - c, D - c, 2 * c + 1, 2 * c + 1).norm();
}

DualityResult duality_check(const PeriodicFunction& V, const PeriodicFunction& kappa, const Eigen::VectorXcd& w,
                            int M, Complex tau0)
{
    const double L = V.length();
    if (std::abs(kappa.length() - L) > 1e-12 * L) throw InvalidInput("duality check: curvature period differs from V");
    const int n = static_cast<int>(w.size());
    if (n < 4 * M + 8) throw InvalidInput("duality check: too few samples of w for the mode window");
    const Eigen::VectorXd turn = cumulative_integral(kappa, n);
    Eigen::VectorXcd h(n);
    for (int j = 0; j < n; ++j) {
        const Complex nu = I * tau0 * std::exp(I * turn[j]);
        h[j] = std::conj(nu) * w[j];
    }
    auto project_norm = [&](const PeriodicFunction& pot, const Eigen::VectorXcd& u) {
        const Projection p = spectral_projection(pot, 0.0, M);
        const int D = (static_cast<int>(p.P.rows()) - 1) / 2;
        const Eigen::VectorXcd c = orthonormal_coefficients(u, L, D);
        return (p.P * c).norm() / std::max(c.norm(), 1e-300);
    };
    DualityResult r;
    r.lhs_norm = project_norm(V.plus(-kappa), w);
    r.rhs_norm = project_norm(V, h);
    r.lhs = r.lhs_norm <= 1e-8;
    r.rhs = r.rhs_norm <= 1e-8;
    return r;
}

std::vector<double> direct_sum_spectrum(const std::vector<PeriodicFunction>& V, double lo, double hi)
{
    std::vector<double> out;
    for (const auto& v : V) {
        const double w = v.frequency(), phi = v.flux();
        for (long m = static_cast<long>(std::floor(lo / w - phi)) - 1; m <= static_cast<long>(std::ceil(hi / w - phi)) + 1; ++m) {
            const double mu = w * (double(m) + phi);
            if (mu >= lo && mu <= hi) out.push_back(mu);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace aclab
