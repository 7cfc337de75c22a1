#include "aclab/inertia.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>

namespace aclab {

namespace {

using LDLT = Eigen::SimplicialLDLT<SparseMatrixC, Eigen::Lower, Eigen::AMDOrdering<int>>;

Inertia dense_inertia(const SparseMatrixC& A)
{
    const Eigen::MatrixXcd D(A);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(D, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double tol = 1e-14 * std::max(1.0, ev.cwiseAbs().maxCoeff());
    Inertia r;
    r.dense_fallback = true;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -tol) ++r.negative;
        else if (ev[i] > tol) ++r.positive;
        else ++r.zero;
    }
    return r;
}

} // namespace

Inertia pencil_inertia(const SparseMatrixC& K, const SparseMatrixC& M, double sigma, int dense_limit)
{
    const SparseMatrixC A = K - sigma * M;
    LDLT ldlt(A);
    const int n = static_cast<int>(A.rows());
    bool usable = ldlt.info() == Eigen::Success;
    Inertia r;
    if (usable) {
        const Eigen::VectorXcd d = ldlt.vectorD();
        const double dmax = d.cwiseAbs().maxCoeff();
        for (int i = 0; i < n; ++i) {
            const double v = d[i].real();
            if (!std::isfinite(v)) usable = false;
            if (std::abs(v) <= 1e-14 * dmax) ++r.zero;
            else if (v < 0.0) ++r.negative;
            else ++r.positive;
        }
    }
    if (usable && r.zero == 0) return r;
    if (n <= dense_limit) return dense_inertia(A);
    if (!usable) throw NumericalFailure("inertia: LDL^H factorization broke down at dimension " + std::to_string(n));
    return r;
}

double spectrum_lower_bound(const SparseMatrixC& K, const SparseMatrixC& M, double start)
{
    double sigma = -std::max(start, 1.0);
    for (int it = 0; it < 80; ++it) {
        if (pencil_inertia(K, M, sigma).negative == 0) return sigma;
        sigma *= 2.0;
    }
    throw NumericalFailure("inertia: no lower bound for the spectrum found");
}

std::vector<double> lowest_eigenvalues(const SparseMatrixC& K, const SparseMatrixC& M, int k, double sigma)
{
    const int n = static_cast<int>(K.rows());
    k = std::min(k, n);
    if (k <= 0) return {};
    if (n <= 400) {
        const Eigen::MatrixXcd Kd(K), Md(M);
        const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(Kd, Md, Eigen::EigenvaluesOnly);
        const Eigen::VectorXd ev = es.eigenvalues();
        return std::vector<double>(ev.data(), ev.data() + k);
    }
    LDLT solver(SparseMatrixC(K - sigma * M));
    if (solver.info() != Eigen::Success) throw NumericalFailure("lanczos: shifted factorization failed");

    // Operator (K - sigma M)^{-1} M is self-adjoint in <x, y>_M; its top eigenvalues theta give
    // lambda = sigma + 1/theta.
    auto mdot = [&M](const Eigen::VectorXcd& x, const Eigen::VectorXcd& y) { return x.dot(M * y); };
    int m = std::min(n, std::max(2 * k + 30, 60));
    Eigen::VectorXcd start = Eigen::VectorXcd::Zero(n);
    for (int i = 0; i < n; ++i) start[i] = Complex(1.0 + 0.37 * std::sin(1.3 * i), 0.21 * std::cos(0.7 * i));

    for (int attempt = 0; attempt < 4; ++attempt) {
        Eigen::MatrixXcd Q(n, m + 1);
        Eigen::VectorXd alpha(m), beta(m);
        Q.col(0) = start / std::sqrt(mdot(start, start).real());
        int steps = m;
        for (int j = 0; j < m; ++j) {
            Eigen::VectorXcd w = solver.solve(M * Q.col(j));
            alpha[j] = mdot(Q.col(j), w).real();
            for (int pass = 0; pass < 2; ++pass) {
                const Eigen::VectorXcd h = Q.leftCols(j + 1).adjoint() * (M * w);
                w -= Q.leftCols(j + 1) * h;
            }
            beta[j] = std::sqrt(std::max(mdot(w, w).real(), 0.0));
            if (beta[j] < 1e-13 * std::abs(alpha[j]) || j + 1 == m) {
                steps = j + 1;
                break;
            }
            Q.col(j + 1) = w / beta[j];
        }
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(steps, steps);
        for (int i = 0; i < steps; ++i) {
            T(i, i) = alpha[i];
            if (i + 1 < steps) T(i, i + 1) = T(i + 1, i) = beta[i];
        }
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const int want = std::min(k, steps);
        bool converged = true;
        std::vector<double> out;
        for (int i = 0; i < want; ++i) {
            const int c = steps - 1 - i;
            const double theta = es.eigenvalues()[c];
            const double res = std::abs(beta[steps - 1] * es.eigenvectors()(steps - 1, c));
            if (steps < n && res > 1e-10 * std::abs(theta)) converged = false;
            out.push_back(sigma + 1.0 / theta);
        }
        if (converged && want == k) {
            std::sort(out.begin(), out.end());
            return out;
        }
        // Restart from the Ritz vector combination with a larger basis.
        Eigen::VectorXd y = Eigen::VectorXd::Zero(steps);
        for (int i = 0; i < want; ++i) y += es.eigenvectors().col(steps - 1 - i);
        start = Q.leftCols(steps) * y.cast<Complex>();
        m = std::min(n, 2 * m);
    }
    throw NumericalFailure("lanczos: eigenvalues did not converge");
}

} // namespace aclab
