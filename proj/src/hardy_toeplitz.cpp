#include "aclab/hardy_toeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <Eigen/Eigenvalues>

namespace aclab {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa, double fm,
                        double fb, double whole, double tol, int depth)
{
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol)
{
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return adaptive_simpson(f, a, b, fa, fm, fb, (b - a) / 6.0 * (fa + 4.0 * fm + fb), tol, 60);
}

// Circle angle of (i - t)/(i + t), in [0, 2 pi).
double cayley_angle(double t)
{
    const Complex z = (Complex(0.0, 1.0) - t) / (Complex(0.0, 1.0) + t);
    double s = std::arg(z);
    if (s < 0.0) s += two_pi;
    return s;
}

} // namespace

Eigen::MatrixXcd toeplitz_matrix(const PeriodicFunction& V, int M)
{
    if (M < 0) throw InvalidInput("toeplitz: truncation must be nonnegative");
    const Eigen::VectorXcd c = fourier_coefficients(V, M, std::max(8 * M, 64));
    const double w = V.frequency();
    Eigen::MatrixXcd T(M + 1, M + 1);
    for (int m = 0; m <= M; ++m)
        for (int n = 0; n <= M; ++n) T(m, n) = c[M + m - n];
    for (int m = 0; m <= M; ++m) T(m, m) += w * m;
    return T;
}

SpectralCount toeplitz_count(const PeriodicFunction& V, int M)
{
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(toeplitz_matrix(V, M), Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& ev = es.eigenvalues();
    const double eps = 1e-10 * V.frequency() * std::max(M, 1);
    SpectralCount r;
    r.threshold = 0.0;
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev[i] < -eps) r.eigenvalues_below.push_back(ev[i]);
        if (ev[i] < eps) ++r.count_nonpositive;
        if (std::abs(ev[i]) <= eps) r.threshold_critical = true;
    }
    r.count_negative = static_cast<int>(r.eigenvalues_below.size());
    r.certificate.method = "toeplitz";
    r.certificate.truncation = M;
    r.certificate.tolerance = eps;
    r.certificate.fiber_min = 0;
    r.certificate.fiber_max = M;
    return r;
}

CayleyTransfer cayley_transfer(const PeriodicFunction& V, double T, int samples, double tol)
{
    if (std::abs(V.length() - two_pi) > 1e-12) throw InvalidInput("cayley transfer: V must live on the unit circle");
    if (T <= 0.0 || samples < 2) throw InvalidInput("cayley transfer: need T > 0 and at least 2 samples");
    const auto W = [&V](double t) { return 2.0 / (1.0 + t * t) * V(cayley_angle(t)); };

    CayleyTransfer r;
    r.t = Eigen::VectorXd::LinSpaced(samples, -T, T);
    r.W.resize(samples);
    for (int j = 0; j < samples; ++j) r.W[j] = W(r.t[j]);

    // Split at the origin and at |t| = 1 where W varies most; each piece is adaptive.
    double body = 0.0;
    const double cuts[] = {-T, -1.0, 0.0, 1.0, T};
    for (int k = 0; k < 4; ++k)
        if (cuts[k + 1] > cuts[k]) body += integrate(W, cuts[k], cuts[k + 1], 1e-12);
    r.tail = 4.0 * V(pi) * (0.5 * pi - std::atan(T));

    // sup |V'| by sampling; |s(t) - pi| <= 2/|t| for the tail bound.
    double dv = 0.0;
    const int ns = 4096;
    const double hs = two_pi / ns;
    for (int j = 0; j < ns; ++j) dv = std::max(dv, std::abs(V((j + 1) * hs) - V(j * hs)) / hs);
    r.tail_bound = 4.0 * dv / (T * T);

    r.line_integral = body + r.tail;
    r.circle_integral = V.integral();
    r.flagged = std::abs(r.line_integral - r.circle_integral) > tol + r.tail_bound;
    return r;
}

double holomorphic_witness_form(const std::map<int, Complex>& v, const PeriodicFunction& V)
{
    if (v.empty()) return 0.0;
    if (v.begin()->first < 0) throw InvalidInput("witness form: negative Fourier mode is not a holomorphic trace");
    const int top = v.rbegin()->first;
    const Eigen::VectorXcd c = fourier_coefficients(V, top, std::max(8 * top, 64));
    const double w = V.frequency();
    Complex acc = 0.0;
    for (const auto& [m, am] : v) {
        acc += w * m * std::norm(am);
        for (const auto& [n, an] : v) acc += std::conj(am) * c[top + m - n] * an;
    }
    return V.length() * acc.real();
}

double bessel_i1_series(double x)
{
    // sum_k (x/2)^{2k+1} / (k! (k+1)!)
    double term = 0.5 * x, sum = 0.0;
    for (int k = 0; k < 200; ++k) {
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
        term *= 0.25 * x * x / ((k + 1.0) * (k + 2.0));
    }
    return sum;
}

} // namespace aclab
