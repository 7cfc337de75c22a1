#include "aclab/sturm.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "aclab/spectral_count.hpp"
#include "aclab/types.hpp"

namespace aclab {

bool SpectralCount::consistent() const
{
    if (static_cast<int>(eigenvalues_below.size()) != count_negative) return false;
    for (std::size_t i = 0; i < eigenvalues_below.size(); ++i) {
        if (!(eigenvalues_below[i] < threshold)) return false;
        if (i > 0 && eigenvalues_below[i] < eigenvalues_below[i - 1]) return false;
    }
    return true;
}

void ElementPencil::add_element(const Eigen::Matrix2d& K, const Eigen::Matrix2d& M)
{
    K_.push_back(K);
    M_.push_back(M);
    s_.push_back(std::numeric_limits<double>::quiet_NaN());
}

void ElementPencil::add_laplacian_element(double s, const Eigen::Matrix2d& M)
{
    Eigen::Matrix2d K;
    K << s, -s, -s, s;
    K_.push_back(K);
    M_.push_back(M);
    s_.push_back(s);
}

int ElementPencil::dofs() const
{
    return elements() + 1 - (drop_left_ ? 1 : 0) - (drop_right_ ? 1 : 0);
}

int ElementPencil::count_below(double sigma) const
{
    const int ne = elements();
    if (ne == 0) return 0;
    int neg = 0;
    // T: Schur-complement contribution at the current node from everything to its right.
    double T = drop_right_ ? 0.0 : right_;
    auto safe = [](double p, double scale) {
        if (p != 0.0) return p;
        return std::max(scale * DBL_EPSILON, DBL_MIN);
    };
    for (int e = ne - 1; e >= 0; --e) {
        const auto& K = K_[e];
        const auto& M = M_[e];
        const double alpha = K(0, 0) - sigma * M(0, 0);
        const double beta = K(0, 1) - sigma * M(0, 1);
        const double gamma = K(1, 1) - sigma * M(1, 1);
        if (e == ne - 1 && drop_right_) {
            T = alpha;
            continue;
        }
        double p = gamma + T;
        p = safe(p, std::abs(gamma) + std::abs(T));
        if (p < 0.0) ++neg;
        if (e == 0 && drop_left_) return neg;
        double det;
        if (std::isnan(s_[e])) {
            det = alpha * gamma - beta * beta;
        } else {
            const double s = s_[e];
            det = -sigma * s * (M(0, 0) + M(1, 1) + 2.0 * M(0, 1)) +
                  sigma * sigma * (M(0, 0) * M(1, 1) - M(0, 1) * M(0, 1));
        }
        T = (det + alpha * T) / p;
    }
    const double p0 = safe(T + left_, std::abs(T) + std::abs(left_));
    if (p0 < 0.0) ++neg;
    return neg;
}

double ElementPencil::eigenvalue(int j, double rel_tol) const
{
    if (j < 0 || j >= dofs()) throw InvalidInput("eigenvalue index out of range");
    double lo = -1.0;
    for (int it = 0; count_below(lo) > j; ++it) {
        if (it > 2000) throw NumericalFailure("pencil: no lower spectral bound found");
        lo *= 2.0;
    }
    double hi = 1.0;
    for (int it = 0; count_below(hi) <= j; ++it) {
        if (it > 2000) throw NumericalFailure("pencil: no upper spectral bound found");
        hi *= 2.0;
    }
    // Invariant: count_below(lo) <= j < count_below(hi).
    for (int it = 0; it < 600; ++it) {
        double mid;
        if (lo < 0.0 && hi > 0.0)
            mid = 0.0;
        else if (hi == 0.0)
            mid = lo / 16.0;
        else if (lo == 0.0)
            mid = hi / 16.0;
        else if (hi / lo > 4.0 || lo / hi > 4.0)
            mid = (lo < 0.0 ? -1.0 : 1.0) * std::sqrt(lo * hi); // geometric steps across scales
        else
            mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_below(mid) > j) hi = mid;
        else lo = mid;
        if (hi - lo <= rel_tol * std::max(std::abs(lo), std::abs(hi)) || hi - lo < 1e-280) break;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> ElementPencil::lowest(int k) const
{
    std::vector<double> v;
    for (int j = 0; j < std::min(k, dofs()); ++j) v.push_back(eigenvalue(j));
    return v;
}

Eigen::VectorXd ElementPencil::eigenvector(double lambda) const
{
    const int ne = elements();
    const int nn = ne + 1;
    const double sigma = lambda - 1e-9 * std::max(std::abs(lambda), 1e-300);
    // Assemble the shifted tridiagonal matrix and the mass matrix.
    Eigen::VectorXd d = Eigen::VectorXd::Zero(nn), o = Eigen::VectorXd::Zero(ne);
    Eigen::VectorXd md = Eigen::VectorXd::Zero(nn), mo = Eigen::VectorXd::Zero(ne);
    for (int e = 0; e < ne; ++e) {
        d[e] += K_[e](0, 0) - sigma * M_[e](0, 0);
        d[e + 1] += K_[e](1, 1) - sigma * M_[e](1, 1);
        o[e] = K_[e](0, 1) - sigma * M_[e](0, 1);
        md[e] += M_[e](0, 0);
        md[e + 1] += M_[e](1, 1);
        mo[e] = M_[e](0, 1);
    }
    d[0] += left_;
    d[ne] += right_;
    const int first = drop_left_ ? 1 : 0;
    const int last = drop_right_ ? ne - 1 : ne;
    auto mass_apply = [&](const Eigen::VectorXd& u) {
        Eigen::VectorXd r = md.cwiseProduct(u);
        for (int e = 0; e < ne; ++e) {
            r[e] += mo[e] * u[e + 1];
            r[e + 1] += mo[e] * u[e];
        }
        return r;
    };
    // Right-to-left elimination, matching the Sturm recursion.
    auto guard = [](double p, double scale) {
        return p != 0.0 ? p : std::max(DBL_EPSILON * scale, DBL_MIN);
    };
    auto solve = [&](const Eigen::VectorXd& rhs) {
        Eigen::VectorXd piv(nn), y(nn), u = Eigen::VectorXd::Zero(nn);
        piv[last] = guard(d[last], std::abs(d[last]));
        y[last] = rhs[last];
        for (int k = last - 1; k >= first; --k) {
            const double f = o[k] / piv[k + 1];
            piv[k] = guard(d[k] - f * o[k], std::abs(d[k]));
            y[k] = rhs[k] - f * y[k + 1];
        }
        u[first] = y[first] / piv[first];
        for (int k = first + 1; k <= last; ++k) u[k] = (y[k] - o[k - 1] * u[k - 1]) / piv[k];
        return u;
    };
    Eigen::VectorXd u = Eigen::VectorXd::Ones(nn);
    if (drop_left_) u[0] = 0.0;
    if (drop_right_) u[ne] = 0.0;
    for (int it = 0; it < 4; ++it) {
        u = solve(mass_apply(u));
        if (drop_left_) u[0] = 0.0;
        if (drop_right_) u[ne] = 0.0;
        const double nrm = std::sqrt(std::abs(u.dot(mass_apply(u))));
        if (!(nrm > 0.0) || !std::isfinite(nrm)) throw NumericalFailure("pencil: inverse iteration broke down");
        u /= nrm;
    }
    if (u.sum() < 0.0) u = -u;
    return u;
}

double ElementPencil::stiffness_form(const Eigen::VectorXd& u) const
{
    double q = 0.0;
    for (int e = 0; e < elements(); ++e) {
        const Eigen::Vector2d v(u[e], u[e + 1]);
        q += v.dot(K_[e] * v);
    }
    return q + left_ * u[0] * u[0] + right_ * u[elements()] * u[elements()];
}

double ElementPencil::mass_form(const Eigen::VectorXd& u) const
{
    double q = 0.0;
    for (int e = 0; e < elements(); ++e) {
        const Eigen::Vector2d v(u[e], u[e + 1]);
        q += v.dot(M_[e] * v);
    }
    return q;
}

} // namespace aclab
