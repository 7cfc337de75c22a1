#include "aclab/conformal_map.hpp"

#include <cmath>

namespace aclab {

ConformalMap::ConformalMap(std::vector<Complex> coeffs) : c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidInput("conformal map: non-finite coefficient");
    while (!c_.empty() && c_.back() == Complex(0.0)) c_.pop_back();
}

Complex ConformalMap::operator()(Complex z) const
{
    // Horner on z * (1 + c2 z + c3 z^2 + ...).
    Complex p = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) p = (p + *it) * z;
    return z * (1.0 + p);
}

Complex ConformalMap::derivative(Complex z) const
{
    Complex d = 1.0;
    Complex zk = z;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        d += double(i + 2) * c_[i] * zk;
        zk *= z;
    }
    return d;
}

Complex ConformalMap::second_derivative(Complex z) const
{
    Complex d = 0.0;
    Complex zk = 1.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const double k = double(i + 2);
        d += k * (k - 1.0) * c_[i] * zk;
        zk *= z;
    }
    return d;
}

Vec2 ConformalMap::apply(const Vec2& x) const
{
    const Complex w = (*this)(Complex(x.x(), x.y()));
    return {w.real(), w.imag()};
}

Eigen::Matrix2d ConformalMap::jacobian(const Vec2& x) const
{
    const Complex d = derivative(Complex(x.x(), x.y()));
    Eigen::Matrix2d J;
    J << d.real(), -d.imag(), d.imag(), d.real();
    return J;
}

bool ConformalMap::is_identity() const { return c_.empty(); }

double ConformalMap::univalence_margin() const
{
    double s = 0.0;
    for (std::size_t i = 0; i < c_.size(); ++i) s += double(i + 2) * std::abs(c_[i]);
    return 1.0 - s;
}

void ConformalMap::check_univalent() const
{
    const double margin = univalence_margin();
    if (!(margin > 0.0))
        throw InvalidInput("conformal map: sum k|c_k| = " + std::to_string(1.0 - margin) +
                           " violates the univalence criterion sum k|c_k| < 1");
    double dmin = 1e300;
    for (int i = 0; i <= 100; ++i) {
        const double r = i / 100.0;
        for (int k = 0; k < 256; ++k)
            dmin = std::min(dmin, std::abs(derivative(std::polar(r, two_pi * k / 256.0))));
    }
    if (!(dmin > 0.0)) throw InvalidInput("conformal map: F' vanishes in the closed disc");
    const int n = 4096;
    double winding = 0.0;
    Complex prev = (*this)(1.0);
    for (int k = 1; k <= n; ++k) {
        const Complex cur = (*this)(std::polar(1.0, two_pi * k / n));
        winding += std::arg(cur / prev);
        prev = cur;
    }
    if (std::lround(winding / two_pi) != 1)
        throw InvalidInput("conformal map: boundary image does not wind once around F(0)");
}

double ConformalMap::image_area() const
{
    double s = 1.0;
    for (std::size_t i = 0; i < c_.size(); ++i) s += double(i + 2) * std::norm(c_[i]);
    return pi * s;
}

double ConformalMap::boundary_speed(double theta) const
{
    return std::abs(derivative(std::polar(1.0, theta)));
}

double ConformalMap::boundary_curvature(double theta) const
{
    const Complex z = std::polar(1.0, theta);
    const Complex d = derivative(z);
    return (1.0 + (z * second_derivative(z) / d).real()) / std::abs(d);
}

} // namespace aclab
