#pragma once

#include <vector>

#include "aclab/types.hpp"

namespace aclab {

// F(z) = z + sum_{k>=2} c_k z^k on the closed unit disc.
// Univalence is guaranteed by sum_k k|c_k| < 1 (then Re F' > 0 on the disc).
class ConformalMap {
public:
    ConformalMap() = default;
    // coeffs[0] is c_2, coeffs[1] is c_3, ...
    explicit ConformalMap(std::vector<Complex> coeffs);

    Complex operator()(Complex z) const;
    Complex derivative(Complex z) const;
    Complex second_derivative(Complex z) const;

    Vec2 apply(const Vec2& x) const;
    // Real Jacobian of x -> F(x) as a 2x2 matrix.
    Eigen::Matrix2d jacobian(const Vec2& x) const;

    const std::vector<Complex>& coefficients() const { return c_; }
    bool is_identity() const;
    // 1 - sum k|c_k|; positive means the sufficient univalence criterion holds.
    double univalence_margin() const;
    // Throws InvalidInput unless the coefficient criterion holds, min |F'| > 0 on a dense
    // sample of the disc, and the boundary image has winding number 1 about F(0).
    void check_univalent() const;

    // |Omega| = pi * sum_k k |c_k|^2 with c_1 = 1.
    double image_area() const;
    // Boundary speed |F'(e^{i theta})| and curvature of the image curve at F(e^{i theta}).
    double boundary_speed(double theta) const;
    double boundary_curvature(double theta) const;

private:
    std::vector<Complex> c_;
};

} // namespace aclab
