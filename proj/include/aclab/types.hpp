#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace aclab {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Thrown for invalid inputs (violated preconditions); carries a user-facing message.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Thrown when a numerical procedure cannot produce a trustworthy answer.
class NumericalFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rotation by +pi/2: J(x, y) = (-y, x).
inline Vec2 rot90(const Vec2& v) { return {-v.y(), v.x()}; }

} // namespace aclab
