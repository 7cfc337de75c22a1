#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "aclab/types.hpp"

namespace aclab {

// Real trigonometric polynomial a0 + sum_k (a_k cos(k w s) + b_k sin(k w s)), w = 2 pi / L.
struct TrigSeries {
    double a0 = 0.0;
    std::vector<double> cos_coeffs; // a_1, a_2, ...
    std::vector<double> sin_coeffs; // b_1, b_2, ...
};

// Real L-periodic function of arclength. Either a closure, a trig series, or samples.
class PeriodicFunction {
public:
    PeriodicFunction() = default;

    static PeriodicFunction constant(double length, double c);
    static PeriodicFunction trig(double length, TrigSeries series);
    static PeriodicFunction callable(double length, std::function<double(double)> f,
                                     std::string label = "callable");
    // Uniform samples at s_j = j L / N, trigonometric interpolation.
    static PeriodicFunction samples(double length, std::vector<double> values);

    double operator()(double s) const;
    double length() const { return length_; }
    double frequency() const { return two_pi / length_; }

    // (1/L) * integral over one period.
    double mean() const;
    double integral() const { return mean() * length_; }
    // (1/2pi) * integral: the flux associated with this function.
    double flux() const { return integral() / two_pi; }

    std::optional<double> constant_value() const { return constant_; }
    const std::optional<TrigSeries>& trig_series() const { return trig_; }
    bool is_band_limited() const { return trig_.has_value() || constant_.has_value(); }
    // Highest harmonic for band-limited functions, -1 otherwise.
    int bandwidth() const;
    const std::string& label() const { return label_; }

    PeriodicFunction operator-() const;
    PeriodicFunction plus(const PeriodicFunction& other) const;
    PeriodicFunction scaled(double factor) const;
    PeriodicFunction shifted(double c) const { return plus(constant(length_, c)); }

private:
    double length_ = two_pi;
    std::function<double(double)> f_;
    std::optional<double> constant_;
    std::optional<TrigSeries> trig_;
    std::string label_;
};

// Complex Fourier coefficients c_k, k = -K..K (entry k + K), of f(s) = sum c_k e^{i k w s}.
// Band-limited functions are exact; others use an FFT of `samples` uniform points
// (default: max(8K, 64), rounded up to a power of two).
Eigen::VectorXcd fourier_coefficients(const PeriodicFunction& f, int K, int samples = 0);

// Coefficients of a sampled complex periodic function (uniform grid s_j = j L / N), k = -K..K.
Eigen::VectorXcd fft_coefficients(const Eigen::VectorXcd& values, int K);

// Uniform periodic grid s_j = j L / N.
Eigen::VectorXd periodic_grid(double length, int n);

} // namespace aclab
