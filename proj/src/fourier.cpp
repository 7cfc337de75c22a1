#include "aclab/fourier.hpp"

#include <algorithm>
#include <cmath>

#include <unsupported/Eigen/FFT>

namespace aclab {

namespace {

double eval_trig(const TrigSeries& t, double w, double s)
{
    double v = t.a0;
    for (std::size_t k = 0; k < t.cos_coeffs.size(); ++k)
        v += t.cos_coeffs[k] * std::cos(double(k + 1) * w * s);
    for (std::size_t k = 0; k < t.sin_coeffs.size(); ++k)
        v += t.sin_coeffs[k] * std::sin(double(k + 1) * w * s);
    return v;
}

TrigSeries add(const TrigSeries& a, const TrigSeries& b, double fb)
{
    TrigSeries r;
    r.a0 = a.a0 + fb * b.a0;
    r.cos_coeffs.assign(std::max(a.cos_coeffs.size(), b.cos_coeffs.size()), 0.0);
    r.sin_coeffs.assign(std::max(a.sin_coeffs.size(), b.sin_coeffs.size()), 0.0);
    for (std::size_t k = 0; k < a.cos_coeffs.size(); ++k) r.cos_coeffs[k] += a.cos_coeffs[k];
    for (std::size_t k = 0; k < b.cos_coeffs.size(); ++k) r.cos_coeffs[k] += fb * b.cos_coeffs[k];
    for (std::size_t k = 0; k < a.sin_coeffs.size(); ++k) r.sin_coeffs[k] += a.sin_coeffs[k];
    for (std::size_t k = 0; k < b.sin_coeffs.size(); ++k) r.sin_coeffs[k] += fb * b.sin_coeffs[k];
    return r;
}

int next_pow2(int n)
{
    int p = 1;
    while (p < n) p <<= 1;
    return p;
}

void check_length(double length)
{
    if (!(length > 0.0) || !std::isfinite(length))
        throw InvalidInput("periodic function: period must be positive and finite");
}

} // namespace

PeriodicFunction PeriodicFunction::constant(double length, double c)
{
    check_length(length);
    PeriodicFunction p;
    p.length_ = length;
    p.constant_ = c;
    p.trig_ = TrigSeries{c, {}, {}};
    p.label_ = "constant";
    return p;
}

PeriodicFunction PeriodicFunction::trig(double length, TrigSeries series)
{
    check_length(length);
    PeriodicFunction p;
    p.length_ = length;
    const bool flat = std::all_of(series.cos_coeffs.begin(), series.cos_coeffs.end(),
                                  [](double c) { return c == 0.0; }) &&
                      std::all_of(series.sin_coeffs.begin(), series.sin_coeffs.end(),
                                  [](double c) { return c == 0.0; });
    if (flat) p.constant_ = series.a0;
    p.trig_ = std::move(series);
    p.label_ = "trig";
    return p;
}

PeriodicFunction PeriodicFunction::callable(double length, std::function<double(double)> f,
                                            std::string label)
{
    check_length(length);
    PeriodicFunction p;
    p.length_ = length;
    p.f_ = std::move(f);
    p.label_ = std::move(label);
    return p;
}

PeriodicFunction PeriodicFunction::samples(double length, std::vector<double> values)
{
    check_length(length);
    const int n = static_cast<int>(values.size());
    if (n == 0) throw InvalidInput("periodic function: empty sample list");
    Eigen::VectorXcd v(n);
    for (int j = 0; j < n; ++j) {
        if (!std::isfinite(values[j])) throw InvalidInput("periodic function: non-finite sample");
        v[j] = values[j];
    }
    const int K = (n - 1) / 2;
    const Eigen::VectorXcd c = fft_coefficients(v, K);
    TrigSeries t;
    t.a0 = c[K].real();
    for (int k = 1; k <= K; ++k) {
        t.cos_coeffs.push_back(2.0 * c[K + k].real());
        t.sin_coeffs.push_back(-2.0 * c[K + k].imag());
    }
    if (n % 2 == 0) {
        // Nyquist mode: cos(n/2 w s) carries the alternating component.
        double nyq = 0.0;
        for (int j = 0; j < n; ++j) nyq += (j % 2 == 0 ? 1.0 : -1.0) * values[j];
        t.cos_coeffs.push_back(nyq / n);
        t.sin_coeffs.push_back(0.0);
    }
    PeriodicFunction p = trig(length, std::move(t));
    p.label_ = "samples";
    return p;
}

double PeriodicFunction::operator()(double s) const
{
    if (constant_) return *constant_;
    if (trig_) return eval_trig(*trig_, frequency(), s);
    if (f_) return f_(s);
    return 0.0;
}

double PeriodicFunction::mean() const
{
    if (constant_) return *constant_;
    if (trig_) return trig_->a0;
    if (!f_) return 0.0;
    // Periodic trapezoid converges spectrally for smooth data; double until stable.
    double prev = 0.0;
    for (int n = 64; n <= (1 << 18); n *= 2) {
        double sum = 0.0;
        for (int j = 0; j < n; ++j) sum += f_(length_ * j / n);
        const double m = sum / n;
        if (n > 64 && std::abs(m - prev) <= 1e-15 * (1.0 + std::abs(m))) return m;
        prev = m;
    }
    return prev;
}

int PeriodicFunction::bandwidth() const
{
    if (constant_) return 0;
    if (trig_) return static_cast<int>(std::max(trig_->cos_coeffs.size(), trig_->sin_coeffs.size()));
    return -1;
}

PeriodicFunction PeriodicFunction::operator-() const { return scaled(-1.0); }

PeriodicFunction PeriodicFunction::scaled(double factor) const
{
    if (trig_) {
        TrigSeries t = add(TrigSeries{}, *trig_, factor);
        PeriodicFunction p = trig(length_, std::move(t));
        p.label_ = label_;
        return p;
    }
    auto f = f_;
    return callable(length_, [f, factor](double s) { return factor * f(s); }, label_);
}

PeriodicFunction PeriodicFunction::plus(const PeriodicFunction& other) const
{
    if (std::abs(other.length_ - length_) > 1e-12 * length_)
        throw InvalidInput("periodic function: cannot add functions with different periods");
    if (trig_ && other.trig_) return trig(length_, add(*trig_, *other.trig_, 1.0));
    const PeriodicFunction a = *this;
    const PeriodicFunction b = other;
    return callable(length_, [a, b](double s) { return a(s) + b(s); }, "sum");
}

Eigen::VectorXd periodic_grid(double length, int n)
{
    Eigen::VectorXd s(n);
    for (int j = 0; j < n; ++j) s[j] = length * j / n;
    return s;
}

Eigen::VectorXcd fft_coefficients(const Eigen::VectorXcd& values, int K)
{
    const int n = static_cast<int>(values.size());
    std::vector<Complex> in(values.data(), values.data() + n);
    std::vector<Complex> out;
    Eigen::FFT<double> fft;
    fft.fwd(out, in);
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * K + 1);
    for (int k = -K; k <= K; ++k) {
        // Modes beyond the Nyquist range are not resolved by the samples.
        if (2 * std::abs(k) >= n + (k < 0 ? 1 : 0)) continue;
        const int idx = ((k % n) + n) % n;
        c[k + K] = out[idx] / double(n);
    }
    return c;
}

Eigen::VectorXcd fourier_coefficients(const PeriodicFunction& f, int K, int samples)
{
    if (K < 0) throw InvalidInput("fourier_coefficients: negative cutoff");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(2 * K + 1);
    if (const auto& t = f.trig_series()) {
        c[K] = t->a0;
        const int kc = static_cast<int>(t->cos_coeffs.size());
        const int ks = static_cast<int>(t->sin_coeffs.size());
        for (int k = 1; k <= K; ++k) {
            const double a = k <= kc ? t->cos_coeffs[k - 1] : 0.0;
            const double b = k <= ks ? t->sin_coeffs[k - 1] : 0.0;
            c[K + k] = Complex(a / 2.0, -b / 2.0);
            c[K - k] = Complex(a / 2.0, b / 2.0);
        }
        return c;
    }
    const int n = next_pow2(samples > 0 ? samples : std::max(8 * K, 64));
    Eigen::VectorXcd v(n);
    for (int j = 0; j < n; ++j) v[j] = f(f.length() * j / n);
    return fft_coefficients(v, K);
}

} // namespace aclab
