#include "aclab/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "aclab/parallel.hpp"
#include "aclab/quadrature.hpp"
#include "aclab/sturm.hpp"

namespace aclab {

SweepPoint semiclassical_point(double R, double h, const FiberOptions& opt)
{
    if (!(h > 0.0)) throw InvalidInput("semiclassical: h must be positive");
    if (!(R > 0.0)) throw InvalidInput("semiclassical: radius must be positive");
    const RadialGauge gauge(FieldSpec::constant(1.0 / h), 0.0, R);
    const double flux = R * R / (2.0 * h);
    const RadialTotal t = total_count(gauge, RadialBoundary{}, opt, static_cast<int>(std::ceil(flux)) + 16);
    SweepPoint p;
    p.h = h;
    p.count = t.total.count_negative;
    p.prediction = static_cast<int>(std::ceil(flux - 1e-12));
    p.certified = t.total.certificate.passed;
    for (double lambda : t.total.eigenvalues_below) {
        const double e = h + h * h * lambda;
        p.sum_e += e;
        p.sum_gap += h - e;
    }
    return p;
}

SweepResult sweep_disc(double R, std::vector<double> h_list, const FiberOptions& opt)
{
    for (double h : h_list)
        if (!(h > 0.0)) throw InvalidInput("semiclassical: h must be positive");
    std::sort(h_list.begin(), h_list.end(), std::greater<>());
    h_list.erase(std::unique(h_list.begin(), h_list.end()), h_list.end());
    SweepResult r;
    r.R = R;
    r.points.resize(h_list.size());
    parallel_for(static_cast<int>(h_list.size()), [&](int i) { r.points[i] = semiclassical_point(R, h_list[i], opt); });
    return r;
}

EigenvalueSums eigenvalue_sums(double R, double h, const FiberOptions& opt)
{
    const SweepPoint p = semiclassical_point(R, h, opt);
    EigenvalueSums s;
    s.h = h;
    s.count = p.count;
    s.sum_e = p.sum_e;
    s.sum_gap = p.sum_gap;
    s.sum_gap_scaled = p.sum_gap / std::sqrt(h);
    s.area_term = 0.5 * R * R;
    s.length_term = R;
    return s;
}

namespace {

double de_gennes_raw(double xi, int n)
{
    const double T = std::max(xi, 0.0) + 10.0;
    const double h = T / n;
    ElementPencil p;
    Eigen::Matrix2d mass;
    mass << 2.0, 1.0, 1.0, 2.0;
    mass *= h / 6.0;
    for (int e = 0; e < n; ++e) {
        Eigen::Matrix2d K;
        K << 1.0, -1.0, -1.0, 1.0;
        K /= h;
        for (int q = 0; q < quad::gauss5.n; ++q) {
            const double t = quad::gauss5.x[q];
            const double x = (e + t) * h;
            const Eigen::Vector2d N(1.0 - t, t);
            K += quad::gauss5.w[q] * h * (x - xi) * (x - xi) * N * N.transpose();
        }
        p.add_element(K, mass);
    }
    p.set_dirichlet(false, true);
    return p.eigenvalue(0, 1e-14);
}

} // namespace

DeGennesValue de_gennes_mu1(double xi, int n)
{
    if (n < 8) throw InvalidInput("de Gennes: grid too coarse");
    DeGennesValue v;
    const double coarse = de_gennes_raw(xi, n);
    v.mu_fine = de_gennes_raw(xi, 2 * n);
    v.mu = (4.0 * v.mu_fine - coarse) / 3.0;
    v.error = std::abs(v.mu - v.mu_fine);
    return v;
}

DeGennesConstant de_gennes_C1(double xi_max, int panels, int n, double tail_tol)
{
    if (!(xi_max > 0.0) || panels < 1) throw InvalidInput("de Gennes: need xi_max > 0 and panels >= 1");
    DeGennesConstant c;
    const double tail = std::abs(1.0 - de_gennes_mu1(xi_max, n).mu);
    c.tail = tail;
    if (tail > tail_tol)
        throw NumericalFailure("de Gennes: 1 - mu_1(xi_max) = " + std::to_string(tail) + " exceeds the tail tolerance; raise xi_max");

    const double w = xi_max / panels;
    const int nq = quad::gauss5.n;
    std::vector<DeGennesValue> vals(panels * nq);
    parallel_for(panels * nq, [&](int k) {
        const int i = k / nq, q = k % nq;
        vals[k] = de_gennes_mu1((i + quad::gauss5.x[q]) * w, n);
    });
    double sum = 0.0, err = 0.0;
    c.mu_min = 1e300;
    std::vector<double> samples;
    for (int i = 0; i < panels; ++i) {
        for (int q = 0; q < nq; ++q) {
            const DeGennesValue& v = vals[i * nq + q];
            sum += quad::gauss5.w[q] * w * (1.0 - v.mu);
            err += quad::gauss5.w[q] * w * v.error;
            samples.push_back(v.mu);
            if (v.mu < c.mu_min) {
                c.mu_min = v.mu;
                c.xi_min = (i + quad::gauss5.x[q]) * w;
            }
        }
    }
    std::size_t k = 0;
    while (k + 1 < samples.size() && samples[k + 1] <= samples[k]) ++k;
    while (k + 1 < samples.size() && samples[k + 1] >= samples[k] - 1e-8) ++k;
    c.unimodal = k + 1 == samples.size();
    c.C1 = sum;
    // mu_1 is analytic in xi, so the composite Gauss error is negligible next to the
    // discretization error carried by the Richardson bars.
    c.error = err + tail;
    return c;
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep)
{
    out.precision(12);
    out << "h,N,prediction,sum_e,sum_gap\n";
    for (const auto& p : sweep.points)
        out << p.h << "," << p.count << "," << p.prediction << "," << p.sum_e << "," << p.sum_gap << "\n";
}

} // namespace aclab
