#pragma once

#include <iosfwd>
#include <vector>

#include "aclab/radial_fibers.hpp"

namespace aclab {

// One point of the h-sweep for L_h = (-i h grad - A)^2 on the disc with B = 1, g = 0.
// Uses L_h - h = h^2 H_{B/h}, so e_j = h + h^2 lambda_j with lambda_j the negative fiber eigenvalues.
struct SweepPoint {
    double h = 0.0;
    int count = 0;          // N(L_h, h)
    int prediction = 0;     // ceil(R^2 / (2h))
    double sum_e = 0.0;     // sum over e_j < h of e_j
    double sum_gap = 0.0;   // sum over e_j < h of (h - e_j)
    bool certified = false; // fiber truncation certificate
};

struct SweepResult {
    double R = 1.0;
    std::vector<SweepPoint> points; // h strictly decreasing
};

// Rejects h <= 0. Fiber cutoff M = ceil(R^2/(2h)) + 16.
SweepPoint semiclassical_point(double R, double h, const FiberOptions& opt = {});
SweepResult sweep_disc(double R, std::vector<double> h_list, const FiberOptions& opt = {});

struct EigenvalueSums {
    double h = 0.0;
    double sum_e = 0.0;
    double sum_gap = 0.0;
    double sum_gap_scaled = 0.0; // sum_gap / sqrt(h)
    double area_term = 0.0;      // |Omega| / 2pi = R^2 / 2
    double length_term = 0.0;    // |Gamma| / 2pi = R
    int count = 0;
};
EigenvalueSums eigenvalue_sums(double R, double h, const FiberOptions& opt = {});

// Lowest eigenvalue of -d^2/dt^2 + (t - xi)^2 on [0, max(xi, 0) + 10] with Neumann at 0 and
// Dirichlet at the far end, P1 with n elements and Richardson extrapolation over n, 2n.
struct DeGennesValue {
    double mu = 0.0;        // extrapolated
    double mu_fine = 0.0;   // raw value at 2n
    double error = 0.0;     // |mu - mu_fine|
};
DeGennesValue de_gennes_mu1(double xi, int n = 2000);

struct DeGennesConstant {
    double C1 = 0.0;        // int_0^xi_max (1 - mu_1)
    double error = 0.0;     // Richardson error bar plus the tail
    double tail = 0.0;      // |1 - mu_1(xi_max)|
    double xi_min = 0.0;    // location of the sampled minimum of mu_1
    double mu_min = 0.0;
    bool unimodal = true;   // samples decrease then increase
};
// Composite Gauss-5 on `panels` panels of [0, xi_max]; throws if the tail exceeds tail_tol.
DeGennesConstant de_gennes_C1(double xi_max = 8.0, int panels = 32, int n = 2000, double tail_tol = 1e-6);

// CSV "h,N,prediction,sum_e,sum_gap".
void write_sweep_csv(std::ostream& out, const SweepResult& sweep);

} // namespace aclab
