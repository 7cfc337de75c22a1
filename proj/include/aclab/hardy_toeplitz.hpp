#pragma once

#include <map>

#include <Eigen/Core>

#include "aclab/fourier.hpp"
#include "aclab/spectral_count.hpp"

namespace aclab {

// Compression of D_V to the Hardy modes 0..M: T_mn = (2 pi/L) m delta_mn + V^(m - n).
Eigen::MatrixXcd toeplitz_matrix(const PeriodicFunction& V, int M);

// Eigenvalues of the compression below -eps, eps = 1e-10 (2 pi / L) M.
SpectralCount toeplitz_count(const PeriodicFunction& V, int M);

// W(t) = 2/(1+t^2) V(s(t)), e^{i s(t)} = (i - t)/(i + t), on the line; V has period 2 pi.
struct CayleyTransfer {
    Eigen::VectorXd t, W;          // samples on a symmetric grid
    double line_integral = 0.0;    // int_R W dt (quadrature on [-T, T] plus tail)
    double circle_integral = 0.0;  // int V ds
    double tail = 0.0;             // tail correction 4 V(pi)(pi/2 - atan T)
    double tail_bound = 0.0;       // bound on the remaining tail error
    bool flagged = false;          // |line - circle| > tolerance + tail_bound
};
CayleyTransfer cayley_transfer(const PeriodicFunction& V, double T = 1e3, int samples = 2001, double tol = 1e-6);

// <D_V v, v> for the trace v(s) = sum_{n >= 0} a_n e^{i n (2 pi/L) s} of a holomorphic function.
double holomorphic_witness_form(const std::map<int, Complex>& v, const PeriodicFunction& V);

// I_1(1) by its power series (used as an independent oracle).
double bessel_i1_series(double x);

} // namespace aclab
