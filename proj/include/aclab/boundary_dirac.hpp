#pragma once

#include <vector>

#include <Eigen/Core>

#include "aclab/fourier.hpp"
#include "aclab/types.hpp"

namespace aclab {

// Boundary potential on one component: V = g - A_tau (or V^c = -g - A_tau).
PeriodicFunction boundary_potential(const PeriodicFunction& g, const PeriodicFunction& a_tau);
PeriodicFunction conjugate_boundary_potential(const PeriodicFunction& g, const PeriodicFunction& a_tau);

// Exact spectrum of D_V = -i d/ds + V on a circle of length L:
// mu_m = (2 pi / L)(m + Phi_V), f_m = L^{-1/2} e^{i 2 pi m s / L} e^{i Theta_V(s)}.
struct BoundarySpectrum {
    double length = two_pi;
    double flux = 0.0;  // Phi_V
    int m_lo = 0, m_hi = 0;
    Eigen::VectorXd eigenvalues;      // mu_m for m = m_lo..m_hi
    Eigen::VectorXd s;                // sample grid
    Eigen::MatrixXcd eigenfunctions;  // column m - m_lo holds f_m(s_j)

    double mu(int m) const { return two_pi / length * (m + flux); }
    // 1 if Phi_V is an integer (within 1e-12), else 0.
    int kernel_dimension() const;
};

// Theta_V(s) = (2 pi / L) Phi_V s - int_0^s V, by the Fourier antiderivative.
Eigen::VectorXd dirac_phase(const PeriodicFunction& V, const Eigen::VectorXd& s, int K = 256);

BoundarySpectrum dirac_spectrum(const PeriodicFunction& V, int m_lo, int m_hi, int samples = 256);

// Fourier-Galerkin matrix of D_V on modes -M..M: (2 pi/L) m delta_mn + V^(m - n).
Eigen::MatrixXcd dirac_matrix(const PeriodicFunction& V, int M);

struct NumericCheck {
    double deviation = 0.0;   // max |numeric - analytic| over the middle third
    int compared = 0;
    Eigen::VectorXd numeric;  // all eigenvalues, ascending
};
NumericCheck numeric_spectrum_check(const PeriodicFunction& V, int M);

// Projection onto span{f_m : mu_m < alpha, |m| <= M}, in the Fourier basis on modes
// -(M + pad)..(M + pad) with pad chosen so the eigenfunction tails are below 1e-16.
struct Projection {
    Eigen::MatrixXcd P;
    int rank = 0;
    int pad = 0;
    bool ambiguous = false; // alpha within 1e-12 of an eigenvalue
};
Projection spectral_projection(const PeriodicFunction& V, double alpha, int M);

// || Pi_V(alpha) - e^{i Theta} Pi_0(alpha - 2 pi Phi_V / L) e^{-i Theta} || on the central
// block |k| <= M/2. The left side is built from directly sampled eigenfunctions (phase from
// Gauss quadrature of V), the right side from multiplication operators in Fourier space.
double conjugation_residual(const PeriodicFunction& V, double alpha, int M);

// Orthogonality of w to im Pi_{V - kappa} versus orthogonality of conj(nu) w to im Pi_V,
// where nu(s) = i tau(0) e^{i int_0^s kappa} is the unit inward normal as a complex number.
struct DualityResult {
    bool lhs = false;        // w orthogonal to im Pi_{V - kappa}
    bool rhs = false;        // (nu_1 - i nu_2) w orthogonal to im Pi_V
    double lhs_norm = 0.0;   // || Pi_{V - kappa} w || / ||w||
    double rhs_norm = 0.0;
    bool agree() const { return lhs == rhs; }
};
// w is sampled on the uniform grid of its length; kappa is the curvature as a function of s.
DualityResult duality_check(const PeriodicFunction& V, const PeriodicFunction& kappa, const Eigen::VectorXcd& w,
                            int M, Complex tau0 = Complex(0.0, 1.0));

// Spectrum of a direct sum over components: the multiset union of the lattices, sorted.
std::vector<double> direct_sum_spectrum(const std::vector<PeriodicFunction>& V, double lo, double hi);

} // namespace aclab
