#pragma once

#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "aclab/domain.hpp"
#include "aclab/field.hpp"
#include "aclab/fourier.hpp"
#include "aclab/types.hpp"

namespace aclab {

struct TriMesh;

// A point handed to gauge evaluators. Mesh-based gauges use (element, bary) and ignore x.
struct EvalPoint {
    Vec2 x = Vec2::Zero();
    int element = -1;
    Eigen::Vector3d bary = Eigen::Vector3d::Constant(1.0 / 3.0);
};

// Rotationally symmetric solution of Delta phi = B with phi = 0 on both circles.
// In polar form r phi'(r) = c + G(r) with G(r) = int_{r_in}^r B(rho) rho drho.
class RadialGauge {
public:
    RadialGauge(FieldSpec field, double r_in, double r_out, int cells = 4096);

    double r_in() const { return r_in_; }
    double r_out() const { return r_out_; }
    bool is_disc() const { return r_in_ == 0.0; }
    const FieldSpec& field() const { return field_; }

    double B(double r) const { return field_.radial_value(r); }
    double G(double r) const;
    double phi(double r) const;
    // a(r) = phi'(r), the angular component of A.
    double a(double r) const;

    // Circulation fluxes with tau = e_theta outside and tau = -e_theta on the inner circle.
    double flux_outer() const { return c_ + G(r_out_); }
    double flux_inner() const { return -c_; }
    double total_flux() const { return G(r_out_); }
    double integration_constant() const { return c_; }

private:
    double P(double r) const; // int_{r_in}^r G(rho)/rho drho
    int cell(double r) const;

    FieldSpec field_;
    double r_in_, r_out_;
    double c_ = 0.0;
    double p_total_ = 0.0;
    bool closed_form_ = false;
    int cells_;
    double h_;
    std::vector<double> G_nodes_, P_nodes_;
};

struct GaugeDiagnostics {
    double boundary_phi = 0.0;     // max |phi| on boundary nodes
    double curl_residual = 0.0;    // relative L2 misfit of curl A against B (interior elements)
    double div_residual = 0.0;     // relative L2 size of div A (interior elements)
    double normal_residual = 0.0;  // max |nu . A| / max |A| on boundary edges
    double quadrature_flux_gap = 0.0; // |sum of boundary-quadrature fluxes - sum of fluxes|
};

// Samples of the tangential trace A_tau along one boundary component.
struct BoundaryTrace {
    int component = 0;
    double length = 0.0;
    std::vector<double> s;
    std::vector<double> a_tau;
};

// Gauge potential phi, vector potential A = (-d2 phi, d1 phi) and the boundary fluxes.
struct GaugeData {
    std::string method;  // "radial", "fem" or "analytic"
    std::function<double(const EvalPoint&)> phi;
    std::function<Vec2(const EvalPoint&)> A;

    std::vector<double> flux; // Phi_j per boundary component
    double total_flux = 0.0;  // sum_j Phi_j
    double field_flux = 0.0;  // (1/2pi) int_Omega B by volume quadrature
    std::vector<BoundaryTrace> traces;
    GaugeDiagnostics diagnostics;

    // -1 for gauges valid on any mesh; otherwise the mesh they were computed on.
    int mesh_level = -1;
    int mesh_nodes = 0;
    std::shared_ptr<const RadialGauge> radial;
    std::shared_ptr<const TriMesh> mesh;
    Eigen::VectorXd nodal_phi;

    Vec2 grad_phi(const EvalPoint& p) const { return -rot90(A(p)); }
    // A_tau on component j as a periodic function of arclength.
    PeriodicFunction tangential_trace(int j) const;
};

struct RobinFluxes {
    std::vector<double> per_component;
    double total = 0.0;
};

GaugeData solve_radial_potential(const FieldSpec& field, const DomainSpec& domain, int cells = 4096);
GaugeData solve_potential_2d(const FieldSpec& field, const DomainSpec& domain, int mesh_level);
GaugeData solve_potential_2d(const FieldSpec& field, const DomainSpec& domain,
                             std::shared_ptr<const TriMesh> mesh);
// Gauge from a known potential phi (must satisfy Delta phi = B and phi = 0 on the boundary).
GaugeData analytic_gauge(std::function<double(const Vec2&)> phi,
                         std::function<Vec2(const Vec2&)> grad_phi, const FieldSpec& field,
                         const DomainSpec& domain);

RobinFluxes robin_fluxes(const RobinSpec& robin, const DomainSpec& domain);
// (1/2pi) int_Omega B dx by tensor Gauss quadrature in polar coordinates.
double field_flux(const FieldSpec& field, const DomainSpec& domain);

// CSV "r,phi,a,B" on `samples` + 1 equispaced radii.
void write_radial_csv(std::ostream& out, const RadialGauge& gauge, int samples);
// CSV "x,y,phi" of the nodal values of a FEM gauge.
void write_nodal_csv(std::ostream& out, const GaugeData& gauge);

} // namespace aclab
