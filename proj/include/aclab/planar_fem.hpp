#pragma once

#include <functional>
#include <memory>

#include <Eigen/Core>

#include "aclab/domain.hpp"
#include "aclab/field.hpp"
#include "aclab/gauge.hpp"
#include "aclab/inertia.hpp"
#include "aclab/mesh.hpp"
#include "aclab/spectral_count.hpp"

namespace aclab {

// Pauli component: SpinUp is |(-i grad - A)u|^2 - B|u|^2, SpinDown has +B.
enum class PauliComponent { SpinUp, SpinDown };

// Complex P1 discretization of the magnetic Robin form and the L2 mass.
struct MagneticForm {
    SparseMatrixC K, M;
    std::shared_ptr<const TriMesh> mesh;
    int level = 0;
    PauliComponent component = PauliComponent::SpinUp;
    double scale = 1.0; // 1 + max(|A|^2 + |B|) + max |g|: sets the zero guard
    double hermitian_defect = 0.0; // ||K - K^H|| / ||K||

    double value(const Eigen::VectorXcd& u) const { return u.dot(K * u).real(); }
    double mass(const Eigen::VectorXcd& u) const { return u.dot(M * u).real(); }
};

// Exact radial gauge for radial (field, domain) pairs, otherwise the FEM gauge on `level`.
GaugeData planar_gauge(const FieldSpec& field, const DomainSpec& domain, int level);

// Rejects a FEM gauge computed on another mesh level.
MagneticForm assemble(const DomainSpec& domain, const GaugeData& gauge, const FieldSpec& field,
                      const RobinSpec& robin, int level, PauliComponent component = PauliComponent::SpinUp);

struct FemOptions {
    double zero_guard = 1e-10; // relative to MagneticForm::scale
    int report_extra = 2;      // eigenvalues reported beyond the negative ones
    bool critical = false;     // caller knows Phi_j - Phi_g,j is an integer
};

// Negative inertia of K + eps M (count below -eps) and of K - eps M (count_nonpositive);
// the lowest eigenvalues come from shift-invert Lanczos.
SpectralCount count_negative(const MagneticForm& form, const FemOptions& opt = {});

// Nodal interpolant of a complex function on the form's mesh.
Eigen::VectorXcd interpolate(const TriMesh& mesh, const std::function<Complex(const Vec2&)>& u);

struct SmoothValue {
    Complex value;
    Eigen::Vector2cd grad;
};
using SmoothFunction = std::function<SmoothValue(const Vec2&)>;

// Both sides of q(u) = 4 ||e^{-phi} d_zbar e^{phi} u||^2 + int_G (g|u|^2 + tau . j_A(u)),
// with tau . j_A(u) = Re(conj(u) (-i d_s - A_tau) u), by quadrature on the mesh of `level`
// (straight boundary edges).
struct FormIdentity {
    double lhs = 0.0;
    double rhs = 0.0;
    double dbar = 0.0;     // 4 ||e^{-phi} d_zbar e^{phi} u||^2
    double boundary = 0.0; // int_G (g|u|^2 + tau . j_A(u))
    double residual = 0.0; // |lhs - rhs| / (1 + |lhs|)
};
FormIdentity form_identity_residual(const SmoothFunction& u, const DomainSpec& domain, const GaugeData& gauge,
                                    const FieldSpec& field, const RobinSpec& robin, int level);

// Count for the second Pauli component (+B).
SpectralCount pauli_second_component_count(const DomainSpec& domain, const GaugeData& gauge, const FieldSpec& field,
                                           const RobinSpec& robin, int level, const FemOptions& opt = {});

// A + grad chi with the same phi (used for gauge-shift checks).
GaugeData shifted_gauge(const GaugeData& gauge, std::function<Vec2(const Vec2&)> grad_chi);

} // namespace aclab
