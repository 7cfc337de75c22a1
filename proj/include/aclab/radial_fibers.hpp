#pragma once

#include <iosfwd>
#include <vector>

#include "aclab/domain.hpp"
#include "aclab/field.hpp"
#include "aclab/gauge.hpp"
#include "aclab/spectral_count.hpp"
#include "aclab/sturm.hpp"

namespace aclab {

// Trial space for a fiber:
//  Plain        P1 hat functions in r with weight r dr.
//  GroundState  u = psi * w with psi = r^m e^{-phi} the Neumann-free solution of H_m psi = 0
//               and w piecewise linear. The form becomes int psi^2 |w'|^2 r dr plus boundary
//               terms psi^2 (m - Phi_j + Phi_g,j) w^2, which resolves exponentially small
//               negative eigenvalues at strong fields.
//  Automatic    GroundState where psi is admissible (m >= 0 on the disc, all m on annuli).
enum class FiberBasis { Automatic, Plain, GroundState };

enum class OriginDof { Automatic, Keep, Remove };

struct FiberOptions {
    int n = 4096;                     // radial elements
    FiberBasis basis = FiberBasis::Automatic;
    OriginDof origin = OriginDof::Automatic;
    int report_lowest = 3;            // lowest eigenvalues reported per fiber
    double critical_tolerance = 1e-9; // |m - Phi_j + Phi_g,j| below this: exact zero mode
    double zero_guard = 1e-10;        // relative guard for the plain basis
};

// Constant Robin coefficients on the outer and inner circle.
struct RadialBoundary {
    double g_outer = 0.0;
    double g_inner = 0.0;
};
RadialBoundary radial_boundary(const RobinSpec& robin, const DomainSpec& domain);

// Gauge data sampled at the Gauss points of a uniform radial grid; shared by all fibers.
class FiberGrid {
public:
    FiberGrid(const RadialGauge& gauge, int n);
    int n() const { return n_; }
    double r_in() const { return r_in_; }
    double r_out() const { return r_out_; }
    double h() const { return h_; }
    double node(int i) const { return r_in_ + i * h_; }
    const RadialGauge& gauge() const { return *gauge_; }

    static constexpr int nq = 5;
    // Gauss data of element e, point q.
    double x(int e, int q) const { return x_[e * nq + q]; }
    double a(int e, int q) const { return a_[e * nq + q]; }
    double phi(int e, int q) const { return phi_[e * nq + q]; }
    double B(int e, int q) const { return B_[e * nq + q]; }
    // 1 + max (|B| + a^2): scale of the smooth part of the fiber potential.
    double potential_scale() const { return scale_; }

private:
    const RadialGauge* gauge_;
    int n_;
    double r_in_, r_out_, h_;
    std::vector<double> x_, a_, phi_, B_;
    double scale_ = 1.0;
};

struct FiberResult {
    int m = 0;
    SpectralCount count;
    std::vector<double> lowest;
    bool critical = false;
    FiberBasis basis = FiberBasis::Plain;
    bool origin_removed = false;
};

// Assembled fiber pencil (exposed for tests and eigenvector work).
struct FiberPencil {
    ElementPencil pencil;
    FiberBasis basis = FiberBasis::Plain;
    bool origin_removed = false;
    bool critical = false;
    double guard = 0.0;
};
FiberPencil assemble_fiber(int m, const FiberGrid& grid, const RadialBoundary& bc, const FiberOptions& opt);

FiberResult fiber_count(int m, const FiberGrid& grid, const RadialBoundary& bc, const FiberOptions& opt = {});
FiberResult fiber_count(int m, const RadialGauge& gauge, const RadialBoundary& bc, const FiberOptions& opt = {});

struct RadialTotal {
    SpectralCount total;
    std::vector<FiberResult> fibers; // m = -M..M
    int cutoff = 0;

    const FiberResult& fiber(int m) const { return fibers.at(static_cast<std::size_t>(m + cutoff)); }
};

// Sums the fiber counts over m in [-M, M]; M < 0 selects ceil(|Phi| + |Phi_g|) + 8.
// The certificate fails (with a note to raise M) if a fiber at |m| = M is not >= 0.
RadialTotal total_count(const RadialGauge& gauge, const RadialBoundary& bc, const FiberOptions& opt = {},
                        int M = -1);

struct ZeroModeSlope {
    double exact = 0.0;   // (m - Phi) R^{m-1}
    double numeric = 0.0; // finite difference of r^m e^{-phi(r)} at r = R
};
ZeroModeSlope zero_mode_derivative(int m, const RadialGauge& gauge);

struct FeynmanHellmann {
    double beta_star = 0.0;  // field strength with flux exactly m
    double eigenvalue = 0.0; // lowest fiber eigenvalue there (a zero mode)
    double slope = 0.0;      // d lambda / d beta
};
// Field `field` is scaled by beta; R is the disc radius.
FeynmanHellmann feynman_hellmann_slope(int m, const FieldSpec& field, double R, int n = 2048);

// CSV "m,count,critical,lambda_1,...".
void write_fiber_csv(std::ostream& out, const RadialTotal& total);

} // namespace aclab
