#include "aclab/conformal.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/LU>

#include "aclab/gauge.hpp"
#include "aclab/mesh.hpp"
#include "aclab/quadrature.hpp"

namespace aclab {

double Pullback::flux_gap() const { return std::abs(flux_image - flux_disc); }
double Pullback::robin_gap() const { return std::abs(robin_image - robin_disc); }

Pullback pullback(const ConformalMap& F, const FieldSpec& field, const RobinSpec& robin, int quadrature_level)
{
    F.check_univalent();
    const DomainSpec image = DomainSpec::mapped_disc(F);
    const DomainSpec disc = DomainSpec::disc(1.0);
    robin.check_against(image);

    Pullback p;
    if (F.is_identity()) {
        p.field = field;
    } else {
        p.field = FieldSpec::analytic(
            [F, field](const Vec2& x) {
                const Complex z(x.x(), x.y());
                const Complex w = F(z);
                return std::norm(F.derivative(z)) * field(Vec2(w.real(), w.imag()));
            },
            "pullback(" + field.label() + ")");
    }
    if (robin.is_neumann()) {
        p.robin = RobinSpec::neumann();
    } else {
        const PeriodicFunction g = robin.on_component(0, image.length(0));
        p.robin = RobinSpec::per_component({PeriodicFunction::callable(
            two_pi,
            [F, g, image](double theta) { return F.boundary_speed(theta) * g(image.arclength(0, theta)); },
            "pullback(robin)")});
    }

    // Volume integral over the image mesh: curved cells are mapped triangles, so integrate
    // B |det DF| over the disc mesh triangles (exact geometry).
    const TriMesh dm = disc.mesh(quadrature_level);
    double vol = 0.0;
    for (int t = 0; t < dm.num_triangles(); ++t) {
        const auto& tri = dm.triangles[t];
        const double a = dm.signed_area(t);
        for (const auto& q : quad::tri7) {
            const Vec2 x = q.l0 * dm.nodes[tri[0]] + q.l1 * dm.nodes[tri[1]] + q.l2 * dm.nodes[tri[2]];
            vol += q.w * a * field(F.apply(x)) * F.jacobian(x).determinant();
        }
    }
    // The polygonal disc mesh misses the circular segments; add them in polar coordinates.
    for (const auto& e : dm.boundary) {
        const double t0 = dm.node_param[e.a];
        double t1 = dm.node_param[e.b];
        if (t1 < t0) t1 += two_pi;
        for (int qt = 0; qt < quad::gauss5.n; ++qt) {
            const double th = t0 + quad::gauss5.x[qt] * (t1 - t0);
            const double half = 0.5 * (t1 - t0);
            const double rchord = std::cos(half) / std::cos(th - (t0 + half));
            for (int qr = 0; qr < quad::gauss5.n; ++qr) {
                const double r = rchord + quad::gauss5.x[qr] * (1.0 - rchord);
                const Vec2 x(r * std::cos(th), r * std::sin(th));
                vol += quad::gauss5.w[qt] * quad::gauss5.w[qr] * (t1 - t0) * (1.0 - rchord) * r *
                       field(F.apply(x)) * F.jacobian(x).determinant();
            }
        }
    }
    p.flux_image = vol / two_pi;
    p.flux_disc = field_flux(p.field, disc);

    if (!robin.is_neumann()) {
        p.robin_image = robin.on_component(0, image.length(0)).integral();
        p.robin_disc = p.robin.on_component(0, two_pi).integral();
    }
    return p;
}

InvarianceResult invariance_check(const ConformalMap& F, const FieldSpec& field, const RobinSpec& robin,
                                  int mesh_level, const FemOptions& opt)
{
    InvarianceResult r;
    r.data = pullback(F, field, robin);
    const DomainSpec image = DomainSpec::mapped_disc(F);
    const DomainSpec disc = DomainSpec::disc(1.0);

    const GaugeData gi = solve_potential_2d(field, image, mesh_level);
    r.image = count_negative(assemble(image, gi, field, robin, mesh_level), opt);
    const GaugeData gd = solve_potential_2d(r.data.field, disc, mesh_level);
    r.disc = count_negative(assemble(disc, gd, r.data.field, r.data.robin, mesh_level), opt);
    return r;
}

} // namespace aclab
