#include "aclab/planar_fem.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "aclab/parallel.hpp"
#include "aclab/quadrature.hpp"

namespace aclab {

namespace {

constexpr Complex I(0.0, 1.0);

std::shared_ptr<const TriMesh> mesh_for(const DomainSpec& domain, const GaugeData& gauge, int level)
{
    if (gauge.mesh_level >= 0 && gauge.mesh_level != level)
        throw InvalidInput("planar fem: gauge was computed on mesh level " + std::to_string(gauge.mesh_level) +
                           " but the form is requested on level " + std::to_string(level));
    if (gauge.mesh) return gauge.mesh;
    return std::make_shared<const TriMesh>(domain.mesh(level));
}

// Triangle and local vertex indices of every boundary edge.
struct EdgeOwner {
    int triangle;
    int ia, ib;
};
std::vector<EdgeOwner> boundary_owners(const TriMesh& mesh)
{
    auto key = [](int a, int b) {
        return (static_cast<std::uint64_t>(std::min(a, b)) << 32) | static_cast<std::uint32_t>(std::max(a, b));
    };
    std::unordered_map<std::uint64_t, std::size_t> want;
    for (std::size_t e = 0; e < mesh.boundary.size(); ++e) want[key(mesh.boundary[e].a, mesh.boundary[e].b)] = e;
    std::vector<EdgeOwner> owner(mesh.boundary.size(), {-1, 0, 0});
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        for (int i = 0; i < 3; ++i) {
            const int a = tri[i], b = tri[(i + 1) % 3];
            auto it = want.find(key(a, b));
            if (it == want.end()) continue;
            const auto& be = mesh.boundary[it->second];
            owner[it->second] = {t, be.a == a ? i : (i + 1) % 3, be.a == a ? (i + 1) % 3 : i};
        }
    }
    for (const auto& o : owner)
        if (o.triangle < 0) throw InvalidInput("planar fem: boundary edge without an adjacent triangle");
    return owner;
}

EvalPoint quad_point(const TriMesh& mesh, int t, double l0, double l1, double l2)
{
    const auto& tri = mesh.triangles[t];
    EvalPoint p;
    p.element = t;
    p.bary = Eigen::Vector3d(l0, l1, l2);
    p.x = l0 * mesh.nodes[tri[0]] + l1 * mesh.nodes[tri[1]] + l2 * mesh.nodes[tri[2]];
    return p;
}

// Point at fraction t along boundary edge e, with its arclength on the true curve.
struct EdgePoint {
    EvalPoint p;
    double s;
};
EdgePoint edge_point(const TriMesh& mesh, const DomainSpec& domain, std::size_t e, const EdgeOwner& o, double t)
{
    const auto& be = mesh.boundary[e];
    Eigen::Vector3d bary = Eigen::Vector3d::Zero();
    bary[o.ia] = 1.0 - t;
    bary[o.ib] = t;
    EdgePoint ep;
    ep.p = quad_point(mesh, o.triangle, bary[0], bary[1], bary[2]);
    ep.s = domain.arclength(be.component, lerp_angle(mesh.node_param[be.a], mesh.node_param[be.b], t));
    return ep;
}

} // namespace

GaugeData planar_gauge(const FieldSpec& field, const DomainSpec& domain, int level)
{
    if (field.is_radial() && domain.is_radial()) return solve_radial_potential(field, domain);
    return solve_potential_2d(field, domain, level);
}

MagneticForm assemble(const DomainSpec& domain, const GaugeData& gauge, const FieldSpec& field,
                      const RobinSpec& robin, int level, PauliComponent component)
{
    robin.check_against(domain);
    MagneticForm form;
    form.mesh = mesh_for(domain, gauge, level);
    form.level = level;
    form.component = component;
    const TriMesh& mesh = *form.mesh;
    const int n = mesh.num_nodes();
    const int nt = mesh.num_triangles();
    const double bsign = component == PauliComponent::SpinUp ? -1.0 : 1.0;

    std::vector<Eigen::Matrix3cd> ke(nt);
    std::vector<double> emax(nt, 0.0);
    parallel_for(nt, [&](int t) {
        const P1Triangle e = p1_triangle(mesh, t);
        Eigen::Matrix3cd k = (e.area * e.grad * e.grad.transpose()).cast<Complex>();
        for (const auto& qp : quad::tri7) {
            const EvalPoint p = quad_point(mesh, t, qp.l0, qp.l1, qp.l2);
            const Vec2 A = gauge.A(p);
            const double B = field(p.x);
            const double w = qp.w * e.area;
            const double lam[3] = {qp.l0, qp.l1, qp.l2};
            double ag[3];
            for (int i = 0; i < 3; ++i) ag[i] = A.dot(e.grad.row(i).transpose());
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    k(i, j) += w * (-I * lam[j] * ag[i] + I * lam[i] * ag[j] + (A.squaredNorm() + bsign * B) * lam[i] * lam[j]);
            emax[t] = std::max(emax[t], A.squaredNorm() + std::abs(B));
        }
        ke[t] = k;
    });

    std::vector<Eigen::Triplet<Complex>> kt, mt;
    kt.reserve(9 * nt + 4 * mesh.boundary.size());
    mt.reserve(9 * nt);
    double smax = 0.0;
    for (int t = 0; t < nt; ++t) {
        const auto& tri = mesh.triangles[t];
        const double a = mesh.signed_area(t);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                kt.emplace_back(tri[i], tri[j], ke[t](i, j));
                mt.emplace_back(tri[i], tri[j], a / 12.0 * (i == j ? 2.0 : 1.0));
            }
        smax = std::max(smax, emax[t]);
    }

    double gmax = 0.0;
    if (!robin.is_neumann()) {
        std::vector<PeriodicFunction> g;
        for (int j = 0; j < domain.components(); ++j) g.push_back(robin.on_component(j, domain.length(j)));
        for (const auto& be : mesh.boundary) {
            const double len = (mesh.nodes[be.b] - mesh.nodes[be.a]).norm();
            Eigen::Matrix2d m = Eigen::Matrix2d::Zero();
            for (int q = 0; q < quad::gauss5.n; ++q) {
                const double t = quad::gauss5.x[q];
                const double s = domain.arclength(be.component, lerp_angle(mesh.node_param[be.a], mesh.node_param[be.b], t));
                const double gv = g[be.component](s);
                gmax = std::max(gmax, std::abs(gv));
                const Eigen::Vector2d l(1.0 - t, t);
                m += quad::gauss5.w[q] * len * gv * l * l.transpose();
            }
            const int id[2] = {be.a, be.b};
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) kt.emplace_back(id[i], id[j], m(i, j));
        }
    }
    form.K.resize(n, n);
    form.K.setFromTriplets(kt.begin(), kt.end());
    form.M.resize(n, n);
    form.M.setFromTriplets(mt.begin(), mt.end());
    form.scale = 1.0 + smax + gmax;
    const SparseMatrixC H = form.K.adjoint();
    form.hermitian_defect = (form.K - H).norm() / std::max(form.K.norm(), 1e-300);
    return form;
}

SpectralCount count_negative(const MagneticForm& form, const FemOptions& opt)
{
    const double eps = opt.zero_guard * form.scale;
    const Inertia below = pencil_inertia(form.K, form.M, -eps);
    const Inertia upto = pencil_inertia(form.K, form.M, eps);

    SpectralCount r;
    r.count_negative = below.negative;
    r.count_nonpositive = upto.negative;
    r.threshold = 0.0;
    r.threshold_critical = opt.critical || below.negative != upto.negative;
    r.certificate.method = "fem-p1";
    r.certificate.level = form.level;
    r.certificate.tolerance = eps;
    r.certificate.note = "inertia at -eps: " + std::to_string(below.negative) + ", at +eps: " +
                         std::to_string(upto.negative) + (below.dense_fallback ? " (dense fallback)" : "");

    const int k = r.count_negative + std::max(opt.report_extra, 0);
    if (k > 0) {
        try {
            const double sigma = spectrum_lower_bound(form.K, form.M, form.scale);
            const std::vector<double> ev = lowest_eigenvalues(form.K, form.M, k, sigma);
            for (double v : ev)
                if (v < -eps) r.eigenvalues_below.push_back(v);
            if (static_cast<int>(r.eigenvalues_below.size()) != r.count_negative) {
                r.certificate.passed = false;
                r.certificate.note += "; eigenvalue report disagrees with inertia";
            }
            r.certificate.note += "; lowest:";
            for (double v : ev) r.certificate.note += " " + std::to_string(v);
        } catch (const NumericalFailure& e) {
            r.certificate.note += std::string("; eigenvalue report unavailable: ") + e.what();
        }
    }
    return r;
}

Eigen::VectorXcd interpolate(const TriMesh& mesh, const std::function<Complex(const Vec2&)>& u)
{
    Eigen::VectorXcd v(mesh.num_nodes());
    for (int i = 0; i < mesh.num_nodes(); ++i) v[i] = u(mesh.nodes[i]);
    return v;
}

FormIdentity form_identity_residual(const SmoothFunction& u, const DomainSpec& domain, const GaugeData& gauge,
                                    const FieldSpec& field, const RobinSpec& robin, int level)
{
    robin.check_against(domain);
    const auto mesh_ptr = mesh_for(domain, gauge, level);
    const TriMesh& mesh = *mesh_ptr;
    FormIdentity r;
    double bulk = 0.0, dbar = 0.0;
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const double area = mesh.signed_area(t);
        for (const auto& qp : quad::tri7) {
            const EvalPoint p = quad_point(mesh, t, qp.l0, qp.l1, qp.l2);
            const SmoothValue v = u(p.x);
            const Vec2 A = gauge.A(p);
            const Vec2 gp = gauge.grad_phi(p);
            const Complex c1 = -I * v.grad[0] - A.x() * v.value;
            const Complex c2 = -I * v.grad[1] - A.y() * v.value;
            const double w = qp.w * area;
            bulk += w * (std::norm(c1) + std::norm(c2) - field(p.x) * std::norm(v.value));
            // d_zbar = (d_1 + i d_2)/2
            const Complex dz = 0.5 * (v.grad[0] + I * v.grad[1]) + 0.5 * Complex(gp.x(), gp.y()) * v.value;
            dbar += w * 4.0 * std::norm(dz);
        }
    }
    const auto owners = boundary_owners(mesh);
    std::vector<PeriodicFunction> g;
    for (int j = 0; j < domain.components(); ++j) g.push_back(robin.on_component(j, domain.length(j)));
    double robin_part = 0.0, current = 0.0;
    for (std::size_t e = 0; e < mesh.boundary.size(); ++e) {
        const auto& be = mesh.boundary[e];
        const Vec2 d = mesh.nodes[be.b] - mesh.nodes[be.a];
        const double len = d.norm();
        const Vec2 tau = d / len;
        for (int q = 0; q < quad::gauss8.n; ++q) {
            const EdgePoint ep = edge_point(mesh, domain, e, owners[e], quad::gauss8.x[q]);
            const SmoothValue v = u(ep.p.x);
            const double w = quad::gauss8.w[q] * len;
            const Complex ds = tau.x() * v.grad[0] + tau.y() * v.grad[1];
            const double at = tau.dot(gauge.A(ep.p));
            robin_part += w * g[be.component](ep.s) * std::norm(v.value);
            current += w * (std::conj(v.value) * (-I * ds - at * v.value)).real();
        }
    }
    r.lhs = bulk + robin_part;
    r.dbar = dbar;
    r.boundary = robin_part + current;
    r.rhs = dbar + r.boundary;
    r.residual = std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.lhs));
    return r;
}

SpectralCount pauli_second_component_count(const DomainSpec& domain, const GaugeData& gauge, const FieldSpec& field,
                                           const RobinSpec& robin, int level, const FemOptions& opt)
{
    return count_negative(assemble(domain, gauge, field, robin, level, PauliComponent::SpinDown), opt);
}

GaugeData shifted_gauge(const GaugeData& gauge, std::function<Vec2(const Vec2&)> grad_chi)
{
    GaugeData out = gauge;
    out.method = gauge.method + "+gradient";
    auto base = gauge.A;
    out.A = [base, grad_chi](const EvalPoint& p) -> Vec2 { return base(p) + grad_chi(p.x); };
    out.phi = [](const EvalPoint&) -> double {
        throw InvalidInput("shifted gauge: A is no longer J grad phi");
    };
    return out;
}

} // namespace aclab
