#include "aclab/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "aclab/mesh.hpp"
#include "aclab/quadrature.hpp"

namespace aclab {

RadialGauge::RadialGauge(FieldSpec field, double r_in, double r_out, int cells)
    : field_(std::move(field)), r_in_(r_in), r_out_(r_out), cells_(cells)
{
    if (!field_.is_radial()) throw InvalidInput("radial gauge: field '" + field_.label() + "' is not radial");
    if (!(r_in >= 0.0) || !(r_in < r_out))
        throw InvalidInput("radial gauge: need 0 <= r_in < r_out");
    if (cells < 1) throw InvalidInput("radial gauge: need at least one cell");
    h_ = (r_out_ - r_in_) / cells_;
    closed_form_ = field_.is_constant();
    if (!closed_form_) {
        G_nodes_.assign(cells_ + 1, 0.0);
        P_nodes_.assign(cells_ + 1, 0.0);
        for (int i = 0; i < cells_; ++i) {
            const double r0 = r_in_ + i * h_;
            double g = 0.0, p = 0.0;
            for (int q = 0; q < quad::gauss5.n; ++q) {
                const double r = r0 + quad::gauss5.x[q] * h_;
                g += quad::gauss5.w[q] * B(r) * r;
                // G inside the cell from its left node.
                double gi = G_nodes_[i];
                const double d = r - r0;
                for (int q2 = 0; q2 < quad::gauss5.n; ++q2) {
                    const double t = r0 + quad::gauss5.x[q2] * d;
                    gi += quad::gauss5.w[q2] * B(t) * t * d;
                }
                p += quad::gauss5.w[q] * gi / r;
            }
            G_nodes_[i + 1] = G_nodes_[i] + g * h_;
            P_nodes_[i + 1] = P_nodes_[i] + p * h_;
        }
    }
    p_total_ = P(r_out_);
    c_ = is_disc() ? 0.0 : -p_total_ / std::log(r_out_ / r_in_);
}

int RadialGauge::cell(double r) const
{
    return std::clamp(static_cast<int>((r - r_in_) / h_), 0, cells_ - 1);
}

double RadialGauge::G(double r) const
{
    if (closed_form_) return 0.5 * field_.beta() * (r * r - r_in_ * r_in_);
    const int i = cell(r);
    const double r0 = r_in_ + i * h_, d = r - r0;
    double g = G_nodes_[i];
    for (int q = 0; q < quad::gauss5.n; ++q) {
        const double t = r0 + quad::gauss5.x[q] * d;
        g += quad::gauss5.w[q] * B(t) * t * d;
    }
    return g;
}

double RadialGauge::P(double r) const
{
    if (closed_form_) {
        const double b = field_.beta();
        if (is_disc()) return 0.25 * b * r * r;
        return 0.5 * b * (0.5 * (r * r - r_in_ * r_in_) - r_in_ * r_in_ * std::log(r / r_in_));
    }
    const int i = cell(r);
    const double r0 = r_in_ + i * h_, d = r - r0;
    double p = P_nodes_[i];
    for (int q = 0; q < quad::gauss5.n; ++q) {
        const double t = r0 + quad::gauss5.x[q] * d;
        p += quad::gauss5.w[q] * G(t) / t * d;
    }
    return p;
}

double RadialGauge::phi(double r) const
{
    if (is_disc()) return P(r) - p_total_;
    return c_ * std::log(r / r_in_) + P(r);
}

double RadialGauge::a(double r) const
{
    if (r <= 0.0) return 0.0;
    return (c_ + G(r)) / r;
}

PeriodicFunction GaugeData::tangential_trace(int j) const
{
    if (j < 0 || j >= static_cast<int>(traces.size()))
        throw InvalidInput("gauge: no tangential trace for component " + std::to_string(j));
    const auto& t = traces[j];
    if (t.s.size() == 1) return PeriodicFunction::constant(t.length, t.a_tau.front());
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < t.s.size(); ++i) pts.emplace_back(t.s[i], t.a_tau[i]);
    std::sort(pts.begin(), pts.end());
    const double L = t.length;
    return PeriodicFunction::callable(
        L,
        [pts, L](double s) {
            s = std::fmod(s, L);
            if (s < 0.0) s += L;
            auto it = std::upper_bound(pts.begin(), pts.end(), std::make_pair(s, -1e300));
            const auto& hi = it == pts.end() ? pts.front() : *it;
            const auto& lo = it == pts.begin() ? pts.back() : *(it - 1);
            double s0 = lo.first, s1 = hi.first;
            if (it == pts.begin()) s0 -= L;
            if (it == pts.end()) s1 += L;
            const double w = s1 > s0 ? (s - s0) / (s1 - s0) : 0.0;
            return (1.0 - w) * lo.second + w * hi.second;
        },
        "tangential-trace");
}

double field_flux(const FieldSpec& field, const DomainSpec& domain)
{
    if (field.is_constant()) return field.beta() * domain.area() / two_pi;
    const bool mapped = domain.kind() == DomainSpec::Kind::MappedDisc;
    const double r0 = domain.kind() == DomainSpec::Kind::Annulus ? domain.inner_radius() : 0.0;
    const double r1 = mapped ? 1.0 : domain.outer_radius();
    const int panels = 96, nt = 512;
    const double hr = (r1 - r0) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i)
        for (int q = 0; q < quad::gauss5.n; ++q) {
            const double r = r0 + (i + quad::gauss5.x[q]) * hr;
            double ring = 0.0;
            if (field.is_radial() && !mapped) {
                ring = field.radial_value(r) * nt;
            } else {
                for (int k = 0; k < nt; ++k) {
                    const Complex z = std::polar(r, two_pi * k / nt);
                    if (mapped) {
                        const Complex w = domain.map()(z);
                        ring += field(Vec2(w.real(), w.imag())) * std::norm(domain.map().derivative(z));
                    } else {
                        ring += field(Vec2(z.real(), z.imag()));
                    }
                }
            }
            sum += quad::gauss5.w[q] * hr * r * ring * (two_pi / nt);
        }
    return sum / two_pi;
}

RobinFluxes robin_fluxes(const RobinSpec& robin, const DomainSpec& domain)
{
    robin.check_against(domain);
    RobinFluxes f;
    for (int j = 0; j < domain.components(); ++j) {
        f.per_component.push_back(robin.on_component(j, domain.length(j)).flux());
        f.total += f.per_component.back();
    }
    return f;
}

GaugeData solve_radial_potential(const FieldSpec& field, const DomainSpec& domain, int cells)
{
    if (!domain.is_radial()) throw InvalidInput("radial gauge: domain " + domain.describe() + " is not a disc or annulus");
    if (!field.is_radial()) throw InvalidInput("radial gauge: field '" + field.label() + "' is not radial");
    auto rg = std::make_shared<const RadialGauge>(field, domain.inner_radius(), domain.outer_radius(), cells);

    GaugeData g;
    g.method = "radial";
    g.radial = rg;
    g.phi = [rg](const EvalPoint& p) { return rg->phi(p.x.norm()); };
    g.A = [rg](const EvalPoint& p) -> Vec2 {
        const double r = p.x.norm();
        if (r == 0.0) return Vec2::Zero();
        return rg->a(r) / r * rot90(p.x);
    };
    g.flux.push_back(rg->flux_outer());
    g.traces.push_back({0, domain.length(0), {0.0}, {rg->a(rg->r_out())}});
    if (!rg->is_disc()) {
        g.flux.push_back(rg->flux_inner());
        g.traces.push_back({1, domain.length(1), {0.0}, {-rg->a(rg->r_in())}});
    }
    for (double f : g.flux) g.total_flux += f;
    g.field_flux = field_flux(field, domain);
    g.diagnostics.boundary_phi = std::max(std::abs(rg->phi(rg->r_out())),
                                          rg->is_disc() ? 0.0 : std::abs(rg->phi(rg->r_in())));
    return g;
}

namespace {

Vec2 boundary_tangent(const DomainSpec& domain, int j, double theta)
{
    Vec2 d;
    if (domain.kind() == DomainSpec::Kind::MappedDisc) {
        const Complex z = std::polar(1.0, theta);
        const Complex v = Complex(0.0, 1.0) * z * domain.map().derivative(z);
        d = Vec2(v.real(), v.imag());
    } else {
        d = Vec2(-std::sin(theta), std::cos(theta));
    }
    d.normalize();
    return j == 1 ? Vec2(-d) : d;
}

} // namespace

GaugeData analytic_gauge(std::function<double(const Vec2&)> phi, std::function<Vec2(const Vec2&)> grad_phi,
                         const FieldSpec& field, const DomainSpec& domain)
{
    GaugeData g;
    g.method = "analytic";
    g.phi = [phi](const EvalPoint& p) { return phi(p.x); };
    g.A = [grad_phi](const EvalPoint& p) { return rot90(grad_phi(p.x)); };
    const int n = 2048;
    for (int j = 0; j < domain.components(); ++j) {
        BoundaryTrace tr{j, domain.length(j), {}, {}};
        double circ = 0.0, bphi = 0.0;
        for (int k = 0; k < n; ++k) {
            const double theta = two_pi * k / n;
            const Vec2 x = domain.boundary_point(j, theta);
            const double at = boundary_tangent(domain, j, theta).dot(rot90(grad_phi(x)));
            double speed = domain.kind() == DomainSpec::Kind::MappedDisc
                               ? domain.map().boundary_speed(theta)
                               : (j == 0 ? domain.outer_radius() : domain.inner_radius());
            circ += at * speed * (two_pi / n);
            bphi = std::max(bphi, std::abs(phi(x)));
            tr.s.push_back(domain.arclength(j, theta));
            tr.a_tau.push_back(at);
        }
        g.flux.push_back(circ / two_pi);
        g.traces.push_back(std::move(tr));
        g.diagnostics.boundary_phi = std::max(g.diagnostics.boundary_phi, bphi);
    }
    for (double f : g.flux) g.total_flux += f;
    g.field_flux = field_flux(field, domain);
    return g;
}

GaugeData solve_potential_2d(const FieldSpec& field, const DomainSpec& domain, int mesh_level)
{
    return solve_potential_2d(field, domain, std::make_shared<const TriMesh>(domain.mesh(mesh_level)));
}

GaugeData solve_potential_2d(const FieldSpec& field, const DomainSpec& domain, std::shared_ptr<const TriMesh> mesh_ptr)
{
    const TriMesh& mesh = *mesh_ptr;
    const int n = mesh.num_nodes();
    std::vector<int> dof(n, -1);
    int nfree = 0;
    for (int i = 0; i < n; ++i)
        if (mesh.node_component[i] < 0) dof[i] = nfree++;

    // Weak form of Delta phi = B with phi = 0 on the boundary: K phi = -b.
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(mesh.triangles.size() * 9);
    Eigen::VectorXd load_all = Eigen::VectorXd::Zero(n);
    std::vector<P1Triangle> geo(mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        geo[t] = p1_triangle(mesh, t);
        const auto& e = geo[t];
        const Eigen::Matrix3d k = e.area * e.grad * e.grad.transpose();
        for (const auto& qp : quad::tri7) {
            const Vec2 x = qp.l0 * mesh.nodes[tri[0]] + qp.l1 * mesh.nodes[tri[1]] + qp.l2 * mesh.nodes[tri[2]];
            const double b = field(x) * qp.w * e.area;
            load_all[tri[0]] += b * qp.l0;
            load_all[tri[1]] += b * qp.l1;
            load_all[tri[2]] += b * qp.l2;
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (dof[tri[i]] >= 0 && dof[tri[j]] >= 0) trip.emplace_back(dof[tri[i]], dof[tri[j]], k(i, j));
    }
    Eigen::SparseMatrix<double> K(nfree, nfree);
    K.setFromTriplets(trip.begin(), trip.end());
    Eigen::VectorXd rhs(nfree);
    for (int i = 0; i < n; ++i)
        if (dof[i] >= 0) rhs[dof[i]] = -load_all[i];

    Eigen::VectorXd phi = Eigen::VectorXd::Zero(n);
    if (nfree > 0) {
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(K);
        bool ok = solver.info() == Eigen::Success && (solver.vectorD().array() > 0.0).all();
        if (!ok) {
            int worst = 0;
            for (int t = 1; t < mesh.num_triangles(); ++t)
                if (geo[t].area < geo[worst].area) worst = t;
            throw NumericalFailure("potential solver: singular stiffness matrix; smallest element is triangle " +
                                   std::to_string(worst) + " with area " + std::to_string(geo[worst].area));
        }
        const Eigen::VectorXd x = solver.solve(rhs);
        for (int i = 0; i < n; ++i)
            if (dof[i] >= 0) phi[i] = x[dof[i]];
    }

    // Area-weighted recovery of a continuous gradient.
    std::vector<Vec2> grad(n, Vec2::Zero());
    std::vector<double> weight(n, 0.0);
    std::vector<Vec2> elem_grad(mesh.num_triangles());
    for (int t = 0; t < mesh.num_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        Vec2 g = Vec2::Zero();
        for (int i = 0; i < 3; ++i) g += phi[tri[i]] * geo[t].grad.row(i).transpose();
        elem_grad[t] = g;
        for (int i = 0; i < 3; ++i) {
            grad[tri[i]] += geo[t].area * g;
            weight[tri[i]] += geo[t].area;
        }
    }
    for (int i = 0; i < n; ++i) grad[i] /= weight[i];

    GaugeData out;
    out.method = "fem";
    out.mesh = mesh_ptr;
    out.mesh_level = mesh.level;
    out.mesh_nodes = n;
    out.nodal_phi = phi;
    const int ntri = mesh.num_triangles();
    auto nodal = std::make_shared<const Eigen::VectorXd>(phi);
    auto grads = std::make_shared<const std::vector<Vec2>>(std::move(grad));
    out.phi = [mesh_ptr, nodal, ntri](const EvalPoint& p) {
        if (p.element < 0 || p.element >= ntri) throw InvalidInput("fem gauge: evaluation point is not on the gauge mesh");
        const auto& tri = mesh_ptr->triangles[p.element];
        return p.bary[0] * (*nodal)[tri[0]] + p.bary[1] * (*nodal)[tri[1]] + p.bary[2] * (*nodal)[tri[2]];
    };
    out.A = [mesh_ptr, grads, ntri](const EvalPoint& p) -> Vec2 {
        if (p.element < 0 || p.element >= ntri) throw InvalidInput("fem gauge: evaluation point is not on the gauge mesh");
        const auto& tri = mesh_ptr->triangles[p.element];
        const auto& G = *grads;
        return rot90(p.bary[0] * G[tri[0]] + p.bary[1] * G[tri[1]] + p.bary[2] * G[tri[2]]);
    };

    // Consistent boundary flux: the residual of the full system on boundary nodes equals
    // int lambda_i d_n phi ds, and A_tau = d phi / d n_outward.
    Eigen::VectorXd residual = load_all;
    for (int t = 0; t < ntri; ++t) {
        const auto& tri = mesh.triangles[t];
        const Eigen::Matrix3d k = geo[t].area * geo[t].grad * geo[t].grad.transpose();
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) residual[tri[i]] += k(i, j) * phi[tri[j]];
    }
    const int ncomp = domain.components();
    out.flux.assign(ncomp, 0.0);
    for (int i = 0; i < n; ++i)
        if (mesh.node_component[i] >= 0) out.flux[mesh.node_component[i]] += residual[i] / two_pi;
    for (double f : out.flux) out.total_flux += f;

    std::vector<double> quad_flux(ncomp, 0.0);
    out.traces.resize(ncomp);
    double amax = 0.0, nmax = 0.0;
    for (int j = 0; j < ncomp; ++j) out.traces[j] = {j, domain.length(j), {}, {}};
    for (const auto& e : mesh.boundary) {
        const Vec2 d = mesh.nodes[e.b] - mesh.nodes[e.a];
        const double len = d.norm();
        const Vec2 tau = d / len;
        const Vec2 A = rot90(0.5 * ((*grads)[e.a] + (*grads)[e.b]));
        const double at = tau.dot(A);
        quad_flux[e.component] += at * len / two_pi;
        auto& tr = out.traces[e.component];
        tr.s.push_back(domain.arclength(e.component, mid_angle(mesh.node_param[e.a], mesh.node_param[e.b])));
        tr.a_tau.push_back(at);
        amax = std::max(amax, A.norm());
        nmax = std::max(nmax, std::abs(rot90(tau).dot(A)));
    }
    double qsum = 0.0;
    for (double f : quad_flux) qsum += f;
    out.diagnostics.quadrature_flux_gap = std::abs(qsum - out.total_flux);
    out.diagnostics.normal_residual = amax > 0.0 ? nmax / amax : 0.0;

    double curl_err = 0.0, curl_ref = 0.0, div_sq = 0.0;
    for (int t = 0; t < ntri; ++t) {
        const auto& tri = mesh.triangles[t];
        if (mesh.node_component[tri[0]] >= 0 || mesh.node_component[tri[1]] >= 0 || mesh.node_component[tri[2]] >= 0)
            continue;
        double curlA = 0.0, divA = 0.0;
        for (int i = 0; i < 3; ++i) {
            const Vec2 gl = geo[t].grad.row(i).transpose();
            const Vec2& Gi = (*grads)[tri[i]];
            curlA += gl.dot(Gi);                       // curl (J G) = div G
            divA -= gl.x() * Gi.y() - gl.y() * Gi.x(); // div (J G) = -curl G
        }
        const Vec2 c = (mesh.nodes[tri[0]] + mesh.nodes[tri[1]] + mesh.nodes[tri[2]]) / 3.0;
        const double b = field(c);
        curl_err += geo[t].area * (curlA - b) * (curlA - b);
        curl_ref += geo[t].area * b * b;
        div_sq += geo[t].area * divA * divA;
    }
    const double ref = std::sqrt(std::max(curl_ref, 1e-300));
    out.diagnostics.curl_residual = curl_ref > 0.0 ? std::sqrt(curl_err) / ref : std::sqrt(curl_err);
    out.diagnostics.div_residual = curl_ref > 0.0 ? std::sqrt(div_sq) / ref : std::sqrt(div_sq);
    out.diagnostics.boundary_phi = 0.0;
    for (int i = 0; i < n; ++i)
        if (mesh.node_component[i] >= 0) out.diagnostics.boundary_phi = std::max(out.diagnostics.boundary_phi, std::abs(phi[i]));
    out.field_flux = field_flux(field, domain);
    return out;
}

void write_radial_csv(std::ostream& out, const RadialGauge& gauge, int samples)
{
    out.precision(12);
    out << "r,phi,a,B\n";
    for (int i = 0; i <= samples; ++i) {
        const double r = gauge.r_in() + (gauge.r_out() - gauge.r_in()) * i / samples;
        out << r << "," << gauge.phi(r) << "," << gauge.a(r) << "," << gauge.B(r) << "\n";
    }
}

void write_nodal_csv(std::ostream& out, const GaugeData& gauge)
{
    if (!gauge.mesh) throw InvalidInput("nodal export needs a mesh-based gauge");
    out.precision(12);
    out << "x,y,phi\n";
    for (int i = 0; i < gauge.mesh->num_nodes(); ++i)
        out << gauge.mesh->nodes[i].x() << "," << gauge.mesh->nodes[i].y() << "," << gauge.nodal_phi[i] << "\n";
}

} // namespace aclab
