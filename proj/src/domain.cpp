#include "aclab/domain.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "aclab/mesh.hpp"
#include "aclab/quadrature.hpp"

namespace aclab {

namespace {

constexpr int arc_panels = 4096;

double wrap_angle(double t)
{
    t = std::fmod(t, two_pi);
    return t < 0.0 ? t + two_pi : t;
}

} // namespace

DomainSpec DomainSpec::disc(double radius)
{
    if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidInput("disc: radius must be positive");
    DomainSpec d;
    d.kind_ = Kind::Disc;
    d.r_out_ = radius;
    return d;
}

DomainSpec DomainSpec::annulus(double r_in, double r_out)
{
    if (!(r_in > 0.0) || !std::isfinite(r_out))
        throw InvalidInput("annulus: inner radius must be positive");
    if (!(r_in < r_out))
        throw InvalidInput("annulus: inner radius " + std::to_string(r_in) +
                           " must be smaller than outer radius " + std::to_string(r_out));
    DomainSpec d;
    d.kind_ = Kind::Annulus;
    d.r_in_ = r_in;
    d.r_out_ = r_out;
    return d;
}

DomainSpec DomainSpec::mapped_disc(ConformalMap map)
{
    map.check_univalent();
    DomainSpec d;
    d.kind_ = Kind::MappedDisc;
    d.map_ = std::move(map);
    d.build_arclength_table();
    return d;
}

void DomainSpec::build_arclength_table()
{
    auto table = std::make_shared<std::vector<double>>(arc_panels + 1, 0.0);
    const double h = two_pi / arc_panels;
    for (int i = 0; i < arc_panels; ++i) {
        double s = 0.0;
        for (int q = 0; q < quad::gauss5.n; ++q)
            s += quad::gauss5.w[q] * map_.boundary_speed((i + quad::gauss5.x[q]) * h);
        (*table)[i + 1] = (*table)[i] + s * h;
    }
    arc_table_ = std::move(table);
}

double DomainSpec::area() const
{
    switch (kind_) {
    case Kind::Disc: return pi * r_out_ * r_out_;
    case Kind::Annulus: return pi * (r_out_ * r_out_ - r_in_ * r_in_);
    case Kind::MappedDisc: return map_.image_area();
    }
    return 0.0;
}

double DomainSpec::length(int j) const
{
    if (j < 0 || j >= components()) throw InvalidInput("domain: no boundary component " + std::to_string(j));
    if (kind_ == Kind::MappedDisc) return arc_table_->back();
    return two_pi * (j == 0 ? r_out_ : r_in_);
}

Vec2 DomainSpec::boundary_point(int j, double theta) const
{
    if (kind_ == Kind::MappedDisc) return map_.apply(Vec2(std::cos(theta), std::sin(theta)));
    const double r = j == 0 ? r_out_ : r_in_;
    return {r * std::cos(theta), r * std::sin(theta)};
}

double DomainSpec::arclength(int j, double theta) const
{
    theta = wrap_angle(theta);
    switch (kind_) {
    case Kind::Disc: return r_out_ * theta;
    case Kind::Annulus:
        if (j == 0) return r_out_ * theta;
        return theta == 0.0 ? 0.0 : r_in_ * (two_pi - theta);
    case Kind::MappedDisc: {
        const double h = two_pi / arc_panels;
        const int i = std::min(arc_panels - 1, static_cast<int>(theta / h));
        const double t0 = i * h, dt = theta - t0;
        double s = 0.0;
        for (int q = 0; q < quad::gauss5.n; ++q)
            s += quad::gauss5.w[q] * map_.boundary_speed(t0 + quad::gauss5.x[q] * dt);
        return (*arc_table_)[i] + s * dt;
    }
    }
    return 0.0;
}

double DomainSpec::theta_of_arclength(int j, double s) const
{
    const double L = length(j);
    s = std::fmod(s, L);
    if (s < 0.0) s += L;
    switch (kind_) {
    case Kind::Disc: return s / r_out_;
    case Kind::Annulus: return j == 0 ? s / r_out_ : wrap_angle(-s / r_in_);
    case Kind::MappedDisc: {
        const auto& T = *arc_table_;
        const auto it = std::upper_bound(T.begin(), T.end(), s);
        const int i = std::clamp(static_cast<int>(it - T.begin()) - 1, 0, arc_panels - 1);
        double t = (i + (s - T[i]) / (T[i + 1] - T[i])) * (two_pi / arc_panels);
        for (int it2 = 0; it2 < 4; ++it2) t -= (arclength(j, t) - s) / map_.boundary_speed(t);
        return t;
    }
    }
    return 0.0;
}

double DomainSpec::curvature(int j, double theta) const
{
    switch (kind_) {
    case Kind::Disc: return 1.0 / r_out_;
    case Kind::Annulus: return j == 0 ? 1.0 / r_out_ : -1.0 / r_in_;
    case Kind::MappedDisc: return map_.boundary_curvature(theta);
    }
    return 0.0;
}

std::vector<double> DomainSpec::curvature_samples(int j, int n) const
{
    std::vector<double> k(n);
    const double L = length(j);
    for (int i = 0; i < n; ++i) k[i] = curvature(j, theta_of_arclength(j, L * i / n));
    return k;
}

double DomainSpec::total_turning() const
{
    double total = 0.0;
    for (int j = 0; j < components(); ++j) {
        const int n = 2048;
        const double L = length(j);
        double s = 0.0;
        for (double k : curvature_samples(j, n)) s += k;
        total += s * L / n;
    }
    return total / two_pi;
}

TriMesh DomainSpec::mesh(int level) const
{
    if (level < 0) throw InvalidInput("mesh level must be nonnegative");
    TriMesh m;
    if (kind_ == Kind::Annulus) {
        m = coarse_annulus_mesh(r_in_, r_out_);
        const double ri = r_in_, ro = r_out_;
        const BoundaryProjector project = [ri, ro](int c, double t) {
            const double r = c == 0 ? ro : ri;
            return Vec2(r * std::cos(t), r * std::sin(t));
        };
        for (int l = 0; l < level; ++l) m = refine(m, project);
    } else {
        const double R = kind_ == Kind::Disc ? r_out_ : 1.0;
        m = coarse_disc_mesh(R);
        const BoundaryProjector project = [R](int, double t) {
            return Vec2(R * std::cos(t), R * std::sin(t));
        };
        for (int l = 0; l < level; ++l) m = refine(m, project);
        if (kind_ == Kind::MappedDisc) m = map_mesh(m, map_);
    }
    m.level = level;
    m.check();
    return m;
}

std::string DomainSpec::describe() const
{
    std::ostringstream os;
    switch (kind_) {
    case Kind::Disc: os << "disc(R=" << r_out_ << ")"; break;
    case Kind::Annulus: os << "annulus(" << r_in_ << ", " << r_out_ << ")"; break;
    case Kind::MappedDisc: {
        os << "mapped_disc(F=z";
        for (std::size_t i = 0; i < map_.coefficients().size(); ++i)
            os << " + (" << map_.coefficients()[i].real() << (map_.coefficients()[i].imag() < 0 ? "-" : "+")
               << std::abs(map_.coefficients()[i].imag()) << "i)z^" << i + 2;
        os << ")";
        break;
    }
    }
    return os.str();
}

} // namespace aclab
