#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aclab/conformal_map.hpp"
#include "aclab/types.hpp"

namespace aclab {

struct TriMesh;

// Disc, annulus, or the image of the unit disc under a polynomial conformal map.
//
// Boundary components: 0 is the outer curve, 1 the inner circle of an annulus. Every
// component is parametrized by an angle theta of the underlying circle; arclength s runs
// along the tangent tau with (tau, nu) direct and nu pointing into the domain, so the
// inner annulus circle is traversed clockwise.
class DomainSpec {
public:
    enum class Kind { Disc, Annulus, MappedDisc };

    static DomainSpec disc(double radius = 1.0);
    static DomainSpec annulus(double r_in, double r_out);
    static DomainSpec mapped_disc(ConformalMap map);

    Kind kind() const { return kind_; }
    int components() const { return kind_ == Kind::Annulus ? 2 : 1; }
    int d() const { return components() - 1; }
    bool is_radial() const { return kind_ != Kind::MappedDisc; }
    bool is_simply_connected() const { return kind_ != Kind::Annulus; }

    double inner_radius() const { return r_in_; }
    double outer_radius() const { return r_out_; }
    const ConformalMap& map() const { return map_; }

    double area() const;
    double length(int j) const;
    Vec2 boundary_point(int j, double theta) const;
    // Arclength along tau from the point theta = 0, in [0, L_j).
    double arclength(int j, double theta) const;
    // Signed curvature with tau' = kappa nu.
    double curvature(int j, double theta) const;
    // Curvature sampled at n points equispaced in arclength.
    std::vector<double> curvature_samples(int j, int n) const;
    // (1/2pi) sum_j integral kappa_j ds; equals 1 - d by Gauss-Bonnet.
    double total_turning() const;

    // Mesh after `level` uniform refinements of the coarse mesh.
    TriMesh mesh(int level) const;
    std::string describe() const;

private:
    double theta_of_arclength(int j, double s) const;
    void build_arclength_table();

    Kind kind_ = Kind::Disc;
    double r_in_ = 0.0;
    double r_out_ = 1.0;
    ConformalMap map_;
    // Cumulative boundary arclength of the mapped disc at theta_i = 2 pi i / n.
    std::shared_ptr<const std::vector<double>> arc_table_;
};

} // namespace aclab
