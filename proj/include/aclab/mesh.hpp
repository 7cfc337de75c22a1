#pragma once

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

#include "aclab/types.hpp"

namespace aclab {

class ConformalMap;

// Straight-sided triangulation with positively oriented triangles.
struct TriMesh {
    struct BoundaryEdge {
        int a = 0, b = 0;   // oriented along tau: the domain lies to the left
        int component = 0;
    };

    std::vector<Vec2> nodes;
    std::vector<std::array<int, 3>> triangles;
    std::vector<BoundaryEdge> boundary;  // sorted by component, then by parameter of `a`
    std::vector<int> node_component;     // -1 for interior nodes
    std::vector<double> node_param;      // boundary angle parameter, NaN inside
    int level = 0;

    int num_nodes() const { return static_cast<int>(nodes.size()); }
    int num_triangles() const { return static_cast<int>(triangles.size()); }
    double signed_area(int t) const;
    double area() const;
    double max_edge_length() const;
    int num_components() const;

    // Throws InvalidInput naming the first triangle with non-positive area.
    void check() const;
    // Recomputes `boundary` from triangle adjacency (node_component must be set).
    void rebuild_boundary();
};

// Projects a boundary midpoint onto the true curve: (component, theta) -> point.
using BoundaryProjector = std::function<Vec2(int component, double theta)>;

// Coarse graded disc mesh (concentric rings, 6k nodes on ring k).
TriMesh coarse_disc_mesh(double radius);
TriMesh coarse_annulus_mesh(double r_in, double r_out);
// One red refinement; boundary midpoints are projected with `project`.
TriMesh refine(const TriMesh& mesh, const BoundaryProjector& project);
// Image of a mesh under x -> F(x); boundary parameters are kept.
TriMesh map_mesh(const TriMesh& mesh, const ConformalMap& map);

// Plain-text format:
//   # aclab-mesh v1
//   nodes N            followed by N lines "x y [component theta]"
//   triangles T        followed by T lines "i j k"
void write_mesh(std::ostream& out, const TriMesh& mesh);
TriMesh read_mesh(std::istream& in);

// Midpoint of two angles along the shorter arc, in [0, 2 pi).
double mid_angle(double a, double b);
// Interpolates angles a -> b along the shorter arc at fraction t.
double lerp_angle(double a, double b, double t);

} // namespace aclab

namespace aclab {

// Area and barycentric-coordinate gradients of a P1 triangle (row i = grad lambda_i).
struct P1Triangle {
    double area = 0.0;
    Eigen::Matrix<double, 3, 2> grad;
};

inline P1Triangle p1_triangle(const TriMesh& mesh, int t)
{
    const auto& tri = mesh.triangles[t];
    P1Triangle e;
    e.area = mesh.signed_area(t);
    for (int i = 0; i < 3; ++i) {
        const Vec2 edge = mesh.nodes[tri[(i + 2) % 3]] - mesh.nodes[tri[(i + 1) % 3]];
        e.grad.row(i) = rot90(edge).transpose() / (2.0 * e.area);
    }
    return e;
}

} // namespace aclab
