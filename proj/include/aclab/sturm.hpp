#pragma once

#include <vector>

#include <Eigen/Core>

namespace aclab {

// Symmetric tridiagonal pencil (K, M) assembled from 2x2 element blocks on a chain of nodes
// 0..n, element e joining nodes e and e+1. Inertia of K - sigma M comes from a Sturm
// recursion that eliminates nodes from the right end inward.
class ElementPencil {
public:
    // Element with stiffness K and mass M.
    void add_element(const Eigen::Matrix2d& K, const Eigen::Matrix2d& M);
    // Element whose stiffness is s * [[1,-1],[-1,1]]; the determinant of the shifted block is
    // then evaluated without cancellation, so pivots keep full relative accuracy even when
    // s and M span hundreds of orders of magnitude.
    void add_laplacian_element(double s, const Eigen::Matrix2d& M);

    // Diagonal boundary contributions at node 0 and node n.
    void set_boundary(double left, double right) { left_ = left; right_ = right; }
    // Removes node 0 / node n from the space (Dirichlet).
    void set_dirichlet(bool left, bool right) { drop_left_ = left; drop_right_ = right; }

    int elements() const { return static_cast<int>(K_.size()); }
    int dofs() const;

    // Number of eigenvalues strictly below sigma.
    int count_below(double sigma) const;
    // Eigenvalue j (0-based, ascending) by bisection on counts.
    double eigenvalue(int j, double rel_tol = 1e-13) const;
    std::vector<double> lowest(int k) const;
    // Eigenvector for an (accurately known) eigenvalue by inverse iteration; full node
    // vector with zeros at removed nodes, normalized to u^T M u = 1.
    Eigen::VectorXd eigenvector(double lambda) const;

    double stiffness_form(const Eigen::VectorXd& u) const;
    double mass_form(const Eigen::VectorXd& u) const;

private:
    std::vector<Eigen::Matrix2d> K_, M_;
    std::vector<double> s_; // Laplacian scale, or NaN for general elements
    double left_ = 0.0, right_ = 0.0;
    bool drop_left_ = false, drop_right_ = false;
};

} // namespace aclab
