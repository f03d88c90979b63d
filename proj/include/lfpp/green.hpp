#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "lfpp/geometry.hpp"
#include "lfpp/potential_kernel.hpp"

namespace lfpp {

enum class GreenMethod { DenseSolve, PotentialKernelAssembly };

/// Green function of simple random walk killed at the boundary ring: G(x,y) is
/// the expected number of visits to y starting from x. Zero whenever either
/// argument is on the boundary. Stored dense over the whole box.
class GreenOracle {
public:
    /// reference construction: dense solve of (I - P) G = I over the interior
    static GreenOracle build(const BoxGeometry& g);

    /// cross-validation construction: G(x,y) = sum_z P_x(S_tau = z) a(z-y) - a(x-y)
    /// with harmonic measure from per-boundary-vertex Dirichlet solves
    static GreenOracle build_from_kernel(const BoxGeometry& g, const PotentialKernel& a);

    double at(Vec2i x, Vec2i y) const;

    const Eigen::MatrixXd& matrix() const { return full_; }
    const BoxGeometry& geometry() const { return geom_; }
    GreenMethod method() const { return method_; }

private:
    GreenOracle(BoxGeometry g, Eigen::MatrixXd full, GreenMethod m)
        : geom_(g), full_(std::move(full)), method_(m) {}
    BoxGeometry geom_;
    Eigen::MatrixXd full_;  // vertex_count x vertex_count, box row-major
    GreenMethod method_;
};

/// Dirichlet graph Laplacian 4I - A on an n x n interior grid, row-major.
Eigen::SparseMatrix<double> interior_laplacian(int n);

/// One exact Green column G(x, .) over the interior (row-major), via sparse
/// factorization; suitable for boxes far too large for the dense oracle.
Eigen::VectorXd green_column(const BoxGeometry& g, Vec2i x);

/// boundary ring of the box in row-major order
std::vector<Vec2i> boundary_ring(const BoxGeometry& g);

/// Harmonic measure P_x(S_tau = z) for z over boundary_ring(g), computed by
/// Dirichlet solves with indicator boundary data.
std::vector<double> harmonic_measure(const BoxGeometry& g, Vec2i x);

}  // namespace lfpp
