#include "lfpp/green.hpp"

#include <Eigen/SparseCholesky>
#include <stdexcept>

namespace lfpp {

Eigen::SparseMatrix<double> interior_laplacian(int n) {
    Eigen::SparseMatrix<double> L(n * n, n * n);
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(std::size_t(n) * n * 5);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            int i = y * n + x;
            trip.emplace_back(i, i, 4.0);
            if (x > 0) trip.emplace_back(i, i - 1, -1.0);
            if (x < n - 1) trip.emplace_back(i, i + 1, -1.0);
            if (y > 0) trip.emplace_back(i, i - n, -1.0);
            if (y < n - 1) trip.emplace_back(i, i + n, -1.0);
        }
    }
    L.setFromTriplets(trip.begin(), trip.end());
    return L;
}

std::vector<Vec2i> boundary_ring(const BoxGeometry& g) {
    std::vector<Vec2i> ring;
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        Vec2i p = g.vertex_at(i);
        if (g.is_boundary(p)) ring.push_back(p);
    }
    return ring;
}

GreenOracle GreenOracle::build(const BoxGeometry& g) {
    if (g.side() < 3)
        throw std::invalid_argument("GreenOracle: side must be >= 3");
    const int n = g.interior_side();
    Eigen::MatrixXd L = Eigen::MatrixXd(interior_laplacian(n));
    // G_interior = 4 L^{-1}; L is SPD
    Eigen::LLT<Eigen::MatrixXd> llt(L);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("GreenOracle: Laplacian factorization failed");
    Eigen::MatrixXd Gi =
        4.0 * llt.solve(Eigen::MatrixXd::Identity(n * n, n * n));

    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    for (int ay = 0; ay < n; ++ay)
        for (int ax = 0; ax < n; ++ax) {
            std::size_t ra = g.index_of(g.origin() + Vec2i{ax + 1, ay + 1});
            for (int by = 0; by < n; ++by)
                for (int bx = 0; bx < n; ++bx) {
                    std::size_t rb = g.index_of(g.origin() + Vec2i{bx + 1, by + 1});
                    full(ra, rb) = Gi(ay * n + ax, by * n + bx);
                }
        }
    return GreenOracle(g, std::move(full), GreenMethod::DenseSolve);
}

std::vector<double> harmonic_measure(const BoxGeometry& g, Vec2i x) {
    g.require_inside(x);
    const int n = g.interior_side();
    std::vector<Vec2i> ring = boundary_ring(g);
    std::vector<double> hm(ring.size(), 0.0);
    if (g.is_boundary(x)) {
        // walk started on the boundary is already killed there
        for (std::size_t i = 0; i < ring.size(); ++i)
            if (ring[i] == x) hm[i] = 1.0;
        return hm;
    }
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(interior_laplacian(n));
    std::size_t xi = g.interior_index(x);
    for (std::size_t zi = 0; zi < ring.size(); ++zi) {
        // u harmonic inside with boundary data 1 at ring[zi]: rhs has a 1 for
        // each interior neighbor of the boundary vertex
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n * n);
        Vec2i z = ring[zi];
        for (Vec2i d : {Vec2i{1, 0}, Vec2i{-1, 0}, Vec2i{0, 1}, Vec2i{0, -1}}) {
            Vec2i w = z + d;
            if (g.is_interior(w)) rhs[g.interior_index(w)] += 1.0;
        }
        if (rhs.isZero())
            continue;
        Eigen::VectorXd u = solver.solve(rhs);
        hm[zi] = u[xi];
    }
    return hm;
}

GreenOracle GreenOracle::build_from_kernel(const BoxGeometry& g,
                                           const PotentialKernel& a) {
    if (g.side() < 3)
        throw std::invalid_argument("GreenOracle: side must be >= 3");
    std::vector<Vec2i> ring = boundary_ring(g);
    const int n = g.interior_side();

    // hm(zi, x): one Dirichlet solve per boundary vertex gives the measure at
    // every interior start at once
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(interior_laplacian(n));
    Eigen::MatrixXd hm(ring.size(), n * n);
    for (std::size_t zi = 0; zi < ring.size(); ++zi) {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n * n);
        Vec2i z = ring[zi];
        for (Vec2i d : {Vec2i{1, 0}, Vec2i{-1, 0}, Vec2i{0, 1}, Vec2i{0, -1}}) {
            Vec2i w = z + d;
            if (g.is_interior(w)) rhs[g.interior_index(w)] += 1.0;
        }
        hm.row(zi) = rhs.isZero() ? rhs.transpose() : solver.solve(rhs).transpose();
    }

    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(g.vertex_count(), g.vertex_count());
    for (int ay = 0; ay < n; ++ay)
        for (int ax = 0; ax < n; ++ax) {
            Vec2i x = g.origin() + Vec2i{ax + 1, ay + 1};
            std::size_t xi = g.interior_index(x);
            std::size_t rx = g.index_of(x);
            for (int by = 0; by < n; ++by)
                for (int bx = 0; bx < n; ++bx) {
                    Vec2i y = g.origin() + Vec2i{bx + 1, by + 1};
                    double v = -a.at(x - y);
                    for (std::size_t zi = 0; zi < ring.size(); ++zi)
                        v += hm(zi, xi) * a.at(ring[zi] - y);
                    full(rx, g.index_of(y)) = v;
                }
        }
    return GreenOracle(g, std::move(full), GreenMethod::PotentialKernelAssembly);
}

double GreenOracle::at(Vec2i x, Vec2i y) const {
    geom_.require_inside(x);
    geom_.require_inside(y);
    return full_(geom_.index_of(x), geom_.index_of(y));
}

Eigen::VectorXd green_column(const BoxGeometry& g, Vec2i x) {
    if (g.side() < 3)
        throw std::invalid_argument("green_column: side must be >= 3");
    if (!g.is_interior(x))
        throw std::invalid_argument("green_column: x must be interior");
    const int n = g.interior_side();
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(interior_laplacian(n));
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n * n);
    rhs[g.interior_index(x)] = 4.0;
    return solver.solve(rhs);
}

}  // namespace lfpp
