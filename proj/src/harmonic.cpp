#include "lfpp/harmonic.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <mutex>
#include <stdexcept>

#include "lfpp/green.hpp"

namespace lfpp {

std::vector<double> harmonic_extension(const FieldSample& field,
                                       const BoxGeometry& subbox) {
    if (!field.geometry.contains_box(subbox))
        throw std::invalid_argument("harmonic_extension: subbox not contained in field domain");
    const int n = subbox.interior_side();
    std::vector<double> out(subbox.vertex_count());
    for (std::size_t i = 0; i < subbox.vertex_count(); ++i)
        out[i] = field.at(subbox.vertex_at(i));
    if (n <= 0) return out;  // no strict interior, nothing to extend

    Eigen::SparseMatrix<double> L = interior_laplacian(n);
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(L);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n * n);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            Vec2i p = subbox.origin() + Vec2i{x + 1, y + 1};
            double s = 0.0;
            for (Vec2i d : {Vec2i{1, 0}, Vec2i{-1, 0}, Vec2i{0, 1}, Vec2i{0, -1}}) {
                Vec2i w = p + d;
                if (subbox.is_boundary(w)) s += field.at(w);
            }
            rhs[y * n + x] = s;
        }
    Eigen::VectorXd u = solver.solve(rhs);

    double rn = (L * u - rhs).norm();
    double scale = rhs.norm();
    if (scale > 0.0 && rn / scale > 1e-10)
        throw std::runtime_error("harmonic_extension: solver residual above tolerance");

    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            out[subbox.index_of(subbox.origin() + Vec2i{x + 1, y + 1})] = u[y * n + x];
    return out;
}

CenterKernelCache& CenterKernelCache::instance() {
    static CenterKernelCache c;
    return c;
}

const CenterKernelCache::Kernel& CenterKernelCache::kernel(int ell) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache_.find(ell);
    if (it != cache_.end()) return it->second;

    BoxGeometry box = centered_box({0, 0}, ell);
    Kernel k;
    k.offsets = boundary_ring(box);
    k.weights = harmonic_measure(box, {0, 0});
    // node-based map: references stay valid across later inserts
    return cache_.emplace(ell, std::move(k)).first->second;
}

double harmonic_at_center(const FieldSample& field, Vec2i x, int ell) {
    BoxGeometry box = centered_box(x, ell);
    if (!field.geometry.contains_box(box))
        throw std::invalid_argument("harmonic_at_center: B_ell(x) leaves the field domain");
    const auto& k = CenterKernelCache::instance().kernel(ell);
    double v = 0.0;
    for (std::size_t i = 0; i < k.offsets.size(); ++i)
        v += k.weights[i] * field.at(x + k.offsets[i]);
    return v;
}

double MultiscaleView::eta_j(int j, Vec2i p) const {
    if (j < 0 || j >= params.m) throw std::invalid_argument("MultiscaleView: level out of range");
    auto it = index_.find(key(p));
    if (it == index_.end())
        throw std::invalid_argument("MultiscaleView: point " + to_string(p) + " not covered");
    return eta[j][it->second];
}

double MultiscaleView::tail_at(Vec2i p) const {
    auto it = index_.find(key(p));
    if (it == index_.end())
        throw std::invalid_argument("MultiscaleView: point " + to_string(p) + " not covered");
    return tail[it->second];
}

double MultiscaleView::total_at(Vec2i p) const {
    auto it = index_.find(key(p));
    if (it == index_.end())
        throw std::invalid_argument("MultiscaleView: point " + to_string(p) + " not covered");
    return total[it->second];
}

MultiscaleView multiscale_decompose(const FieldSample& field,
                                    const std::vector<Vec2i>& points,
                                    const MultiscaleParams& params, int N) {
    if (params.bigK != (1 << params.k))
        throw std::invalid_argument("multiscale_decompose: K must equal 2^k");
    if (params.m < 1) throw std::invalid_argument("multiscale_decompose: m must be >= 1");
    double km = std::pow(double(params.bigK), params.m);
    if (km > double(N))
        throw std::invalid_argument("multiscale_decompose: K^m > N");

    const int mk = params.m * params.k;
    MultiscaleView view;
    view.params = params;
    view.points = points;
    view.X.assign(mk, std::vector<double>(points.size()));
    view.eta.assign(params.m, std::vector<double>(points.size()));
    view.tail.resize(points.size());
    view.total.resize(points.size());

    // one kernel per dyadic scale, shared across points
    auto& cache = CenterKernelCache::instance();
    for (int r = 1; r <= mk; ++r) cache.kernel(1 << r);

    for (std::size_t pi = 0; pi < points.size(); ++pi) {
        Vec2i x = points[pi];
        view.index_.emplace(MultiscaleView::key(x), pi);
        double eta_x = field.at(x);
        view.total[pi] = eta_x;

        std::vector<double> H(mk + 1);  // H[r] = H_{2^r}(x), r = 1..mk
        for (int r = 1; r <= mk; ++r) H[r] = harmonic_at_center(field, x, 1 << r);

        view.X[0][pi] = eta_x - H[1];
        for (int r = 1; r < mk; ++r) view.X[r][pi] = H[r] - H[r + 1];
        view.tail[pi] = H[mk];

        for (int j = 0; j < params.m; ++j) {
            double s = 0.0;
            for (int r = j * params.k; r < (j + 1) * params.k; ++r) s += view.X[r][pi];
            view.eta[j][pi] = s;
        }
    }
    return view;
}

}  // namespace lfpp
