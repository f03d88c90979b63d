#include "lfpp/potential_kernel.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace lfpp {
namespace {

struct QuadRule {
    std::vector<double> node;
    std::vector<double> weight;
};

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
QuadRule gauss_legendre(int n) {
    QuadRule q;
    q.node.resize(n);
    q.weight.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        q.node[i] = -x;
        q.node[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        q.weight[i] = w;
        q.weight[n - 1 - i] = w;
    }
    return q;
}

// rule mapped to [0, pi], shared by all evaluations
const QuadRule& theta_rule() {
    static QuadRule r = [] {
        QuadRule gl = gauss_legendre(2048);
        QuadRule m;
        m.node.resize(gl.node.size());
        m.weight.resize(gl.node.size());
        for (std::size_t i = 0; i < gl.node.size(); ++i) {
            m.node[i] = 0.5 * M_PI * (gl.node[i] + 1.0);
            m.weight[i] = 0.5 * M_PI * gl.weight[i];
        }
        return m;
    }();
    return r;
}

}  // namespace

double PotentialKernel::exact(Vec2i x) {
    // a is invariant under sign flips and coordinate swap; canonicalize so the
    // exponential decay acts on the larger coordinate.
    long x1 = std::abs((long)x.x), x2 = std::abs((long)x.y);
    if (x1 < x2) std::swap(x1, x2);
    if (x1 == 0) return 0.0;
    const QuadRule& q = theta_rule();
    double acc = 0.0;
    for (std::size_t i = 0; i < q.node.size(); ++i) {
        double t = q.node[i];
        double coshr = 2.0 - std::cos(t);
        double r = std::acosh(coshr);
        double sinhr = std::sinh(r);
        double num = 1.0 - std::exp(-double(x1) * r) * std::cos(double(x2) * t);
        acc += q.weight[i] * num / sinhr;
    }
    return acc * 2.0 / M_PI;
}

double PotentialKernel::asymptotic_linf(Vec2i x) {
    return (2.0 / M_PI) * std::log(double(linf(x))) +
           (2.0 * kEuler + std::log(8.0)) / M_PI;
}

double PotentialKernel::asymptotic_l2(Vec2i x) {
    return (2.0 / M_PI) * std::log(l2(x)) + (2.0 * kEuler + std::log(8.0)) / M_PI;
}

PotentialKernel::PotentialKernel(int cache_radius) : radius_(cache_radius) {
    if (cache_radius < 1) throw std::invalid_argument("PotentialKernel: radius >= 1");
    int n = radius_ + 1;
    table_.resize(std::size_t(n) * n);
    for (int x1 = 0; x1 <= radius_; ++x1)
        for (int x2 = 0; x2 <= x1; ++x2)
            table_[std::size_t(x1) * n + x2] = exact({x1, x2});
}

double PotentialKernel::octant(int x1, int x2) const {
    return table_[std::size_t(x1) * (radius_ + 1) + x2];
}

double PotentialKernel::at(Vec2i x) const {
    int x1 = std::abs(x.x), x2 = std::abs(x.y);
    if (x1 < x2) std::swap(x1, x2);
    if (x1 <= radius_) return octant(x1, x2);
    return asymptotic_linf(x);
}

}  // namespace lfpp
