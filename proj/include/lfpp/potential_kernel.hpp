#pragma once

#include <vector>

#include "lfpp/geometry.hpp"

namespace lfpp {

/// Potential kernel a(x) of the planar simple random walk, a(0) = 0.
/// Values inside the cache radius are tabulated from the exact integral
/// representation
///   a(x) = (2/pi) * int_0^pi [1 - e^{-|x1| r(t)} cos(x2 t)] / sinh r(t) dt,
///   cosh r(t) = 2 - cos t,
/// evaluated by Gauss-Legendre quadrature; beyond the radius the logarithmic
/// asymptotic form is used.
class PotentialKernel {
public:
    explicit PotentialKernel(int cache_radius);

    /// tabulated inside the cache radius, asymptotic beyond
    double at(Vec2i x) const;

    int cache_radius() const { return radius_; }

    /// direct quadrature evaluation, any x
    static double exact(Vec2i x);

    /// (2/pi) log|x|_inf + (2*euler + log 8)/pi
    static double asymptotic_linf(Vec2i x);
    /// (2/pi) log|x|_2 + (2*euler + log 8)/pi
    static double asymptotic_l2(Vec2i x);

    static constexpr double kEuler = 0.57721566490153286060651209008240;

private:
    int radius_;
    std::vector<double> table_;  // octant 0 <= x2 <= x1 <= radius, row-major
    double octant(int x1, int x2) const;
};

}  // namespace lfpp
