#pragma once

#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "lfpp/field.hpp"
#include "lfpp/geometry.hpp"

namespace lfpp {

/// Harmonic extension H^B of the field given its values on the boundary ring
/// of `subbox` (and outside): returns values over subbox row-major, equal to
/// the field on the ring and discrete-harmonic strictly inside. Direct sparse
/// solve; relative residual is checked against 1e-10.
std::vector<double> harmonic_extension(const FieldSample& field,
                                       const BoxGeometry& subbox);

/// Poisson kernel at the center of B_ell (side length ell, even): weights over
/// the boundary ring such that H_{ell}(x) = sum_z w(z) field(x + offset(z)).
/// Translation invariant, so one solve per ell serves every center.
class CenterKernelCache {
public:
    struct Kernel {
        std::vector<Vec2i> offsets;  // ring offsets from the center
        std::vector<double> weights; // harmonic measure from the center
    };

    /// compute (or fetch) the kernel for side length ell; not thread-safe
    /// during first use, precompute before parallel sections
    const Kernel& kernel(int ell);

    static CenterKernelCache& instance();

private:
    std::map<int, Kernel> cache_;
};

/// H_{ell}(x) = H^{B_ell(x)}(x), evaluated by the center Poisson kernel.
/// B_ell(x) must fit inside the field's box.
double harmonic_at_center(const FieldSample& field, Vec2i x, int ell);

struct MultiscaleParams {
    int bigK = 0;  // K = 2^k
    int k = 0;
    int m = 0;
};

/// Per-point multiscale decomposition: X_r = H_{2^r} - H_{2^{r+1}}
/// (X_0 = eta - H_2), eta_j = sum of k consecutive X_r, tail H_{K^m}.
struct MultiscaleView {
    MultiscaleParams params;
    std::vector<Vec2i> points;
    std::vector<std::vector<double>> X;    // [m*k][point]
    std::vector<std::vector<double>> eta;  // [m][point]
    std::vector<double> tail;              // H_{K^m}(x)
    std::vector<double> total;             // field value at x

    bool covers(Vec2i p) const { return index_.count(key(p)) > 0; }
    double eta_j(int j, Vec2i p) const;
    double tail_at(Vec2i p) const;
    double total_at(Vec2i p) const;

    static std::int64_t key(Vec2i p) {
        return (std::int64_t(p.x) << 32) ^ std::uint32_t(p.y);
    }
    std::unordered_map<std::int64_t, std::size_t> index_;
};

/// field must live on V_{5N} (or any box with enough margin around the points)
MultiscaleView multiscale_decompose(const FieldSample& field,
                                    const std::vector<Vec2i>& points,
                                    const MultiscaleParams& params, int N);

}  // namespace lfpp
