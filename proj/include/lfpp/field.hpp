#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lfpp/geometry.hpp"

namespace lfpp {

/// One realization of the DGFF on a box. Values are stored over the whole box
/// row-major (y-major, x-minor) and are zero on the boundary ring; queries
/// outside the box return zero. Weights (gamma) are applied downstream.
struct FieldSample {
    BoxGeometry geometry;
    std::vector<double> values;
    std::uint64_t seed = 0;
    std::string sampler;  // backend version tag

    double at(Vec2i p) const {
        if (!geometry.contains(p)) return 0.0;
        return values[geometry.index_of(p)];
    }
};

/// Exact sampler backed by a dense Cholesky factor of the Green matrix.
/// Capacity-limited: refuses boxes with side > kMaxSide.
class DenseSampler {
public:
    static constexpr int kMaxSide = 64;

    explicit DenseSampler(const BoxGeometry& g);

    FieldSample sample(std::uint64_t seed) const;

    /// `count` interior-valued samples as columns, streams derived from
    /// (seed, first_index + column); used by covariance checks in bulk
    Eigen::MatrixXd sample_columns(std::uint64_t seed, std::uint64_t first_index,
                                   int count) const;

    const BoxGeometry& geometry() const { return geom_; }

private:
    BoxGeometry geom_;
    Eigen::MatrixXd chol_;  // lower factor of G_interior
};

/// Exact sampler in the discrete sine eigenbasis of the box Laplacian
/// (covariance 4 (-Delta)^{-1}); FFTW-backed, O(n^2 log n) per sample.
class SpectralSampler {
public:
    explicit SpectralSampler(const BoxGeometry& g);
    ~SpectralSampler();
    SpectralSampler(const SpectralSampler&) = delete;
    SpectralSampler& operator=(const SpectralSampler&) = delete;

    FieldSample sample(std::uint64_t seed) const;

    const BoxGeometry& geometry() const { return geom_; }

private:
    BoxGeometry geom_;
    std::vector<double> inv_sqrt_eig_;  // 2/sqrt(lambda_pq), row-major
    void* plan_ = nullptr;              // fftw_plan
};

/// backend dispatch: dense factorization up to DenseSampler::kMaxSide,
/// spectral beyond
FieldSample sample_dgff(const BoxGeometry& g, std::uint64_t seed);

/// "DGF1" field file, bit-exact little-endian layout:
/// magic "DGF1", u32 side, u32 margin, u64 seed, side^2 float64 row-major.
void write_dgf1(const std::string& path, const FieldSample& f, std::uint32_t margin);
struct Dgf1File {
    FieldSample field;
    std::uint32_t margin = 1;
};
Dgf1File read_dgf1(const std::string& path);

}  // namespace lfpp
