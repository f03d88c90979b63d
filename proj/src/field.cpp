#include "lfpp/field.hpp"

#include <fftw3.h>

#include <Eigen/Cholesky>
#include <cstdio>
#include <cstring>
#include <mutex>
#include <stdexcept>

#include "lfpp/green.hpp"
#include "lfpp/rng.hpp"

namespace lfpp {

namespace {
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

DenseSampler::DenseSampler(const BoxGeometry& g) : geom_(g) {
    if (g.side() < 3)
        throw std::invalid_argument("DenseSampler: side must be >= 3");
    if (g.side() > kMaxSide)
        throw std::runtime_error(
            "DenseSampler: side " + std::to_string(g.side()) + " exceeds dense capacity " +
            std::to_string(kMaxSide) + "; use the spectral backend");
    const int n = g.interior_side();
    Eigen::MatrixXd L = Eigen::MatrixXd(interior_laplacian(n));
    Eigen::LLT<Eigen::MatrixXd> llt(L);
    Eigen::MatrixXd G = 4.0 * llt.solve(Eigen::MatrixXd::Identity(n * n, n * n));
    // symmetrize away solve roundoff before factorizing
    G = 0.5 * (G + G.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> gllt(G);
    if (gllt.info() != Eigen::Success)
        throw std::runtime_error("DenseSampler: Green matrix factorization failed");
    chol_ = gllt.matrixL();
}

Eigen::MatrixXd DenseSampler::sample_columns(std::uint64_t seed,
                                             std::uint64_t first_index,
                                             int count) const {
    const int n = geom_.interior_side();
    Eigen::MatrixXd Z(n * n, count);
    for (int c = 0; c < count; ++c) {
        CounterRng rng(seed, first_index + c);
        for (int i = 0; i < n * n; ++i) Z(i, c) = rng.next_gaussian();
    }
    return chol_ * Z;
}

FieldSample DenseSampler::sample(std::uint64_t seed) const {
    const int n = geom_.interior_side();
    CounterRng rng(seed, 0);
    Eigen::VectorXd z(n * n);
    for (int i = 0; i < n * n; ++i) z[i] = rng.next_gaussian();
    Eigen::VectorXd v = chol_ * z;

    FieldSample f;
    f.geometry = geom_;
    f.seed = seed;
    f.sampler = "dense-llt-v1";
    f.values.assign(geom_.vertex_count(), 0.0);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x)
            f.values[geom_.index_of(geom_.origin() + Vec2i{x + 1, y + 1})] =
                v[y * n + x];
    return f;
}

SpectralSampler::SpectralSampler(const BoxGeometry& g) : geom_(g) {
    if (g.side() < 3)
        throw std::invalid_argument("SpectralSampler: side must be >= 3");
    const int n = g.interior_side();
    inv_sqrt_eig_.resize(std::size_t(n) * n);
    for (int q = 0; q < n; ++q) {
        for (int p = 0; p < n; ++p) {
            double lam = 4.0 - 2.0 * std::cos(M_PI * (p + 1) / (n + 1)) -
                         2.0 * std::cos(M_PI * (q + 1) / (n + 1));
            inv_sqrt_eig_[std::size_t(q) * n + p] = 2.0 / std::sqrt(lam);
        }
    }
    std::lock_guard<std::mutex> lock(fftw_planner_mutex());
    std::vector<double> probe(std::size_t(n) * n, 0.0);
    plan_ = fftw_plan_r2r_2d(n, n, probe.data(), probe.data(), FFTW_RODFT00,
                             FFTW_RODFT00, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan_) throw std::runtime_error("SpectralSampler: FFTW plan failed");
}

SpectralSampler::~SpectralSampler() {
    if (plan_) {
        std::lock_guard<std::mutex> lock(fftw_planner_mutex());
        fftw_destroy_plan(static_cast<fftw_plan>(plan_));
    }
}

FieldSample SpectralSampler::sample(std::uint64_t seed) const {
    const int n = geom_.interior_side();
    std::vector<double> buf(std::size_t(n) * n);
    CounterRng rng(seed, 0);
    for (std::size_t i = 0; i < buf.size(); ++i)
        buf[i] = rng.next_gaussian() * inv_sqrt_eig_[i];
    // new-array execution is thread-safe on a shared plan
    fftw_execute_r2r(static_cast<fftw_plan>(plan_), buf.data(), buf.data());

    const double scale = 1.0 / (2.0 * (n + 1));
    FieldSample f;
    f.geometry = geom_;
    f.seed = seed;
    f.sampler = "spectral-dst-v1";
    f.values.assign(geom_.vertex_count(), 0.0);
    for (int y = 0; y < n; ++y) {
        double* row =
            &f.values[geom_.index_of(geom_.origin() + Vec2i{1, y + 1})];
        const double* src = &buf[std::size_t(y) * n];
        for (int x = 0; x < n; ++x) row[x] = src[x] * scale;
    }
    return f;
}

FieldSample sample_dgff(const BoxGeometry& g, std::uint64_t seed) {
    if (g.side() <= DenseSampler::kMaxSide) return DenseSampler(g).sample(seed);
    return SpectralSampler(g).sample(seed);
}

namespace {
void put_u32(std::FILE* fp, std::uint32_t v) {
    unsigned char b[4] = {(unsigned char)(v & 0xff), (unsigned char)((v >> 8) & 0xff),
                          (unsigned char)((v >> 16) & 0xff),
                          (unsigned char)((v >> 24) & 0xff)};
    std::fwrite(b, 1, 4, fp);
}
void put_u64(std::FILE* fp, std::uint64_t v) {
    put_u32(fp, std::uint32_t(v & 0xffffffffULL));
    put_u32(fp, std::uint32_t(v >> 32));
}
std::uint32_t get_u32(std::FILE* fp) {
    unsigned char b[4];
    if (std::fread(b, 1, 4, fp) != 4) throw std::runtime_error("DGF1: truncated file");
    return std::uint32_t(b[0]) | (std::uint32_t(b[1]) << 8) |
           (std::uint32_t(b[2]) << 16) | (std::uint32_t(b[3]) << 24);
}
std::uint64_t get_u64(std::FILE* fp) {
    std::uint64_t lo = get_u32(fp);
    std::uint64_t hi = get_u32(fp);
    return lo | (hi << 32);
}
}  // namespace

void write_dgf1(const std::string& path, const FieldSample& f, std::uint32_t margin) {
    if (margin == 0 || f.geometry.side() % int(margin) != 0)
        throw std::invalid_argument("DGF1: side must be a multiple of the margin factor");
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw std::runtime_error("DGF1: cannot open " + path + " for writing");
    std::fwrite("DGF1", 1, 4, fp);
    put_u32(fp, std::uint32_t(f.geometry.side()));
    put_u32(fp, margin);
    put_u64(fp, f.seed);
    static_assert(sizeof(double) == 8);
    std::fwrite(f.values.data(), 8, f.values.size(), fp);
    if (std::fclose(fp) != 0) throw std::runtime_error("DGF1: write failed for " + path);
}

Dgf1File read_dgf1(const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "rb");
    if (!fp) throw std::runtime_error("DGF1: cannot open " + path);
    char magic[4];
    if (std::fread(magic, 1, 4, fp) != 4 || std::memcmp(magic, "DGF1", 4) != 0) {
        std::fclose(fp);
        throw std::runtime_error("DGF1: bad magic in " + path);
    }
    std::uint32_t side = get_u32(fp);
    std::uint32_t margin = get_u32(fp);
    std::uint64_t seed = get_u64(fp);
    if (margin == 0 || side % margin != 0) {
        std::fclose(fp);
        throw std::runtime_error("DGF1: inconsistent side/margin in " + path);
    }
    int n = int(side / margin);
    int off = -int((margin - 1) / 2) * n;
    Dgf1File out;
    out.margin = margin;
    out.field.geometry = BoxGeometry({off, off}, int(side));
    out.field.seed = seed;
    out.field.sampler = "file";
    out.field.values.resize(std::size_t(side) * side);
    if (std::fread(out.field.values.data(), 8, out.field.values.size(), fp) !=
        out.field.values.size()) {
        std::fclose(fp);
        throw std::runtime_error("DGF1: truncated values in " + path);
    }
    std::fclose(fp);
    return out;
}

}  // namespace lfpp
