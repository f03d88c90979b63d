#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lfpp {

struct Vec2i {
    int x = 0;
    int y = 0;

    friend Vec2i operator+(Vec2i a, Vec2i b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2i operator-(Vec2i a, Vec2i b) { return {a.x - b.x, a.y - b.y}; }
    friend bool operator==(Vec2i a, Vec2i b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Vec2i a, Vec2i b) { return !(a == b); }
    // row-major order: by y, then x
    friend bool operator<(Vec2i a, Vec2i b) { return a.y != b.y ? a.y < b.y : a.x < b.x; }
};

struct Vec2d {
    double x = 0.0;
    double y = 0.0;

    friend Vec2d operator+(Vec2d a, Vec2d b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2d operator-(Vec2d a, Vec2d b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2d operator*(double s, Vec2d a) { return {s * a.x, s * a.y}; }
    friend bool operator==(Vec2d a, Vec2d b) { return a.x == b.x && a.y == b.y; }
};

inline int linf(Vec2i v) { return std::max(std::abs(v.x), std::abs(v.y)); }
inline double linf(Vec2d v) { return std::max(std::abs(v.x), std::abs(v.y)); }
inline double l2(Vec2i v) { return std::hypot(double(v.x), double(v.y)); }
inline double l2(Vec2d v) { return std::hypot(v.x, v.y); }
inline double dot(Vec2d a, Vec2d b) { return a.x * b.x + a.y * b.y; }
inline Vec2d to_vec2d(Vec2i v) { return {double(v.x), double(v.y)}; }

inline std::string to_string(Vec2i v) {
    return "(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")";
}

/// Axis-aligned box of lattice vertices origin + [0, side)^2.
/// The boundary is the ring of vertices adjacent to the complement; the rest
/// is the interior (where a killed random walk lives).
class BoxGeometry {
public:
    BoxGeometry() = default;
    BoxGeometry(Vec2i origin, int side) : origin_(origin), side_(side) {
        if (side < 1) throw std::invalid_argument("BoxGeometry: side must be >= 1");
    }

    Vec2i origin() const { return origin_; }
    int side() const { return side_; }
    int interior_side() const { return side_ >= 2 ? side_ - 2 : 0; }

    bool contains(Vec2i p) const {
        return p.x >= origin_.x && p.x < origin_.x + side_ && p.y >= origin_.y &&
               p.y < origin_.y + side_;
    }
    bool contains_box(const BoxGeometry& b) const {
        return b.origin_.x >= origin_.x && b.origin_.y >= origin_.y &&
               b.origin_.x + b.side_ <= origin_.x + side_ &&
               b.origin_.y + b.side_ <= origin_.y + side_;
    }
    bool is_boundary(Vec2i p) const {
        if (!contains(p)) return false;
        Vec2i r = p - origin_;
        return r.x == 0 || r.y == 0 || r.x == side_ - 1 || r.y == side_ - 1;
    }
    bool is_interior(Vec2i p) const { return contains(p) && !is_boundary(p); }

    std::size_t vertex_count() const { return std::size_t(side_) * side_; }
    std::size_t interior_count() const {
        return std::size_t(interior_side()) * interior_side();
    }

    // row-major over the whole box: y-major, x-minor
    std::size_t index_of(Vec2i p) const {
        require_inside(p);
        Vec2i r = p - origin_;
        return std::size_t(r.y) * side_ + r.x;
    }
    Vec2i vertex_at(std::size_t idx) const {
        return origin_ + Vec2i{int(idx % side_), int(idx / side_)};
    }

    // row-major over the interior only
    std::size_t interior_index(Vec2i p) const {
        if (!is_interior(p))
            throw std::invalid_argument("BoxGeometry: " + lfpp::to_string(p) +
                                        " is not interior");
        Vec2i r = p - origin_;
        return std::size_t(r.y - 1) * interior_side() + (r.x - 1);
    }
    Vec2i interior_vertex_at(std::size_t idx) const {
        int n = interior_side();
        return origin_ + Vec2i{int(idx % n) + 1, int(idx / n) + 1};
    }

    void require_inside(Vec2i p) const {
        if (!contains(p))
            throw std::invalid_argument("BoxGeometry: vertex " + lfpp::to_string(p) +
                                        " outside box");
    }

    friend bool operator==(const BoxGeometry& a, const BoxGeometry& b) {
        return a.origin_ == b.origin_ && a.side_ == b.side_;
    }

private:
    Vec2i origin_{0, 0};
    int side_ = 0;
};

/// B_ell(x): box of side length ell (ell even) centered at x, (ell+1)^2 vertices.
inline BoxGeometry centered_box(Vec2i center, int ell) {
    if (ell < 2 || ell % 2 != 0)
        throw std::invalid_argument("centered_box: side length must be even and >= 2");
    return BoxGeometry(center - Vec2i{ell / 2, ell / 2}, ell + 1);
}

/// V_N = [0, N)^2.
inline BoxGeometry box_vn(int n) { return BoxGeometry({0, 0}, n); }

/// V_{5N} = [-2N, 3N)^2.
inline BoxGeometry box_v5n(int n) { return BoxGeometry({-2 * n, -2 * n}, 5 * n); }

}  // namespace lfpp
