#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <variant>

namespace nullfield {

using cplx = std::complex<double>;

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(Vec2 r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    friend constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

    constexpr double dot(Vec2 r) const { return x * r.x + y * r.y; }
    /// 2D cross product (z-component of the 3D cross).
    constexpr double cross(Vec2 r) const { return x * r.y - y * r.x; }
    double norm() const { return std::sqrt(x * x + y * y); }
    constexpr double norm2() const { return x * x + y * y; }

    /// Counterclockwise quarter turn.
    constexpr Vec2 perp() const { return {-y, x}; }

    Vec2 rotated(double angle) const {
        const double c = std::cos(angle), s = std::sin(angle);
        return {c * x - s * y, s * x + c * y};
    }

    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
    }
};

inline cplx to_cplx(Vec2 v) { return {v.x, v.y}; }
inline Vec2 to_vec(cplx z) { return {z.real(), z.imag()}; }

/// Signed angle from a to b, counterclockwise positive, in (-pi, pi].
inline double signed_angle(Vec2 a, Vec2 b) { return std::atan2(a.cross(b), a.dot(b)); }

struct Rect {
    double xmin = 0, ymin = 0, xmax = 0, ymax = 0;

    bool contains(Vec2 p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    Vec2 center() const { return {0.5 * (xmin + xmax), 0.5 * (ymin + ymax)}; }
};

struct DiskRegion {
    Vec2 center;
    double radius = 1.0;

    bool contains(Vec2 p) const { return (p - center).norm2() <= radius * radius; }
};

/// Evaluation domain: a rectangle, a disk, or the whole plane.
class Domain {
public:
    Domain() : shape_(Rect{-100, -100, 100, 100}) {}

    static Domain rect(double xmin, double ymin, double xmax, double ymax) {
        Domain d;
        d.shape_ = Rect{xmin, ymin, xmax, ymax};
        return d;
    }
    static Domain rect(Rect r) {
        Domain d;
        d.shape_ = r;
        return d;
    }
    static Domain disk(Vec2 center, double radius) {
        Domain d;
        d.shape_ = DiskRegion{center, radius};
        return d;
    }
    static Domain all() {
        Domain d;
        d.shape_ = All{};
        return d;
    }

    bool contains(Vec2 p) const {
        if (std::holds_alternative<Rect>(shape_)) return std::get<Rect>(shape_).contains(p);
        if (std::holds_alternative<DiskRegion>(shape_))
            return std::get<DiskRegion>(shape_).contains(p);
        return true;
    }

    bool is_bounded() const { return !std::holds_alternative<All>(shape_); }
    bool is_rect() const { return std::holds_alternative<Rect>(shape_); }
    bool is_disk() const { return std::holds_alternative<DiskRegion>(shape_); }
    const Rect* as_rect() const { return std::get_if<Rect>(&shape_); }
    const DiskRegion* as_disk() const { return std::get_if<DiskRegion>(&shape_); }

    /// Characteristic length, used to scale finite-difference steps and tolerances.
    double scale() const {
        if (auto* r = std::get_if<Rect>(&shape_)) return std::max(r->width(), r->height());
        if (auto* d = std::get_if<DiskRegion>(&shape_)) return 2.0 * d->radius;
        return 1.0;
    }

    /// Bounding rectangle (finite only for bounded domains).
    Rect bounding() const {
        if (auto* r = std::get_if<Rect>(&shape_)) return *r;
        if (auto* d = std::get_if<DiskRegion>(&shape_))
            return Rect{d->center.x - d->radius, d->center.y - d->radius,
                        d->center.x + d->radius, d->center.y + d->radius};
        return Rect{-kInf, -kInf, kInf, kInf};
    }

private:
    struct All {};
    std::variant<Rect, DiskRegion, All> shape_;
};

}  // namespace nullfield
