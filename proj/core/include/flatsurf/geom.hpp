#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace flatsurf {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

    constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }

    double norm() const { return std::hypot(x, y); }
    constexpr double norm2() const { return x * x + y * y; }
    Vec2 normalized() const {
        double n = norm();
        if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
        return {x / n, y / n};
    }
    // Counterclockwise quarter turn.
    constexpr Vec2 perp() const { return {-y, x}; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    constexpr Mat2() = default;
    constexpr Mat2(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {}

    constexpr double det() const { return a * d - b * c; }

    constexpr Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
    }
    constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }

    // Inverse assuming det = 1 (group elements).
    constexpr Mat2 inverse_unimodular() const { return {d, -b, -c, a}; }

    static constexpr Mat2 identity() { return {}; }
};

inline Vec2 apply(const Mat2& m, Vec2 v) { return m * v; }

// One-parameter families from the SL(2,R) action.
//
//   diag_t(t)          = [[e^t, 0], [0, e^-t]]
//   rot_theta(theta)   = [[cos, sin], [-sin, cos]]
//   upper_u(s)         = [[1, s], [0, 1]]
//   veech_unipotent(n) = [[1, 0], [2*cot(pi/n), 1]]
Mat2 diag_t(double t);
Mat2 rot_theta(double theta);
Mat2 upper_u(double s);
Mat2 veech_unipotent(int n);

enum class Sl2Kind { DiagT, RotTheta, UpperU, VeechUnipotent };

Mat2 sl2_element(Sl2Kind kind, double param);

// Angle expressed as num/den * pi, kept in lowest terms with den >= 1.
// Unfolding group arithmetic stays exact by working with these fractions.
struct AngleFrac {
    std::int64_t num = 0;
    std::int64_t den = 1;

    AngleFrac() = default;
    AngleFrac(std::int64_t n, std::int64_t d);

    double radians() const { return static_cast<double>(num) / static_cast<double>(den) * M_PI; }

    AngleFrac operator+(AngleFrac o) const;
    AngleFrac operator-(AngleFrac o) const;
    AngleFrac operator-() const { return AngleFrac(-num, den); }

    // Reduce modulo 2*pi into [0, 2).
    AngleFrac mod_two_pi() const;

    bool operator==(const AngleFrac& o) const { return num == o.num && den == o.den; }
    bool operator<(const AngleFrac& o) const;

    std::string str() const;
};

}  // namespace flatsurf
