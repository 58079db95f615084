#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flatsurf/builders.hpp"
#include "flatsurf/census.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

enum class CountKind { Cylinders, SaddleConnections };

struct CountRow {
    double T = 0.0;
    long N = 0;
    double N_over_T2 = 0.0;
};

struct CountSeries {
    std::string surface_name;
    CountKind kind = CountKind::Cylinders;
    std::vector<CountRow> rows;
    std::optional<double> predicted_constant;
};

// Counts N(s, T) for each T from a single census at max(Ts). Holonomies are
// counted with both signs, matching the torus convention where the cylinder
// set is all primitive integer vectors.
CountSeries count_series(const TranslationSurface& s, CountKind kind, std::vector<double> Ts);

// Closed-form quadratic growth constants (the N/T^2 limits):
//   Xn     n^2 (n^2-1) / (24 (n-2) pi) / area(Xn)
//   Sn     n (n-1)(n^2+n+3) / (12 (n-2) pi) / area(Xn)
//   Pn     (pi/zeta(2)) (n-1)(n^2+n+3) / (144 (n-2)) / area(Pn)
//   torus  (pi/zeta(2)) / area, area 1 for the unit square
// with zeta(2) = pi^2/6 so pi/zeta(2) = 6/pi exactly, and the builder
// normalizations area(Xn) = n sin(2pi/n), area(Pn) = sin(pi/n) cos(pi/n).
double predicted_constant(Family family, int n);

// Direct summation of sum_j 1 / sin^2(pi (2j-1)/n) against (n^2-1)/6.
std::pair<double, double> sum_identity_check(int n);

// Indicator test regions for Siegel-Veech transforms.
struct Trapezoid {
    // vertices (1,1), (0,1), (0,1/2), (1/2,1/2)
    bool contains(Vec2 p) const {
        return p.y >= 0.5 && p.y <= 1.0 && p.x >= 0.0 && p.x <= p.y;
    }
    static double support_radius() { return std::sqrt(2.0); }
};

struct Disc {
    double radius = 0.0;
    bool contains(Vec2 p) const { return p.norm() <= radius; }
};

struct TestRegion {
    bool is_disc = false;
    Disc disc;
    Trapezoid trapezoid;
    bool contains(Vec2 p) const { return is_disc ? disc.contains(p) : trapezoid.contains(p); }
    double support_radius() const { return is_disc ? disc.radius : Trapezoid::support_radius(); }

    static TestRegion make_trapezoid() { return {}; }
    static TestRegion make_disc(double r) { return {true, Disc{r}, {}}; }
};

// Siegel-Veech transform: number of census holonomies inside the region.
double sv_transform(const TranslationSurface& s, const TestRegion& f, CountKind kind);

// Midpoint quadrature of the circle integral of the trapezoid indicator
// along the ellipse {a_t r_theta v}.
double trapezoid_ellipse_integral(Vec2 v, double t, int grid);

struct CircleAverage {
    double lhs = 0.0;  // N(s,T) - N(s,T/2)
    double rhs = 0.0;  // 2 pi T^2 * mean over theta of the trapezoid transform of a_t r_theta s
};

// Both sides of the annulus-count / circle-average relation at t = log T,
// each from its own census.
CircleAverage circle_average_check(const TranslationSurface& s, double T, int grid);

// CSV report: T,count,count_over_T2,predicted,ratio
std::string count_series_csv(const CountSeries& series);

}  // namespace flatsurf
