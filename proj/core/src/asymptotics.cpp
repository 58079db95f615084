#include "flatsurf/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flatsurf/parallel.hpp"

namespace flatsurf {

CountSeries count_series(const TranslationSurface& s, CountKind kind, std::vector<double> Ts) {
    if (Ts.empty()) throw std::invalid_argument("count_series needs at least one radius");
    for (std::size_t i = 0; i < Ts.size(); ++i) {
        if (!(Ts[i] > 0)) throw std::invalid_argument("radii must be positive");
        if (i > 0 && Ts[i] <= Ts[i - 1]) throw std::invalid_argument("radii must be ascending");
    }

    std::vector<double> lengths;
    if (kind == CountKind::Cylinders) {
        for (const auto& c : cylinders_up_to(s, Ts.back())) lengths.push_back(c.circumference);
    } else {
        for (const auto& sc : saddle_connections(s, Ts.back())) lengths.push_back(sc.length);
    }
    std::sort(lengths.begin(), lengths.end());

    CountSeries out;
    out.surface_name = s.name;
    out.kind = kind;
    for (double T : Ts) {
        long n = static_cast<long>(
            std::upper_bound(lengths.begin(), lengths.end(), T * (1 + 1e-12)) - lengths.begin());
        out.rows.push_back({T, n, n / (T * T)});
    }
    return out;
}

double predicted_constant(Family family, int n) {
    const double pi = M_PI;
    auto need_odd = [&] {
        if (n < 5 || n % 2 == 0)
            throw std::invalid_argument("predicted_constant requires odd n >= 5 for this family");
    };
    switch (family) {
        case Family::SquareTorus:
            // pi/zeta(2) = 6/pi, unit area
            return 6.0 / pi;
        case Family::Xn: {
            need_odd();
            double area_xn = n * std::sin(2 * pi / n);
            return n * n * (n * n - 1.0) / (24.0 * (n - 2) * pi) / area_xn;
        }
        case Family::Sn: {
            need_odd();
            double area_xn = n * std::sin(2 * pi / n);
            return n * (n - 1.0) * (n * n + n + 3.0) / (12.0 * (n - 2) * pi) / area_xn;
        }
        case Family::Pn: {
            need_odd();
            double area_pn = std::sin(pi / n) * std::cos(pi / n);
            return (6.0 / pi) * (n - 1.0) * (n * n + n + 3.0) / (144.0 * (n - 2)) / area_pn;
        }
        case Family::Qn:
            break;
    }
    throw std::invalid_argument("no predicted constant for this family");
}

std::pair<double, double> sum_identity_check(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("sum_identity_check requires odd n >= 3");
    double lhs = 0.0;
    for (int j = 1; j <= (n - 1) / 2; ++j) {
        double s = std::sin(M_PI * (2 * j - 1) / n);
        lhs += 1.0 / (s * s);
    }
    double rhs = (static_cast<double>(n) * n - 1.0) / 6.0;
    return {lhs, rhs};
}

double sv_transform(const TranslationSurface& s, const TestRegion& f, CountKind kind) {
    double R = f.support_radius();
    double total = 0.0;
    if (kind == CountKind::Cylinders) {
        for (const auto& c : cylinders_up_to(s, R))
            if (f.contains(c.direction * c.circumference)) total += 1.0;
    } else {
        for (const auto& sc : saddle_connections(s, R))
            if (f.contains(sc.holonomy)) total += 1.0;
    }
    return total;
}

double trapezoid_ellipse_integral(Vec2 v, double t, int grid) {
    if (grid < 1000) throw std::invalid_argument("trapezoid_ellipse_integral requires grid >= 1000");
    Trapezoid h;
    Mat2 at = diag_t(t);
    long hits = 0;
    for (int i = 0; i < grid; ++i) {
        double theta = (i + 0.5) * 2 * M_PI / grid;
        if (h.contains(at * (rot_theta(theta) * v))) ++hits;
    }
    return static_cast<double>(hits) * 2 * M_PI / grid;
}

CircleAverage circle_average_check(const TranslationSurface& s, double T, int grid) {
    if (grid < 360) throw std::invalid_argument("circle_average_check requires grid >= 360");
    if (!(T > 0)) throw std::invalid_argument("circle_average_check requires T > 0");

    CircleAverage out;

    std::vector<double> lengths;
    for (const auto& c : cylinders_up_to(s, T)) lengths.push_back(c.circumference);
    long n_T = 0, n_half = 0;
    for (double len : lengths) {
        if (len <= T * (1 + 1e-12)) ++n_T;
        if (len <= T / 2 * (1 + 1e-12)) ++n_half;
    }
    out.lhs = static_cast<double>(n_T - n_half);

    double t = std::log(T);
    Mat2 at = diag_t(t);
    double R = Trapezoid::support_radius();
    Trapezoid h;

    std::vector<double> transform(grid, 0.0);
    parallel_for(static_cast<std::size_t>(grid), [&](std::size_t i) {
        double theta = (i + 0.5) * 2 * M_PI / grid;
        TranslationSurface moved = apply_matrix(at * rot_theta(theta), s);
        double sum = 0.0;
        for (const auto& c : cylinders_up_to(moved, R))
            if (h.contains(c.direction * c.circumference)) sum += 1.0;
        transform[i] = sum;
    });

    double mean = 0.0;
    for (double x : transform) mean += x;
    mean /= grid;
    out.rhs = 2 * M_PI * T * T * mean;
    return out;
}

std::string count_series_csv(const CountSeries& series) {
    std::ostringstream os;
    os << "T,count,count_over_T2,predicted,ratio\n";
    char buf[200];
    for (const auto& row : series.rows) {
        if (series.predicted_constant) {
            double p = *series.predicted_constant;
            std::snprintf(buf, sizeof buf, "%.17g,%ld,%.17g,%.17g,%.17g\n", row.T, row.N,
                          row.N_over_T2, p, row.N_over_T2 / p);
        } else {
            std::snprintf(buf, sizeof buf, "%.17g,%ld,%.17g,,\n", row.T, row.N, row.N_over_T2);
        }
        os << buf;
    }
    return os.str();
}

}  // namespace flatsurf
