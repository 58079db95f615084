#include "flatsurf/census.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "flatsurf/parallel.hpp"
#include "flatsurf/tolerances.hpp"
#include "flatsurf/triangulation.hpp"

namespace flatsurf {

namespace {

// Distance from the origin to segment [a, b].
double segment_distance(Vec2 a, Vec2 b) {
    Vec2 ab = b - a;
    double t = -dot(a, ab) / ab.norm2();
    t = std::clamp(t, 0.0, 1.0);
    return (a + ab * t).norm();
}

struct WedgeSearch {
    const Triangulation& tr;
    double Lslack;
    int start_cls;
    int start_sector;
    std::vector<SaddleConnection>& out;
    long steps = 0;
    static constexpr long kStepCap = 200000000;

    void record(Vec2 hol, int end_cls) {
        out.push_back({hol, hol.norm(), start_cls, end_cls, start_sector});
    }

    // Crossed edge occupies [a, b] in the developed plane (a on the low side
    // of the wedge); the open wedge (lo, hi) continues into triangle `t`
    // entered through its edge `e`.
    void search(Vec2 a, Vec2 b, Vec2 lo, Vec2 hi, int t, int e) {
        if (++steps > kStepCap) throw std::runtime_error("saddle connection search cap exceeded");
        if (segment_distance(a, b) > Lslack) return;

        const Tri& tri = tr.tris[t];
        Vec2 shift = a - tri.v[(e + 1) % 3];
        Vec2 x = tri.v[(e + 2) % 3] + shift;
        int xcls = tri.cls[(e + 2) % 3];

        // strict side tests; collinear rays are blocked by the nearer vertex
        double side_lo = cross(lo, x);
        double side_hi = cross(x, hi);
        double tol_lo = 1e-13 * lo.norm() * x.norm();
        double tol_hi = 1e-13 * hi.norm() * x.norm();

        int e1 = (e + 1) % 3;  // from the a-end to x
        int e2 = (e + 2) % 3;  // from x to the b-end

        if (side_lo > tol_lo && side_hi > tol_hi) {
            if (x.norm() <= Lslack) record(x, xcls);
            search(a, x, lo, x, tri.mate_tri[e1], tri.mate_edge[e1]);
            search(x, b, x, hi, tri.mate_tri[e2], tri.mate_edge[e2]);
        } else if (side_lo <= tol_lo) {
            search(x, b, lo, hi, tri.mate_tri[e2], tri.mate_edge[e2]);
        } else {
            search(a, x, lo, hi, tri.mate_tri[e1], tri.mate_edge[e1]);
        }
    }

    // Explore everything visible from corner (t,k).
    void run(int t, int k) {
        const Tri& tri = tr.tris[t];
        Vec2 origin = tri.v[k];
        Vec2 a = tri.v[(k + 1) % 3] - origin;
        Vec2 b = tri.v[(k + 2) % 3] - origin;
        // the corner's own first edge, half-open convention
        if (a.norm() <= Lslack) record(a, tri.cls[(k + 1) % 3]);
        int e = (k + 1) % 3;
        search(a, b, a, b, tri.mate_tri[e], tri.mate_edge[e]);
    }
};

}  // namespace

std::vector<SaddleConnection> saddle_connections_tr(const Triangulation& tr, double L) {
    if (!(L > 0)) throw std::invalid_argument("census radius must be positive");

    std::vector<std::pair<int, int>> corners;
    for (int t = 0; t < static_cast<int>(tr.tris.size()); ++t)
        for (int k = 0; k < 3; ++k) corners.push_back({t, k});

    std::vector<std::vector<SaddleConnection>> partial(corners.size());
    parallel_for(corners.size(), [&](std::size_t i) {
        auto [t, k] = corners[i];
        WedgeSearch ws{tr, L * (1 + 1e-12) + 1e-15, tr.tris[t].cls[k], tr.sector_of[t][k],
                       partial[i]};
        ws.run(t, k);
    });

    std::vector<SaddleConnection> out;
    for (auto& part : partial)
        out.insert(out.end(), part.begin(), part.end());

    std::sort(out.begin(), out.end(), [](const SaddleConnection& a, const SaddleConnection& b) {
        if (a.length != b.length) return a.length < b.length;
        double aa = angle_of(a.holonomy), ab = angle_of(b.holonomy);
        if (aa != ab) return aa < ab;
        if (a.start_cone != b.start_cone) return a.start_cone < b.start_cone;
        return a.start_sector < b.start_sector;
    });
    return out;
}

std::vector<SaddleConnection> saddle_connections(const TranslationSurface& s, double L) {
    Triangulation tr = Triangulation::from_surface(s);
    tr.delaunay_flips();
    return saddle_connections_tr(tr, L);
}

double shortest_sc(const TranslationSurface& s) {
    Triangulation tr = Triangulation::from_surface(s);
    tr.delaunay_flips();
    // the shortest triangulation edge is itself a saddle connection, so the
    // census at that radius is nonempty and complete
    double L = 1e300;
    for (const auto& t : tr.tris)
        for (int e = 0; e < 3; ++e) L = std::min(L, (t.v[(e + 1) % 3] - t.v[e]).norm());
    auto list = saddle_connections_tr(tr, L * (1 + 1e-9));
    double best = 1e300;
    for (const auto& sc : list) best = std::min(best, sc.length);
    return best;
}

std::string saddles_csv(const std::vector<SaddleConnection>& list) {
    std::ostringstream os;
    os << "hol_x,hol_y,length,start_cone,end_cone\n";
    char buf[160];
    for (const auto& sc : list) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%d,%d\n", sc.holonomy.x, sc.holonomy.y,
                      sc.length, sc.start_cone, sc.end_cone);
        os << buf;
    }
    return os.str();
}

std::string cylinders_csv(const std::vector<Cylinder>& list) {
    std::ostringstream os;
    os << "dir_x,dir_y,circumference,width,area\n";
    char buf[200];
    for (const auto& c : list) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", c.direction.x,
                      c.direction.y, c.circumference, c.width, c.area);
        os << buf;
    }
    return os.str();
}

}  // namespace flatsurf
