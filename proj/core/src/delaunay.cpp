#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "flatsurf/tolerances.hpp"
#include "flatsurf/triangulation.hpp"

namespace flatsurf {

// Incircle determinant of (a, b, c) counterclockwise against d, computed on
// coordinates centered at d and rescaled to unit size so the threshold is
// scale-free.
static double incircle(Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    Vec2 p = a - d, q = b - d, r = c - d;
    double m = std::max({std::abs(p.x), std::abs(p.y), std::abs(q.x), std::abs(q.y),
                         std::abs(r.x), std::abs(r.y), 1e-300});
    p = p / m;
    q = q / m;
    r = r / m;
    return p.norm2() * cross(q, r) - q.norm2() * cross(p, r) + r.norm2() * cross(p, q);
}

double Triangulation::incircle_value(int t, int e) const {
    const Tri& a = tris[t];
    Vec2 apex = developed_apex(t, e);
    return incircle(a.v[e], a.v[(e + 1) % 3], a.v[(e + 2) % 3], apex);
}

int Triangulation::delaunay_flips() {
    const double eps = Tolerances::get().flip;

    auto edge_id = [](int t, int e) { return 3 * t + e; };

    std::deque<int> queue;
    std::vector<char> queued(3 * tris.size(), 0);
    auto push = [&](int t, int e) {
        int id = edge_id(t, e);
        if (!queued[id]) {
            queued[id] = 1;
            queue.push_back(id);
        }
    };
    for (int t = 0; t < static_cast<int>(tris.size()); ++t)
        for (int e = 0; e < 3; ++e) push(t, e);

    long flips = 0;
    const long cap = 1000 + 200 * static_cast<long>(tris.size()) * static_cast<long>(tris.size());

    while (!queue.empty()) {
        int id = queue.front();
        queue.pop_front();
        queued[id] = 0;
        int t1 = id / 3, e1 = id % 3;

        if (incircle_value(t1, e1) <= eps) continue;

        if (++flips > cap)
            throw std::runtime_error("delaunay flip sequence did not converge (degenerate surface)");

        int t2 = tris[t1].mate_tri[e1];
        int e2 = tris[t1].mate_edge[e1];

        Tri old1 = tris[t1];
        Tri old2 = tris[t2];

        // Quad in t1's chart: A, D, B, C counterclockwise.
        Vec2 A = old1.v[e1];
        Vec2 B = old1.v[(e1 + 1) % 3];
        Vec2 C = old1.v[(e1 + 2) % 3];
        Vec2 D = developed_apex(t1, e1);
        int clsA = old1.cls[e1], clsB = old1.cls[(e1 + 1) % 3], clsC = old1.cls[(e1 + 2) % 3];
        int clsD = old2.cls[(e2 + 2) % 3];

        // A strictly non-Delaunay edge gives a strictly convex quad, so both
        // new triangles are counterclockwise.
        if (cross(D - A, C - A) <= 0 || cross(B - D, C - D) <= 0)
            throw std::runtime_error("flip would create a degenerate triangle");

        // External neighbors before surgery, in quad order:
        //   O1 = (t1, e1+1): B->C     -> new (t2, 1)
        //   O2 = (t1, e1+2): C->A     -> new (t1, 2)
        //   O3 = (t2, e2+1): A->D     -> new (t1, 0)
        //   O4 = (t2, e2+2): D->B     -> new (t2, 0)
        struct Slot { int t, e; };
        Slot olds[4] = {{t1, (e1 + 1) % 3}, {t1, (e1 + 2) % 3}, {t2, (e2 + 1) % 3}, {t2, (e2 + 2) % 3}};
        Slot news[4] = {{t2, 1}, {t1, 2}, {t1, 0}, {t2, 0}};
        Slot mates[4];
        for (int i = 0; i < 4; ++i) {
            const Tri& o = (olds[i].t == t1) ? old1 : old2;
            mates[i] = {o.mate_tri[olds[i].e], o.mate_edge[olds[i].e]};
        }
        auto remap = [&](Slot m) {
            for (int i = 0; i < 4; ++i)
                if (m.t == olds[i].t && m.e == olds[i].e) return news[i];
            return m;
        };

        Tri n1;  // (A, D, C), stored in slot t1
        n1.v[0] = A;
        n1.v[1] = D;
        n1.v[2] = C;
        n1.cls[0] = clsA;
        n1.cls[1] = clsD;
        n1.cls[2] = clsC;
        Tri n2;  // (D, B, C), stored in slot t2
        n2.v[0] = D;
        n2.v[1] = B;
        n2.v[2] = C;
        n2.cls[0] = clsD;
        n2.cls[1] = clsB;
        n2.cls[2] = clsC;

        // Re-center charts at the first vertex.
        for (int i = 2; i >= 0; --i) n1.v[i] = n1.v[i] - n1.v[0];
        for (int i = 2; i >= 0; --i) n2.v[i] = n2.v[i] - n2.v[0];

        tris[t1] = n1;
        tris[t2] = n2;

        // Diagonal pair.
        tris[t1].mate_tri[1] = t2;
        tris[t1].mate_edge[1] = 2;
        tris[t2].mate_tri[2] = t1;
        tris[t2].mate_edge[2] = 1;

        for (int i = 0; i < 4; ++i) {
            Slot m = remap(mates[i]);
            tris[news[i].t].mate_tri[news[i].e] = m.t;
            tris[news[i].t].mate_edge[news[i].e] = m.e;
            tris[m.t].mate_tri[m.e] = news[i].t;
            tris[m.t].mate_edge[m.e] = news[i].e;
        }

        for (int i = 0; i < 4; ++i) push(news[i].t, news[i].e);
        push(t1, 1);
        push(t2, 2);
    }

    rebuild_class_walk();
    return static_cast<int>(flips);
}

TranslationSurface delaunay(const TranslationSurface& s) {
    Triangulation tr = Triangulation::from_surface(s);
    tr.delaunay_flips();
    TranslationSurface out = tr.to_surface();
    out.name = s.name;
    return out;
}

}  // namespace flatsurf
