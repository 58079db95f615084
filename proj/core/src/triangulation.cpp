#include "flatsurf/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flatsurf/tolerances.hpp"

namespace flatsurf {

Vec2 Triangulation::develop_shift(int t, int e) const {
    const Tri& a = tris[t];
    const Tri& b = tris[a.mate_tri[e]];
    int f = a.mate_edge[e];
    // edge start of t maps to edge end of the mate
    return a.v[e] - b.v[(f + 1) % 3];
}

Vec2 Triangulation::developed_apex(int t, int e) const {
    const Tri& a = tris[t];
    const Tri& b = tris[a.mate_tri[e]];
    int f = a.mate_edge[e];
    return b.v[(f + 2) % 3] + develop_shift(t, e);
}

void Triangulation::rebuild_class_walk() {
    class_corners.assign(class_count(), {});
    sector_of.assign(tris.size(), {-1, -1, -1});
    std::vector<std::array<bool, 3>> seen(tris.size(), {false, false, false});
    for (std::size_t t0 = 0; t0 < tris.size(); ++t0) {
        for (int k0 = 0; k0 < 3; ++k0) {
            if (seen[t0][k0]) continue;
            int cls = tris[t0].cls[k0];
            int t = static_cast<int>(t0), k = k0;
            int guard = static_cast<int>(tris.size()) * 3 + 1;
            do {
                if (--guard < 0) throw std::logic_error("corner walk does not close");
                seen[t][k] = true;
                sector_of[t][k] = static_cast<int>(class_corners[cls].size());
                class_corners[cls].push_back({t, k});
                // counterclockwise around the vertex: cross edge (k+2)
                int e = (k + 2) % 3;
                int nt = tris[t].mate_tri[e];
                int nk = tris[t].mate_edge[e];
                t = nt;
                k = nk;
            } while (!(t == static_cast<int>(t0) && k == k0));
        }
    }
}

TranslationSurface Triangulation::to_surface() const {
    TranslationSurface s;
    s.name = name;
    s.polygons.reserve(tris.size());
    for (const auto& t : tris) s.polygons.push_back(Polygon{{t.v[0], t.v[1], t.v[2]}});
    for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
        for (int e = 0; e < 3; ++e) {
            int mt = tris[t].mate_tri[e], me = tris[t].mate_edge[e];
            if (mt > t || (mt == t && me > e)) s.gluings.push_back({EdgeRef{t, e}, EdgeRef{mt, me}});
        }
    }
    return s;
}

Triangulation Triangulation::from_surface(const TranslationSurface& s) {
    require_valid(s);
    VertexClasses classes = vertex_classes(s);
    auto partner = gluing_partners(s);

    Triangulation tr;
    tr.name = s.name;
    tr.surface_area = s.area();
    tr.class_multiple = classes.multiple;

    // Fan-triangulate polygon p from vertex 0: triangles (0, i, i+1).
    // boundary_slot[p][e] = (tri, edge) holding original polygon edge e.
    std::vector<std::vector<std::pair<int, int>>> boundary_slot(s.polygons.size());
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        const Polygon& poly = s.polygons[p];
        int n = poly.size();
        boundary_slot[p].resize(n);
        int first = static_cast<int>(tr.tris.size());
        for (int i = 1; i + 1 < n; ++i) {
            Tri t;
            t.v[0] = poly.vertices[0];
            t.v[1] = poly.vertices[i];
            t.v[2] = poly.vertices[i + 1];
            t.cls[0] = classes.class_of[p][0];
            t.cls[1] = classes.class_of[p][i];
            t.cls[2] = classes.class_of[p][i + 1];
            t.mate_tri[0] = t.mate_tri[1] = t.mate_tri[2] = -1;
            t.mate_edge[0] = t.mate_edge[1] = t.mate_edge[2] = -1;
            int id = static_cast<int>(tr.tris.size());
            tr.tris.push_back(t);
            // fan diagonals: edge 0 of tri i joins edge 2 of tri i-1
            if (i > 1) {
                tr.tris[id].mate_tri[0] = id - 1;
                tr.tris[id].mate_edge[0] = 2;
                tr.tris[id - 1].mate_tri[2] = id;
                tr.tris[id - 1].mate_edge[2] = 0;
            }
            boundary_slot[p][i] = {id, 1};
        }
        boundary_slot[p][0] = {first, 0};
        boundary_slot[p][n - 1] = {first + (n - 3), 2};
    }

    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        for (int e = 0; e < s.polygons[p].size(); ++e) {
            EdgeRef q = partner[p][e];
            auto [t1, e1] = boundary_slot[p][e];
            auto [t2, e2] = boundary_slot[q.polygon][q.edge];
            tr.tris[t1].mate_tri[e1] = t2;
            tr.tris[t1].mate_edge[e1] = e2;
            tr.tris[t2].mate_tri[e2] = t1;
            tr.tris[t2].mate_edge[e2] = e1;
        }
    }

    tr.rebuild_class_walk();
    return tr;
}

}  // namespace flatsurf
