#pragma once

#include <array>
#include <vector>

#include "flatsurf/surface.hpp"

namespace flatsurf {

// Triangulated presentation of a translation surface. Each triangle lives in
// its own chart with counterclockwise vertices; edge e of a triangle runs
// from v[e] to v[(e+1)%3] and is glued to its mate with the opposite vector.
struct Tri {
    Vec2 v[3];
    int cls[3];        // vertex class ids
    int mate_tri[3];
    int mate_edge[3];
};

struct Triangulation {
    std::vector<Tri> tris;
    std::vector<int> class_multiple;  // angle multiple m per vertex class
    // corners of each class in cyclic order around the vertex
    std::vector<std::vector<std::pair<int, int>>> class_corners;
    // sector index of corner (t,k) within its class walk
    std::vector<std::array<int, 3>> sector_of;
    double surface_area = 0.0;
    std::string name;

    int class_count() const { return static_cast<int>(class_multiple.size()); }

    // Translation carrying the chart of mate(t,e) onto the chart of t.
    Vec2 develop_shift(int t, int e) const;
    // Apex of the neighbor across edge e, developed into t's chart.
    Vec2 developed_apex(int t, int e) const;

    void rebuild_class_walk();

    TranslationSurface to_surface() const;

    // Fan-triangulates a valid surface. Delaunay flips are separate; see
    // delaunay_flips().
    static Triangulation from_surface(const TranslationSurface& s);

    // Flips edges until every interior edge is locally Delaunay within the
    // flip tolerance. Returns the number of flips. Throws when the flip
    // count exceeds the cap (degenerate input).
    int delaunay_flips();

    // Normalized incircle determinant for edge (t,e); positive means the
    // opposite apex is inside the circumcircle, i.e. the edge must flip.
    double incircle_value(int t, int e) const;
};

}  // namespace flatsurf
