#pragma once

#include <string>
#include <utility>
#include <vector>

#include "flatsurf/geom.hpp"

namespace flatsurf {

// Convex polygon, vertices in counterclockwise order. Each polygon is its
// own coordinate chart; nothing relates the charts of different polygons
// except the edge gluings.
struct Polygon {
    std::vector<Vec2> vertices;

    int size() const { return static_cast<int>(vertices.size()); }
    Vec2 vertex(int i) const { return vertices[mod(i)]; }
    // Edge i runs from vertex i to vertex i+1.
    Vec2 edge_vector(int i) const { return vertex(i + 1) - vertex(i); }
    double area() const;
    bool convex_ccw(double eps) const;

  private:
    int mod(int i) const {
        int n = size();
        return ((i % n) + n) % n;
    }
};

struct EdgeRef {
    int polygon = 0;
    int edge = 0;

    bool operator==(const EdgeRef& o) const { return polygon == o.polygon && edge == o.edge; }
    bool operator<(const EdgeRef& o) const {
        return polygon != o.polygon ? polygon < o.polygon : edge < o.edge;
    }
};

// Union of convex polygons glued edge-to-edge by translations. The gluing
// list is an unordered pairing that must cover every edge exactly once.
// Surfaces are immutable values: every operation returns a new one.
struct TranslationSurface {
    std::string name;
    std::vector<Polygon> polygons;
    std::vector<std::pair<EdgeRef, EdgeRef>> gluings;

    int edge_count() const;
    double area() const;
};

struct Violation {
    std::string code;     // stable identifier, e.g. "uncovered-edge"
    std::string message;  // human-readable detail with offending indices
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Vertex class of the glued surface: a set of polygon corners identified by
// the gluing, carrying total angle 2*pi*m. Regular marked points have m = 1;
// genuine cone points have m >= 2.
struct ConePoint {
    int id = 0;
    int angle_multiple = 1;  // m, cone angle = 2*pi*m
    int zero_order = 0;      // alpha = m - 1
};

struct VertexClasses {
    // corner (p, v) -> class id
    std::vector<std::vector<int>> class_of;
    // per class, corners in cyclic order around the vertex
    std::vector<std::vector<std::pair<int, int>>> corners;
    std::vector<double> total_angle;
    std::vector<int> multiple;

    int count() const { return static_cast<int>(corners.size()); }
};

ValidationReport validate(const TranslationSurface& s);

// Throws std::invalid_argument with the report summary when invalid.
void require_valid(const TranslationSurface& s);

// Walks corners around each identified vertex. Requires a structurally
// sound surface (complete involutive gluing).
VertexClasses vertex_classes(const TranslationSurface& s);

std::vector<ConePoint> cone_points(const TranslationSurface& s);

double area(const TranslationSurface& s);

// Genus from the Euler characteristic of the gluing-induced CW structure.
int genus(const TranslationSurface& s);

// Linear action: maps every vertex by g, keeps the gluing combinatorics.
TranslationSurface apply_matrix(const Mat2& g, const TranslationSurface& s);

// Partner lookup: partner[p][e] = glued edge. Throws if the gluing is not a
// complete fixed-point-free involution.
std::vector<std::vector<EdgeRef>> gluing_partners(const TranslationSurface& s);

// Interior angle at corner (p, v), in (0, pi) for convex polygons.
double corner_angle(const Polygon& poly, int v);

// Delaunay retriangulation: returns the same surface presented as triangles
// with every interior edge satisfying the empty-circumcircle condition.
// Cocircular ties are resolved by a deterministic edge order.
TranslationSurface delaunay(const TranslationSurface& s);

// Translation equivalence ("cut and paste" equality): matches the Delaunay
// cell decompositions of both surfaces by seeded breadth-first search over
// all compatible starting cells.
bool is_isomorphic(const TranslationSurface& a, const TranslationSurface& b);

}  // namespace flatsurf
