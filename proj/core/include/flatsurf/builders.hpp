#pragma once

#include <optional>
#include <vector>

#include "flatsurf/geom.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

// Rational polygon given by interior angles (exact multiples of pi) and side
// lengths. Vertex i sits between side i-1 and side i; side i runs from
// vertex i to vertex i+1. The direction of side 0 is an exact angle too, so
// the reflection group of the polygon can be computed without rounding.
struct RationalPolygonSpec {
    std::vector<AngleFrac> angles;
    std::vector<double> lengths;
    AngleFrac first_direction = AngleFrac(0, 1);

    int size() const { return static_cast<int>(angles.size()); }

    // Vertex coordinates implied by the angles and lengths.
    Polygon polygon() const;
    // Exact direction of each side.
    std::vector<AngleFrac> side_directions() const;
    // Checks angle sum (k-2)*pi exactly and closure within tolerance.
    void check() const;

    // Builds a spec from vertex coordinates, snapping every angle to a
    // rational multiple of pi (denominator at most max_den). Throws when an
    // angle is farther than 1e-9 from any such fraction.
    static RationalPolygonSpec from_vertices(const std::vector<Vec2>& vertices, int max_den = 512);
};

// Katok-Zemlyakov unfolding: one polygon copy per element of the dihedral
// group generated by the reflections in the polygon's sides, each copy glued
// to its mirror image along the reflecting side. The cap bounds the group
// order (rationality makes it finite, but inputs may lie).
TranslationSurface unfold(const RationalPolygonSpec& spec, int group_order_cap = 1024);

enum class Family { Pn, Qn, Xn, Sn, SquareTorus };

// Named surfaces:
//   Qn           isoceles triangle (pi/n, pi/n, (n-2)pi/n), unit equal sides,
//                one equal side horizontal; emitted as a one-polygon
//                container with no gluings (input material for unfold)
//   Pn           isoceles triangle ((n-2)pi/2n, (n-2)pi/2n, 2pi/n), unit
//                equal sides, base horizontal; also a bare container
//   Xn           double regular n-gon with opposite sides identified, scaled
//                and oriented so the vertical cylinder decomposition has
//                heights 4 sin(pi(2j-1)/n) cos(pi/n)
//   Sn           unfolding of Pn (4n triangles), the degree-2 cover of Xn
//   SquareTorus  unit square with opposite sides glued
TranslationSurface build(Family family, int n = 0);

// Triangle specs behind Qn/Pn, exposed for direct unfolding.
RationalPolygonSpec qn_triangle(int n);
RationalPolygonSpec pn_triangle(int n);
RationalPolygonSpec square_spec();

std::optional<Family> family_from_string(const std::string& name);

}  // namespace flatsurf
