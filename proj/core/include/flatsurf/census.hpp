#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "flatsurf/surface.hpp"

namespace flatsurf {

// Saddle connection: straight segment from one vertex class to another with
// no class in its interior. A complete census lists one entry per outgoing
// ray, so the reversed connection appears as its own entry with holonomy -v.
struct SaddleConnection {
    Vec2 holonomy;
    double length = 0.0;
    int start_cone = -1;
    int end_cone = -1;
    int start_sector = -1;  // corner index in the cyclic walk around start_cone
};

struct Cylinder {
    Vec2 direction;        // unit core direction
    double circumference = 0.0;
    double width = 0.0;    // transverse extent
    double area = 0.0;
    // The two boundary circles, each a set of parallel saddle connections.
    std::vector<SaddleConnection> boundary[2];
};

struct CylinderDecomposition {
    Vec2 direction;
    std::vector<Cylinder> cylinders;
    double total_area() const {
        double a = 0;
        for (const auto& c : cylinders) a += c.area;
        return a;
    }
};

// Thrown by decompose when some separatrix fails to reach a vertex within
// the budget: the direction is not periodic, or the budget is too small.
struct NotPeriodicWithinBudget : std::runtime_error {
    explicit NotPeriodicWithinBudget(const std::string& what) : std::runtime_error(what) {}
};

// Complete list of saddle connections of length at most L, one entry per
// (start class, outgoing sector). Enumeration develops triangle chains in
// the plane, pruned by the wedge of directions still able to reach an
// unexplored vertex within radius L.
std::vector<SaddleConnection> saddle_connections(const TranslationSurface& s, double L);

double shortest_sc(const TranslationSurface& s);

// Cylinder decomposition in a periodic direction: traces every separatrix
// in +-dir, cuts along the resulting saddle connections, and reassembles the
// strips into maximal cylinders. Regular marked points (angle 2 pi) do not
// interrupt a cylinder.
CylinderDecomposition decompose(const TranslationSurface& s, Vec2 dir, double budget);

struct SkippedDirection {
    Vec2 direction;
    double shortest_sc_in_direction = 0.0;
};

struct CylinderCensus {
    std::vector<Cylinder> cylinders;            // sorted, both signs emitted
    std::vector<SkippedDirection> skipped;      // directions where decompose hit the budget
};

// All cylinders of circumference at most L, with holonomy counted for both
// signs (one cylinder entry per sign). Candidate directions come from the
// saddle-connection census at L; each is decomposed with budget
// kCylinderBudgetFactor * L, and failures are reported in `skipped`.
CylinderCensus cylinder_census(const TranslationSurface& s, double L);

std::vector<Cylinder> cylinders_up_to(const TranslationSurface& s, double L);

// CSV emitters; schemas:
//   saddles:   hol_x,hol_y,length,start_cone,end_cone
//   cylinders: dir_x,dir_y,circumference,width,area
std::string saddles_csv(const std::vector<SaddleConnection>& list);
std::string cylinders_csv(const std::vector<Cylinder>& list);

}  // namespace flatsurf
