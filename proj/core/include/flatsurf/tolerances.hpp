#pragma once

namespace flatsurf {

// Absolute tolerances, assuming surfaces built at unit scale (diameter O(1)).
// Every value is multiplied by the FLATSURF_EPS_SCALE environment variable,
// read once at startup.
struct Tolerances {
    double glue = 1e-9;        // edge match when validating gluings
    double angle = 1e-9;       // vertex angle sums, parallel-direction tests
    double flip = 1e-10;       // incircle determinant threshold for Delaunay flips
    double cocircular = 1e-7;  // incircle determinant below which triangles merge into one cell
    double iso = 1e-8;         // edge-vector match in isomorphism search
    double hit = 1e-9;         // vertex capture radius in the flow tracer
    double dir_dedup = 1e-10;  // unit directions closer than this are identified
    double unimodular = 1e-9;  // |det - 1| bound for group elements acting on surfaces

    static const Tolerances& get();
};

// Separatrix budget multiplier used by the cylinder census: directions are
// explored with budget = c_budget * L when listing cylinders up to length L.
inline constexpr double kCylinderBudgetFactor = 8.0;

}  // namespace flatsurf
