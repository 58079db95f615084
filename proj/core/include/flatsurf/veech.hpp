#pragma once

#include <optional>
#include <vector>

#include "flatsurf/geom.hpp"
#include "flatsurf/surface.hpp"

namespace flatsurf {

// Fuchsian lattice given by generators and its declared hyperbolic covolume
// (Poincare area of Gamma \ H). The covolume is an input, never computed.
struct FuchsianGroupSpec {
    std::vector<Mat2> generators;
    double covolume = 0.0;
};

struct OrbitCount {
    Vec2 vector;
    double radius = 0.0;
    long count = 0;
    std::optional<double> predicted;  // lattice-point formula, when a parabolic was supplied
    double pruning_factor = 0.0;
};

// True when g fixes the surface up to cut-and-paste, i.e. g S and S are
// translation-isomorphic.
bool stabilizes(const Mat2& g, const TranslationSurface& s);

// The Veech group of X_n: the vertical unipotent [[1,0],[2 cot(pi/n),1]]
// and the rotation by 2 pi / n, with covolume (n-2) pi / n.
FuchsianGroupSpec gamma_n(int n);

// SL(2,Z) with generators [[1,1],[0,1]] and [[0,-1],[1,0]], covolume pi/3.
// The calibration case for orbit counting.
FuchsianGroupSpec sl2z();

// Breadth-first orbit enumeration: expands w -> g w, g^-1 w for each
// generator while |w| <= K T, deduplicates at 1e-8 relative, and counts
// vectors with |w| <= T. When a parabolic fixing v is supplied the
// lattice-point prediction
//     covolume^-1 |<gamma v_perp, v>| / (|v|^3 |v_perp|) T^2
// is reported alongside; its normalization against the measured count is
// deliberately left to the caller (see calibration_factor).
OrbitCount orbit_count(const FuchsianGroupSpec& grp, Vec2 v, double T, double K,
                       std::optional<Mat2> parabolic = std::nullopt);

// The full BFS orbit set inside the expansion ball |w| <= K T.
std::vector<Vec2> orbit_vectors(const FuchsianGroupSpec& grp, Vec2 v, double T, double K);

// Measured ratio count / prediction on the SL(2,Z) primitive-vector orbit at
// T = 10. The prediction formula's normalization convention is resolved by
// this measurement, not assumed.
double calibration_factor();

}  // namespace flatsurf
