#include "flatsurf/tolerances.hpp"

#include <cstdlib>

namespace flatsurf {

static Tolerances make_tolerances() {
    Tolerances t;
    double scale = 1.0;
    if (const char* env = std::getenv("FLATSURF_EPS_SCALE")) {
        char* end = nullptr;
        double v = std::strtod(env, &end);
        if (end != env && v > 0.0) scale = v;
    }
    t.glue *= scale;
    t.angle *= scale;
    t.flip *= scale;
    t.cocircular *= scale;
    t.iso *= scale;
    t.hit *= scale;
    t.dir_dedup *= scale;
    t.unimodular *= scale;
    return t;
}

const Tolerances& Tolerances::get() {
    static const Tolerances t = make_tolerances();
    return t;
}

}  // namespace flatsurf
