#include "flatsurf/veech.hpp"

#include <cmath>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "flatsurf/tolerances.hpp"

namespace flatsurf {

bool stabilizes(const Mat2& g, const TranslationSurface& s) {
    if (std::abs(g.det() - 1.0) > Tolerances::get().unimodular)
        throw std::invalid_argument("stabilizes requires a unimodular matrix");
    return is_isomorphic(apply_matrix(g, s), s);
}

FuchsianGroupSpec gamma_n(int n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("gamma_n requires odd n >= 5");
    FuchsianGroupSpec grp;
    grp.generators = {veech_unipotent(n), rot_theta(2 * M_PI / n)};
    grp.covolume = (n - 2) * M_PI / n;
    return grp;
}

FuchsianGroupSpec sl2z() {
    FuchsianGroupSpec grp;
    grp.generators = {Mat2{1, 1, 0, 1}, Mat2{0, -1, 1, 0}};
    grp.covolume = M_PI / 3.0;
    return grp;
}

namespace {

struct CellKey {
    std::int64_t x, y;
    bool operator==(const CellKey& o) const { return x == o.x && y == o.y; }
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& k) const {
        std::uint64_t h = static_cast<std::uint64_t>(k.x) * 0x9E3779B97F4A7C15ull;
        h ^= static_cast<std::uint64_t>(k.y) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

}  // namespace

std::vector<Vec2> orbit_vectors(const FuchsianGroupSpec& grp, Vec2 v, double T, double K) {
    if (!(v.norm() > 0)) throw std::invalid_argument("orbit_count requires a nonzero vector");
    if (!(T > 0)) throw std::invalid_argument("orbit_count requires a positive radius");
    if (!(K >= 1)) throw std::invalid_argument("pruning factor must be at least 1");
    for (const auto& g : grp.generators)
        if (std::abs(g.det() - 1.0) > 1e-10)
            throw std::invalid_argument("group generators must be unimodular");

    std::vector<Mat2> moves;
    for (const auto& g : grp.generators) {
        moves.push_back(g);
        moves.push_back(g.inverse_unimodular());
    }

    const double grid = 1e-8 * v.norm();
    const double expand_limit = K * T;
    const std::size_t frontier_cap = 20000000;

    std::unordered_set<CellKey, CellKeyHash> seen;
    auto key_of = [&](Vec2 w) {
        return CellKey{static_cast<std::int64_t>(std::llround(w.x / grid)),
                       static_cast<std::int64_t>(std::llround(w.y / grid))};
    };
    // a point may round into a neighbouring cell of an earlier twin
    auto known = [&](Vec2 w) {
        CellKey k = key_of(w);
        for (std::int64_t dx = -1; dx <= 1; ++dx)
            for (std::int64_t dy = -1; dy <= 1; ++dy)
                if (seen.count(CellKey{k.x + dx, k.y + dy})) return true;
        return false;
    };

    std::deque<Vec2> queue;
    std::vector<Vec2> orbit;
    seen.insert(key_of(v));
    orbit.push_back(v);
    queue.push_back(v);

    while (!queue.empty()) {
        Vec2 w = queue.front();
        queue.pop_front();
        for (const auto& m : moves) {
            Vec2 u = m * w;
            if (u.norm() > expand_limit * (1 + 1e-12)) continue;
            if (known(u)) continue;
            seen.insert(key_of(u));
            orbit.push_back(u);
            queue.push_back(u);
            if (orbit.size() > frontier_cap) throw std::runtime_error("orbit frontier cap exceeded");
        }
    }
    return orbit;
}

OrbitCount orbit_count(const FuchsianGroupSpec& grp, Vec2 v, double T, double K,
                       std::optional<Mat2> parabolic) {
    std::vector<Vec2> orbit = orbit_vectors(grp, v, T, K);

    OrbitCount out;
    out.vector = v;
    out.radius = T;
    out.pruning_factor = K;
    for (const auto& w : orbit)
        if (w.norm() <= T * (1 + 1e-12)) ++out.count;

    if (parabolic) {
        Vec2 vp = v.perp();
        double num = std::abs(dot((*parabolic) * vp, v));
        double norm3 = v.norm() * v.norm() * v.norm();
        out.predicted = num / (grp.covolume * norm3 * vp.norm()) * T * T;
    }
    return out;
}

double calibration_factor() {
    FuchsianGroupSpec grp = sl2z();
    OrbitCount oc = orbit_count(grp, Vec2{1, 0}, 10.0, 4.0, Mat2{1, 1, 0, 1});
    return static_cast<double>(oc.count) / *oc.predicted;
}

}  // namespace flatsurf
