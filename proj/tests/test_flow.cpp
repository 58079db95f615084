#include <doctest.h>

#include <cmath>

#include "flatsurf/builders.hpp"
#include "flatsurf/flow.hpp"
#include "flatsurf/surface.hpp"

using namespace flatsurf;

TEST_CASE("horizontal circle on the unit torus closes at length 1") {
    auto torus = build(Family::SquareTorus);
    Trajectory t = trace(torus, {0, {0.5, 0.5}}, {1, 0}, 3.0);
    CHECK(t.terminal == Terminal::ClosedUp);
    CHECK(t.total_length == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("irrational slope exhausts the budget") {
    auto torus = build(Family::SquareTorus);
    Trajectory t = trace(torus, {0, {0.5, 0.5}}, {1, std::sqrt(2.0)}, 10.0);
    CHECK(t.terminal == Terminal::BudgetExhausted);
    CHECK(t.total_length == doctest::Approx(10.0).epsilon(1e-12));
}

TEST_CASE("vertical core curve of the narrow double-pentagon cylinder") {
    auto x5 = build(Family::Xn, 5);
    double h1 = 2 * std::sin(2 * M_PI / 5);
    // just right of the leftmost vertex (-1, 0): inside the narrow cylinder
    Trajectory t = trace(x5, {0, {-0.97, 0.0}}, {0, 1}, 2 * h1);
    CHECK(t.terminal == Terminal::ClosedUp);
    CHECK(t.total_length == doctest::Approx(h1).epsilon(1e-9));
}

TEST_CASE("ray into a vertex reports the cone point") {
    auto x5 = build(Family::Xn, 5);
    // aim straight at vertex (cos(pi/5), sin(pi/5)) from inside
    Vec2 target{std::cos(M_PI / 5), std::sin(M_PI / 5)};
    Vec2 start{0.0, 0.0};
    Trajectory t = trace(x5, {0, start}, target - start, 10.0);
    CHECK(t.terminal == Terminal::HitConePoint);
    CHECK(t.cone_id == 0);
    CHECK(t.total_length == doctest::Approx(target.norm()).epsilon(1e-9));
}

TEST_CASE("separatrix counts follow the angle multiple") {
    auto torus = build(Family::SquareTorus);
    auto cps_torus = cone_points(torus);
    auto rays = separatrices(torus, cps_torus[0], {0, 1}, 0.5);
    CHECK(rays.size() == 2);  // one per sign at a regular marked point

    auto x5 = build(Family::Xn, 5);
    auto cps = cone_points(x5);
    auto rays5 = separatrices(x5, cps[0], {0, 1}, 20.0);
    CHECK(rays5.size() == 6);  // three upward, three downward around the 6 pi cone
    int up = 0, down = 0;
    for (const auto& r : rays5) {
        REQUIRE(r.terminal == Terminal::HitConePoint);
        (r.displacement().y > 0 ? up : down)++;
    }
    CHECK(up == 3);
    CHECK(down == 3);
}

TEST_CASE("no separatrices from a surfaceless direction request") {
    auto torus = build(Family::SquareTorus);
    CHECK_THROWS_AS(trace(torus, {0, {0.5, 0.5}}, {0, 0}, 1.0), std::invalid_argument);
}

TEST_CASE("concatenation: a budget split at a regular point is seamless") {
    auto x5 = build(Family::Xn, 5);
    Vec2 dir{0.503, 1.0};
    double L1 = 1.3, L2 = 2.1;
    Trajectory whole = trace(x5, {0, {0.1, 0.05}}, dir, L1 + L2);
    Trajectory first = trace(x5, {0, {0.1, 0.05}}, dir, L1);
    REQUIRE(first.terminal == Terminal::BudgetExhausted);
    const auto& seg = first.segments.back();
    Trajectory second = trace(x5, {seg.polygon, seg.exit}, dir, L2);
    REQUIRE(whole.terminal == Terminal::BudgetExhausted);
    const auto& wseg = whole.segments.back();
    const auto& sseg = second.segments.back();
    CHECK(wseg.polygon == sseg.polygon);
    CHECK((wseg.exit - sseg.exit).norm() <= 1e-9 * (L1 + L2));
    CHECK(first.total_length + second.total_length ==
          doctest::Approx(whole.total_length).epsilon(1e-10));
}

TEST_CASE("direction reversal retraces the same segments") {
    auto x5 = build(Family::Xn, 5);
    Vec2 dir{1.0, 0.37};
    Trajectory fwd = trace(x5, {0, {0.05, -0.1}}, dir, 4.0);
    REQUIRE(fwd.terminal == Terminal::BudgetExhausted);
    const auto& endseg = fwd.segments.back();
    Trajectory back = trace(x5, {endseg.polygon, endseg.exit}, -dir, 4.0);
    REQUIRE(back.terminal == Terminal::BudgetExhausted);
    CHECK(back.segments.size() == fwd.segments.size());
    CHECK((back.segments.back().exit - Vec2{0.05, -0.1}).norm() <= 1e-8);
}

TEST_CASE("length additivity across segments") {
    auto s5 = build(Family::Sn, 5);
    Trajectory t = trace(s5, {0, {-0.05, 0.4}}, {0.21, 1.0}, 25.0);
    double sum = 0;
    for (const auto& seg : t.segments) sum += (seg.exit - seg.entry).norm();
    CHECK(sum == doctest::Approx(t.total_length).epsilon(1e-10));
}

TEST_CASE("start point outside the polygon is rejected") {
    auto torus = build(Family::SquareTorus);
    CHECK_THROWS_AS(trace(torus, {0, {1.5, 0.5}}, {1, 0}, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(trace(torus, {0, {0.0, 0.0}}, {1, 1}, 1.0), std::invalid_argument);
}
