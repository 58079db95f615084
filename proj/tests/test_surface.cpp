#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "flatsurf/builders.hpp"
#include "flatsurf/surface.hpp"

using namespace flatsurf;

namespace {

std::vector<int> zero_orders(const TranslationSurface& s) {
    std::vector<int> orders;
    for (const auto& c : cone_points(s)) orders.push_back(c.zero_order);
    std::sort(orders.begin(), orders.end());
    return orders;
}

}  // namespace

TEST_CASE("square torus validates cleanly") {
    auto torus = build(Family::SquareTorus);
    CHECK(validate(torus).ok());
    CHECK(area(torus) == doctest::Approx(1.0));
    CHECK(genus(torus) == 1);
}

TEST_CASE("missing gluing is reported as an uncovered edge") {
    auto torus = build(Family::SquareTorus);
    torus.gluings.pop_back();
    ValidationReport rep = validate(torus);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("uncovered edge") != std::string::npos);
}

TEST_CASE("doubly glued edge is reported") {
    auto torus = build(Family::SquareTorus);
    torus.gluings.push_back({EdgeRef{0, 0}, EdgeRef{0, 1}});
    ValidationReport rep = validate(torus);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.summary().find("glued more than once") != std::string::npos);
}

TEST_CASE("mismatched edge vectors are reported") {
    auto torus = build(Family::SquareTorus);
    torus.polygons[0].vertices[2] = {1.25, 1.0};  // break convexity gently but lengths badly
    ValidationReport rep = validate(torus);
    CHECK_FALSE(rep.ok());
}

TEST_CASE("double pentagon: one vertex class of total angle 6 pi") {
    auto x5 = build(Family::Xn, 5);
    CHECK(validate(x5).ok());
    VertexClasses classes = vertex_classes(x5);
    REQUIRE(classes.count() == 1);
    CHECK(classes.total_angle[0] == doctest::Approx(6 * M_PI).epsilon(1e-12));
    CHECK(classes.corners[0].size() == 10);
}

TEST_CASE("cone points of the three reference surfaces") {
    auto torus = build(Family::SquareTorus);
    auto cps = cone_points(torus);
    REQUIRE(cps.size() == 1);
    CHECK(cps[0].angle_multiple == 1);
    CHECK(cps[0].zero_order == 0);

    auto x5 = build(Family::Xn, 5);
    CHECK(zero_orders(x5) == std::vector<int>{2});
    CHECK(genus(x5) == 2);

    auto s5 = build(Family::Sn, 5);
    CHECK(zero_orders(s5) == std::vector<int>{1, 1, 2, 2});
    CHECK(genus(s5) == 4);
}

TEST_CASE("areas of the reference surfaces") {
    CHECK(area(build(Family::SquareTorus)) == doctest::Approx(1.0));
    CHECK(area(build(Family::Xn, 5)) == doctest::Approx(5 * std::sin(2 * M_PI / 5)).epsilon(1e-12));
    CHECK(area(build(Family::Sn, 5)) ==
          doctest::Approx(2 * 5 * std::sin(2 * M_PI / 5)).epsilon(1e-12));
    CHECK(area(build(Family::Xn, 5)) == doctest::Approx(4.755282581475767).epsilon(1e-12));
}

TEST_CASE("gauss-bonnet on the builder corpus") {
    for (auto s : {build(Family::SquareTorus), build(Family::Xn, 5), build(Family::Xn, 7),
                   build(Family::Sn, 5), build(Family::Sn, 7), unfold(qn_triangle(5)),
                   unfold(square_spec())}) {
        int sum = 0;
        for (const auto& c : cone_points(s)) sum += c.zero_order;
        CHECK(sum == 2 * genus(s) - 2);
    }
}

TEST_CASE("apply_matrix: identity, inverse pair, rotation") {
    auto x5 = build(Family::Xn, 5);

    auto same = apply_matrix(Mat2::identity(), x5);
    for (std::size_t p = 0; p < x5.polygons.size(); ++p)
        for (int v = 0; v < x5.polygons[p].size(); ++v)
            CHECK((same.polygons[p].vertices[v] - x5.polygons[p].vertices[v]).norm() == 0.0);

    auto round = apply_matrix(diag_t(-0.8), apply_matrix(diag_t(0.8), x5));
    for (std::size_t p = 0; p < x5.polygons.size(); ++p)
        for (int v = 0; v < x5.polygons[p].size(); ++v)
            CHECK((round.polygons[p].vertices[v] - x5.polygons[p].vertices[v]).norm() <= 1e-10);

    auto torus = build(Family::SquareTorus);
    auto rotated = apply_matrix(rot_theta(M_PI / 2), torus);
    CHECK(validate(rotated).ok());
    CHECK(area(rotated) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("apply_matrix preserves area and cone data") {
    auto s5 = build(Family::Sn, 5);
    Mat2 g = upper_u(0.6) * diag_t(0.4) * rot_theta(1.1);
    auto moved = apply_matrix(g, s5);
    CHECK(validate(moved).ok());
    CHECK(area(moved) == doctest::Approx(area(s5)).epsilon(1e-9));
    CHECK(zero_orders(moved) == zero_orders(s5));
}

TEST_CASE("apply_matrix rejects non-unimodular input") {
    CHECK_THROWS_AS(apply_matrix(Mat2{2, 0, 0, 1}, build(Family::SquareTorus)),
                    std::invalid_argument);
}
