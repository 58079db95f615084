#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>

#include "cli.hpp"
#include "flatsurf/builders.hpp"
#include "flatsurf/io.hpp"
#include "flatsurf/surface.hpp"

using namespace flatsurf;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("surface json round trip is lossless") {
    auto x5 = build(Family::Xn, 5);
    auto back = surface_from_json(surface_to_json(x5));
    REQUIRE(back.polygons.size() == x5.polygons.size());
    for (std::size_t p = 0; p < x5.polygons.size(); ++p) {
        REQUIRE(back.polygons[p].size() == x5.polygons[p].size());
        for (int v = 0; v < x5.polygons[p].size(); ++v) {
            CHECK(back.polygons[p].vertices[v].x == x5.polygons[p].vertices[v].x);
            CHECK(back.polygons[p].vertices[v].y == x5.polygons[p].vertices[v].y);
        }
    }
    CHECK(back.gluings.size() == x5.gluings.size());
    CHECK(back.name == x5.name);
    CHECK(validate(back).ok());
}

TEST_CASE("reader rejects malformed input") {
    CHECK_THROWS(surface_from_json("{}"));
    CHECK_THROWS(surface_from_json("{\"polygons\": [], \"gluings\": \"x\"}"));
    CHECK_THROWS(surface_from_json(
        "{\"polygons\": [{\"vertices\": [[0,0],[1,0],[0,1]]}], \"gluings\": [[[0,0],[0,5]]]}"));
}

TEST_CASE("polygon spec json variants") {
    RationalPolygonSpec a = polygon_spec_from_json(
        "{\"angles\": [[1,3],[1,3],[1,3]], \"lengths\": [1,1,1]}");
    CHECK(unfold(a).polygons.size() == 6);
    RationalPolygonSpec b = polygon_spec_from_json(
        "{\"vertices\": [[0,0],[1,0],[0,1]]}");
    CHECK(b.angles[0] == AngleFrac(1, 2));
}

TEST_CASE("cli: build then validate exits cleanly") {
    std::string path = tmp_path("flatsurf_test_x5.json");
    CHECK(cli::run({"build", "--family", "xn", "--n", "5", "--out", path}) == 0);
    CHECK(cli::run({"validate", path}) == 0);
    auto s = load_surface(path);
    CHECK(s.polygons.size() == 2);
    std::remove(path.c_str());
}

TEST_CASE("cli: unfold a polygon file") {
    std::string poly = tmp_path("flatsurf_test_tri.json");
    write_file(poly, "{\"angles\": [[1,3],[1,3],[1,3]], \"lengths\": [1,1,1]}");
    std::string out = tmp_path("flatsurf_test_hex.json");
    CHECK(cli::run({"build", "--family", "unfold", "--polygon", poly, "--out", out}) == 0);
    CHECK(load_surface(out).polygons.size() == 6);
    std::remove(poly.c_str());
    std::remove(out.c_str());
}

TEST_CASE("cli: identity check prints the closed form") {
    CHECK(cli::run({"verify", "--check", "identity", "--n", "7"}) == 0);
}

TEST_CASE("cli: counting report is deterministic") {
    std::string path = tmp_path("flatsurf_test_sq.json");
    REQUIRE(cli::run({"build", "--family", "square", "--out", path}) == 0);
    std::string out1 = tmp_path("flatsurf_count1.csv");
    std::string out2 = tmp_path("flatsurf_count2.csv");
    REQUIRE(cli::run({"count", path, "--lengths", "2,4", "--what", "cyl", "--predict", "torus:0",
                      "--out", out1}) == 0);
    REQUIRE(cli::run({"count", path, "--lengths", "2,4", "--what", "cyl", "--predict", "torus:0",
                      "--out", out2}) == 0);
    CHECK(read_file(out1) == read_file(out2));
    CHECK(read_file(out1).rfind("T,count,count_over_T2,predicted,ratio\n", 0) == 0);
    std::remove(path.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("cli: saddle census is byte-stable across runs") {
    std::string path = tmp_path("flatsurf_test_x5b.json");
    REQUIRE(cli::run({"build", "--family", "xn", "--n", "5", "--out", path}) == 0);
    std::string out1 = tmp_path("flatsurf_sc1.csv");
    std::string out2 = tmp_path("flatsurf_sc2.csv");
    REQUIRE(cli::run({"saddles", path, "--length", "4", "--out", out1, "--jobs", "2"}) == 0);
    REQUIRE(cli::run({"saddles", path, "--length", "4", "--out", out2, "--jobs", "1"}) == 0);
    CHECK(read_file(out1) == read_file(out2));
    std::remove(path.c_str());
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("cli: verification subcommands") {
    CHECK(cli::run({"verify", "--check", "veech", "--n", "5"}) == 0);
    CHECK(cli::run({"verify", "--check", "decomp", "--n", "5"}) == 0);
    CHECK(cli::run({"verify", "--check", "trapezoid"}) == 0);
    CHECK(cli::run({"verify", "--check", "circle", "--n", "0"}) == 0);
}

TEST_CASE("cli: cylinder census and decomposition") {
    std::string path = tmp_path("flatsurf_test_sq2.json");
    REQUIRE(cli::run({"build", "--family", "square", "--out", path}) == 0);
    std::string out = tmp_path("flatsurf_cyl.csv");
    REQUIRE(cli::run({"cylinders", path, "--length", "2.5", "--out", out}) == 0);
    std::string csv = read_file(out);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 17);  // header + 16 rows
    std::string dout = tmp_path("flatsurf_dec.csv");
    REQUIRE(cli::run({"decompose", path, "--dir", "1,0", "--budget", "5", "--out", dout}) == 0);
    std::string dec_csv = read_file(dout);
    CHECK(std::count(dec_csv.begin(), dec_csv.end(), '\n') == 2);
    std::remove(path.c_str());
    std::remove(out.c_str());
    std::remove(dout.c_str());
}

TEST_CASE("cli: non-periodic direction reports and fails") {
    std::string path = tmp_path("flatsurf_test_sq3.json");
    REQUIRE(cli::run({"build", "--family", "square", "--out", path}) == 0);
    CHECK(cli::run({"decompose", path, "--dir", "1,1.41421356237", "--budget", "10"}) == 1);
    std::remove(path.c_str());
}

TEST_CASE("cli: usage errors exit with 2") {
    CHECK(cli::run({"nonsense"}) == 2);
    CHECK(cli::run({"build"}) == 2);
    CHECK(cli::run({}) == 2);
}

TEST_CASE("cli: invalid surface exits with 1") {
    std::string path = tmp_path("flatsurf_test_bad.json");
    write_file(path,
               "{\"name\": \"bad\", \"polygons\": [{\"vertices\": [[0,0],[1,0],[1,1],[0,1]]}], "
               "\"gluings\": [[[0,0],[0,2]]]}");
    CHECK(cli::run({"validate", path}) == 1);
    std::remove(path.c_str());
}
