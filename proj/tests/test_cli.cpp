/* Apache License, Version 2.0 */
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polylink/cli.hpp"
#include "polylink/errors.hpp"
#include "polylink/polygon_io.hpp"
#include "polylink/svg.hpp"
#include "support/testgen.hpp"

using namespace polylink;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("/tmp/polylink_test_" + name) {
        std::ofstream out(path);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

struct RunResult {
    int code;
    std::string out, err;
};

RunResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kSquare = "4\n0 0\n1 0\n1 1\n0 1\n";

}  // namespace

TEST_CASE("polygon file parsing spec cases") {
    SimplePolygon sq = parse_polygon_file("4\n0 0\n1 0\n1 1\n0 1");
    CHECK(sq.size() == 4);

    CHECK_THROWS_AS(parse_polygon_file("3\n0 0\n1 0\n2 0"), ValidationError);

    SimplePolygon small = parse_polygon_file("4\n0 0\n1/2 0\n1/2 1/2\n0 1/2");
    CHECK(small.vertex(1).x == Rat(1, 2));

    // comments and blank lines
    SimplePolygon commented =
        parse_polygon_file("# a square\n\n4\n0 0  # origin\n1 0\n1 1\n0 1\n# done\n");
    CHECK(commented.size() == 4);

    CHECK_THROWS_AS(parse_polygon_file(""), ParseError);
    CHECK_THROWS_AS(parse_polygon_file("4\n0 0\n1 0\n1 1"), ParseError);
    CHECK_THROWS_AS(parse_polygon_file("2\n0 0\n1 0"), ValidationError);
    CHECK_THROWS_AS(parse_polygon_file("3\n0 zero\n1 0\n0 1"), ParseError);
}

TEST_CASE("polygon files round-trip exactly") {
    SplitMix64 rng(83);
    for (int t = 0; t < 10; ++t) {
        SimplePolygon P = testgen::corpus_polygon(t, 12, rng);
        SimplePolygon Q = parse_polygon_file(format_polygon_file(P));
        REQUIRE(P.size() == Q.size());
        for (std::size_t i = 0; i < P.size(); ++i) CHECK(P.vertex(i) == Q.vertex(i));
    }
}

TEST_CASE("svg output shape") {
    Scene scene{testgen::unit_square(), {}, {}};
    std::string svg = emit_svg(scene);
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("viewBox") != std::string::npos);
    CHECK(svg.find("Z\"/>") != std::string::npos);

    Scene with_path{testgen::unit_square(),
                    {{testgen::pt(1, 2, 1, 2), "a"}},
                    {{Polyline({testgen::pt(1, 4, 1, 4), testgen::pt(3, 4, 1, 4)}), "p"}}};
    std::string svg2 = emit_svg(with_path);
    CHECK(svg2.find("<polyline") != std::string::npos);
    CHECK(svg2.find("<circle") != std::string::npos);
}

TEST_CASE("cli validate and classify") {
    TempFile f("sq.poly", kSquare);
    RunResult r = cli({"validate", f.path});
    CHECK(r.code == 0);
    CHECK(r.out == "simple n=4\n");

    r = cli({"classify", f.path, "1/2", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "interior\n");

    r = cli({"classify", f.path, "1/2", "0"});
    CHECK(r.code == 0);
    CHECK(r.out == "boundary edge 1\n");

    r = cli({"classify", f.path, "5", "5"});
    CHECK(r.out == "exterior\n");
}

TEST_CASE("cli rejects invalid input with exit 1 and usage with exit 2") {
    TempFile bad("bad.poly", "3\n0 0\n1 0\n2 0\n");
    CHECK(cli({"validate", bad.path}).code == 1);
    CHECK(cli({"validate", "/nonexistent/file.poly"}).code == 1);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"classify"}).code == 2);
    CHECK(cli({"linkdist", "x", "0", "0", "1", "1", "--domain", "mid"}).code == 2);
    CHECK(cli({}).code == 2);
}

TEST_CASE("cli visible lists indices") {
    TempFile f("sq2.poly", kSquare);
    RunResult r = cli({"visible", f.path, "1/2", "1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "0 1 2 3\n");
}

TEST_CASE("cli path emits a one-line certificate") {
    TempFile f("sq3.poly", kSquare);
    RunResult r = cli({"path", f.path, "1/4", "1/4", "3/4", "3/4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("links 1 bound 2 case direct path 1/4,1/4 3/4,3/4", 0) == 0);

    RunResult rn = cli({"path", f.path, "1/4", "1/4", "3/4", "3/4", "--naive"});
    CHECK(rn.code == 0);
    CHECK(rn.out.find("case naive") != std::string::npos);

    RunResult bad = cli({"path", f.path, "1/4", "1/4", "5", "5"});
    CHECK(bad.code == 1);
}

TEST_CASE("cli linkdist and poldiam") {
    TempFile f("sq4.poly", kSquare);
    RunResult r = cli({"linkdist", f.path, "-1", "1/2", "2", "1/2", "--domain", "ext"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("distance 2 ", 0) == 0);

    r = cli({"poldiam", f.path, "--domain", "int", "--budget", "10", "--seed", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("poldiam-lb 1 ", 0) == 0);
}

TEST_CASE("cli gen emits a parseable polygon with witness comments") {
    RunResult r = cli({"gen", "spiral", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("# int-witness ") != std::string::npos);
    CHECK(r.out.find("# ext-witness ") != std::string::npos);
    SimplePolygon P = parse_polygon_file(r.out);
    CHECK(P.size() == 6);
}

TEST_CASE("cli runs are deterministic byte for byte") {
    TempFile f("sq5.poly", kSquare);
    std::vector<std::vector<std::string>> script = {
        {"classify", f.path, "1/2", "1/2"},
        {"path", f.path, "1/4", "1/4", "3/4", "3/4"},
        {"linkdist", f.path, "-1", "1/2", "2", "1/2", "--domain", "ext", "--seed", "9"},
        {"poldiam", f.path, "--domain", "ext", "--budget", "8", "--seed", "9"},
        {"gen", "spiral", "7"},
    };
    for (const auto& args : script) {
        RunResult r1 = cli(args);
        RunResult r2 = cli(args);
        CHECK(r1.code == r2.code);
        CHECK(r1.out == r2.out);
    }
}
