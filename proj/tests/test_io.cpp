#include <sstream>
#include <string>

#include "doctest.h"
#include "fibcube/io.hpp"

using namespace fibcube;

TEST_CASE("canonical cube form is byte-stable") {
    const CubeParams params{Family::O, 2, 2, 4};
    const std::string expected =
        "# fibcube family=O p=2 r=2 n=4\n"
        "8 10\n"
        "0000\n"
        "0001\n"
        "0010\n"
        "0100\n"
        "0101\n"
        "1000\n"
        "1001\n"
        "1010\n"
        "0 1\n"
        "0 2\n"
        "0 3\n"
        "0 5\n"
        "1 4\n"
        "1 6\n"
        "2 7\n"
        "3 4\n"
        "5 6\n"
        "5 7\n";
    CHECK(write_edge_list(build_cube(params), params) == expected);
    CHECK(write_edge_list(build_cube(params), params) == expected);

    const CubeParams iparams{Family::I, 3, 2, 4};
    const std::string itext = write_edge_list(build_cube(iparams), iparams);
    CHECK(itext.rfind("# fibcube family=I p=3 r=2 n=4\n", 0) == 0);
}

TEST_CASE("edge list round trips") {
    const CubeParams params{Family::O, 2, 1, 5};
    const Graph g = build_cube(params);
    std::istringstream in(write_edge_list(g, params));
    const LoadedGraph loaded = read_edge_list(in);
    REQUIRE(loaded.params.has_value());
    CHECK(loaded.params->family == Family::O);
    CHECK(loaded.params->p == 2);
    CHECK(loaded.params->r == 1);
    CHECK(loaded.params->n == 5);
    CHECK(loaded.graph.edges() == g.edges());
    CHECK(loaded.graph.labels() == g.labels());

    // headerless, unlabeled
    const Graph plain = cycle_graph(5);
    std::istringstream pin(write_edge_list(plain));
    const LoadedGraph ploaded = read_edge_list(pin);
    CHECK_FALSE(ploaded.params.has_value());
    CHECK_FALSE(ploaded.graph.labeled());
    CHECK(ploaded.graph.edges() == plain.edges());

    // headerless, labeled
    std::istringstream lin(write_edge_list(g));
    CHECK(read_edge_list(lin).graph.labels() == g.labels());
}

TEST_CASE("length-zero cube serializes through the empty label") {
    const CubeParams params{Family::O, 2, 2, 0};
    const Graph g = build_cube(params);
    const std::string text = write_edge_list(g, params);
    CHECK(text == "# fibcube family=O p=2 r=2 n=0\n1 0\n\n");
    std::istringstream in(text);
    const LoadedGraph loaded = read_edge_list(in);
    CHECK(loaded.graph.vertex_count() == 1);
    CHECK(loaded.graph.label(0).str() == "");
}

TEST_CASE("malformed input is rejected") {
    std::istringstream empty("");
    CHECK_THROWS_AS(read_edge_list(empty), std::runtime_error);
    std::istringstream junk("# fibcube family=X p=1 r=1 n=1\n");
    CHECK_THROWS_AS(read_edge_list(junk), std::runtime_error);
    std::istringstream short_body("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(short_body), std::runtime_error);
    std::istringstream bad_counts("-1 0\n");
    CHECK_THROWS_AS(read_edge_list(bad_counts), std::runtime_error);
}

TEST_CASE("dot export names vertices by label") {
    const Graph g = build_cube({Family::O, 2, 1, 2});
    const std::string dot = write_dot(g);
    CHECK(dot.find("graph fibcube {") == 0);
    CHECK(dot.find("\"00\";") != std::string::npos);
    CHECK(dot.find("\"00\" -- \"01\";") != std::string::npos);
    CHECK(dot.back() == '\n');

    const std::string plain = write_dot(path_graph(2));
    CHECK(plain.find("\"0\" -- \"1\";") != std::string::npos);
}

TEST_CASE("factorization text lists factors then coordinates") {
    const Graph q2 = build_cube({Family::O, 1, 2, 2});
    const std::string text = write_factorization(factorize(q2));
    const std::string expected =
        "factors=2\n"
        "2 1\n"
        "00\n"
        "01\n"
        "0 1\n"
        "2 1\n"
        "00\n"
        "10\n"
        "0 1\n"
        "0 0 0\n"
        "1 1 0\n"
        "2 0 1\n"
        "3 1 1\n";
    CHECK(text == expected);
}

TEST_CASE("violation report lines") {
    CHECK(report_line(ThetaViolation{3, Edge{0, 1}, Edge{4, 5}}) ==
          "coord=3 0-1 4-5");
    CHECK(report_line(ColorThetaViolation{1, Edge{2, 3}, Edge{6, 7}}) ==
          "color=1 2-3 6-7");
}
