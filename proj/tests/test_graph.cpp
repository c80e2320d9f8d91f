#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "svo/error.hpp"
#include "svo/graph.hpp"

using namespace svo;

namespace {

vertex_set vs(std::initializer_list<int> v) { return vertex_set::of(std::vector<int>(v)); }

std::string parse_error_of(std::string_view text) {
    try {
        parse_edge_list(text);
    } catch (const input_error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("parse the C5-with-chord edge list") {
    const graph g = parse_edge_list("5 6\n0 1\n1 2\n2 3\n3 4\n4 0\n1 3\n");
    CHECK(g == test::c5_chord());
    CHECK(g.edge_count() == 6);
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(0, 2));
}

TEST_CASE("parse the edgeless singleton") {
    const graph g = parse_edge_list("1 0\n");
    CHECK(g.order() == 1);
    CHECK(g.neighbors(0).empty());
}

TEST_CASE("duplicate edges collapse") {
    const graph g = parse_edge_list("3 2\n0 1\n1 0\n");
    CHECK(g == test::p2_plus_isolated());
    CHECK(g.edge_count() == 1);
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
    const graph g = parse_edge_list("# header comment\r\n\r\n3 2\r\n# edge one\r\n0 1\r\n  1 2  \r\n");
    CHECK(g == test::p3());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK(parse_error_of("3 1\n0 3\n").find("line 2") != std::string::npos);
    CHECK(parse_error_of("3 1\n0 3\n").find("out of range") != std::string::npos);
    CHECK(parse_error_of("3 1\n# c\n2 2\n").find("line 3") != std::string::npos);
    CHECK(parse_error_of("3 1\n# c\n2 2\n").find("self-loop") != std::string::npos);
    CHECK(parse_error_of("65 0\n").find("line 1") != std::string::npos);
    CHECK(parse_error_of("0 0\n").find("outside [1, 64]") != std::string::npos);
    CHECK(parse_error_of("3 1\n0 x\n").find("line 2") != std::string::npos);
    CHECK(parse_error_of("3 1 7\n").find("line 1") != std::string::npos);
    CHECK(parse_error_of("3 2\n0 1\n").find("unexpected end") != std::string::npos);
    CHECK(parse_error_of("3 1\n0 1\n1 2\n").find("line 3") != std::string::npos);
    CHECK(parse_error_of("").find("empty") != std::string::npos);
}

TEST_CASE("the graph constructor rejects bad edges") {
    const std::vector<edge> loop{{1, 1}};
    const std::vector<edge> out{{0, 5}};
    CHECK_THROWS_AS(graph(3, loop), input_error);
    CHECK_THROWS_AS(graph(3, out), input_error);
    CHECK_THROWS_AS(graph(0), input_error);
    CHECK_THROWS_AS(graph(65), input_error);
    CHECK_NOTHROW(graph(64));
}

TEST_CASE("data files parse") {
    CHECK(read_edge_list_file(test::data_path("c5chord.txt")) == test::c5_chord());
    CHECK(read_edge_list_file(test::data_path("p3.txt")) == test::p3());
    CHECK(read_edge_list_file(test::data_path("k1.txt")).order() == 1);
    CHECK_THROWS_AS(read_edge_list_file(test::data_path("missing.txt")), input_error);
}

TEST_CASE("open neighborhood") {
    const graph g = test::c5_chord();
    CHECK(open_neighborhood(g, vs({1})) == vs({0, 2, 3}));
    CHECK(open_neighborhood(g, vertex_set{}).empty());
    CHECK(open_neighborhood(test::p3(), vs({0, 2})) == vs({1}));
    // Members adjacent to another member stay in the open neighborhood.
    CHECK(open_neighborhood(g, vs({1, 3})) == vs({0, 1, 2, 3, 4}));
}

TEST_CASE("a values from the worked example") {
    const graph g = test::c5_chord();
    CHECK(a_value(g, vertex_set{}) == 5);
    CHECK(a_value(g, vs({0})) == 2);
    CHECK(a_value(g, vs({1})) == 1);
    CHECK(a_value(g, vs({2})) == 2);
    CHECK(a_value(g, vs({3})) == 1);
    CHECK(a_value(g, vs({4})) == 2);
    CHECK(a_value(g, vs({0, 2})) == 0);
    CHECK(a_value(g, vs({0, 3})) == 0);
}

TEST_CASE("independence") {
    const graph g = test::c5_chord();
    CHECK(is_independent(g, vs({0, 2})));
    CHECK_FALSE(is_independent(g, vs({1, 3})));
    CHECK(is_independent(g, vertex_set{}));
}

TEST_CASE("connectivity") {
    CHECK(is_connected(test::c5_chord()));
    CHECK_FALSE(is_connected(test::p2_plus_isolated()));
    CHECK(is_connected(graph(1)));
    CHECK_FALSE(is_connected(graph(2)));
}

TEST_CASE("deleting vertices relabels in order") {
    const graph g = test::c5_chord();
    const graph h = g.without(vs({4}));
    const std::vector<edge> expected{{0, 1}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(h == graph(4, expected));
    CHECK(g.without(vertex_set{}) == g);
    CHECK_THROWS_AS(g.without(g.vertices()), input_error);
}

TEST_CASE("property: a(I) = n - |I ∪ N(I)| and a is antitone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const graph g = test::random_graph(n, 0.3, rng);
        const vertex_set i = test::random_subset(n, rng);
        // Independent set-union route.
        vertex_set covered = i;
        for (int v = 0; v < n; ++v)
            for (int u : i)
                if (g.has_edge(u, v)) covered = covered.with(v);
        CHECK(a_value(g, i) == n - covered.size());

        const vertex_set j = i | test::random_subset(n, rng);
        CHECK(a_value(g, i) >= a_value(g, j));
        if (!i.empty()) CHECK(n - a_value(g, i) >= 1);
    }
}

TEST_CASE("write then parse reproduces the graph") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const graph g = test::random_graph(n, 0.1, rng);
        std::ostringstream out;
        write_edge_list(out, g);
        CHECK(parse_edge_list(out.str()) == g);
    }
}
