#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graph_energy/enumerate.hpp"
#include "graph_energy/errors.hpp"
#include "graph_energy/families.hpp"
#include "graph_energy/graph6.hpp"
#include "oracles.hpp"

using namespace graph_energy;

TEST_SUITE("graph6") {

TEST_CASE("hand-encoded strings") {
    CHECK(parse_graph6("A_") == complete_graph(2));
    CHECK(parse_graph6("A?") == Graph(2));
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK(parse_graph6(">>graph6<<Bw") == complete_graph(3));
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(emit_graph6(complete_graph(2)) == "A_");
    CHECK(emit_graph6(Graph(1)) == "@");
    CHECK(emit_graph6(complete_graph(3)) == "Bw");
}

TEST_CASE("malformed input names the byte offset") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);
    CHECK_THROWS_AS(parse_graph6("A__"), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?@A"), ParseError);
    CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
    try {
        parse_graph6("Bx");
        FAIL("padding accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("byte 1") != std::string::npos);
    }
}

TEST_CASE("size limit") {
    CHECK_NOTHROW(emit_graph6(Graph(62)));
    CHECK_THROWS_AS(emit_graph6(Graph(63)), CapacityError);
}

TEST_CASE("round trip on every graph with six vertices") {
    const auto graphs = all_graphs({.n = 6});
    REQUIRE(graphs.size() == 156);
    for (const Graph& g : graphs) {
        const std::string s = emit_graph6(g);
        CHECK(parse_graph6(s) == g);
        CHECK(emit_graph6(parse_graph6(s)) == s);
    }
}

TEST_CASE("round trip on random larger graphs") {
    std::mt19937 rng(3);
    for (int n : {7, 12, 33, 62}) {
        const Graph g = oracle::random_graph(rng, n, 0.5);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    }
}

TEST_CASE("nonzero padding is always rejected") {
    // Orders whose pair count is not a multiple of six leave padding bits.
    std::mt19937 rng(29);
    for (int n = 2; n <= 20; ++n) {
        const int pairs = n * (n - 1) / 2;
        const int pad = (6 - pairs % 6) % 6;
        if (pad == 0) continue;
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const std::string s = emit_graph6(g);
        for (int bit = 0; bit < pad; ++bit) {
            std::string bad = s;
            bad.back() = static_cast<char>(((bad.back() - 63) | (1 << bit)) + 63);
            CHECK_THROWS_AS(parse_graph6(bad), ParseError);
        }
    }
}

TEST_CASE("catalog reader") {
    std::istringstream two("@\nA_\n");
    CatalogReader r(two);
    CHECK(r.next() == Graph(1));
    CHECK(r.next() == complete_graph(2));
    CHECK_FALSE(r.next().has_value());

    std::istringstream empty("");
    CHECK_FALSE(CatalogReader(empty).next().has_value());

    std::istringstream commented("# c\r\n\r\nBw\r\n");
    CatalogReader c(commented);
    CHECK(c.next() == complete_graph(3));
    CHECK_FALSE(c.next().has_value());

    std::istringstream broken("@\nA_\nBz\n");
    CatalogReader b(broken);
    b.next();
    b.next();
    try {
        b.next();
        FAIL("bad line accepted");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 3", 0) == 0);
    }
}

TEST_CASE("catalog from file") {
    const auto path = std::filesystem::temp_directory_path() / "graph_energy_catalog_test.g6";
    {
        std::ofstream out(path);
        out << "# header\n@\nA_\n";
    }
    const auto graphs = read_catalog(path);
    std::filesystem::remove(path);
    CHECK(graphs == std::vector<Graph>{Graph(1), complete_graph(2)});
    CHECK_THROWS(read_catalog(path));
}

}  // TEST_SUITE
