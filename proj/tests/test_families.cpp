#include <doctest.h>

#include "graph_energy/canonical.hpp"
#include "graph_energy/errors.hpp"
#include "graph_energy/exact.hpp"
#include "graph_energy/families.hpp"
#include "graph_energy/graph6.hpp"
#include "graph_energy/spectrum.hpp"
#include "oracles.hpp"

using namespace graph_energy;

TEST_SUITE("families") {

TEST_CASE("edge counts") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(complete_graph(n).size() == n * (n - 1) / 2);
        CHECK(path_graph(n).size() == n - 1);
        CHECK(star_graph(n).size() == n);
        CHECK(cocktail_party(n).size() == 2 * n * (n - 1));
        CHECK(b_family(n).size() == n * (n - 1) / 2 + 2);
        for (int t = 1; t <= n && n >= 2; ++t) CHECK(a_family(n, t).size() == n * (n - 1) / 2 + t);
        if (n >= 3) CHECK(cycle_graph(n).size() == n);
    }
    CHECK(complete_multipartite({2, 3, 4}).size() == 6 + 8 + 12);
    CHECK(matching_union(3, 2).order() == 8);
    CHECK(matching_union(3, 2).size() == 3);
}

TEST_CASE("bad parameters") {
    CHECK_THROWS_AS(cycle_graph(2), InputError);
    CHECK_THROWS_AS(cocktail_party(0), InputError);
    CHECK_THROWS_AS(b_family(0), InputError);
    CHECK_THROWS_AS(a_family(3, 0), InputError);
    CHECK_THROWS_AS(a_family(3, 4), InputError);
    CHECK_THROWS_AS(matching_union(-1, 0), InputError);
    const std::vector<int> wrong_length{1, 0};
    CHECK_THROWS_AS(generalized_line_graph(path_graph(3), wrong_length), InputError);
}

TEST_CASE("complete multipartite") {
    CHECK(complete_multipartite({1, 1, 1}) == complete_graph(3));
    CHECK(rank_exact(complete_multipartite({2, 5})) == 2);
    const auto k113 = eigenvalues(complete_multipartite({1, 1, 3}));
    CHECK(std::abs(k113.lambda(5) + 2) <= 1e-8);
}

TEST_CASE("cocktail party") {
    CHECK(cocktail_party(1) == Graph(2));
    CHECK(oracle::isomorphic(cocktail_party(2), cycle_graph(4)));
    const std::vector<int> square{0, 2, 1, 3};
    for (int l = 2; l <= 5; ++l) CHECK(oracle::isomorphic(induced_subgraph(cocktail_party(l), square), cycle_graph(4)));
}

TEST_CASE("line graphs") {
    CHECK(line_graph(path_graph(4)) == path_graph(3));
    CHECK(line_graph(complete_graph(3)) == complete_graph(3));
    CHECK(line_graph(star_graph(3)) == complete_graph(3));
    std::mt19937 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(rng, 2 + trial % 8, 0.5);
        const std::vector<int> zeros(static_cast<std::size_t>(g.order()), 0);
        CHECK(generalized_line_graph(g, zeros) == line_graph(g));
        std::vector<int> a(static_cast<std::size_t>(g.order()));
        for (int& x : a) x = static_cast<int>(rng() % 3);
        const Graph gl = generalized_line_graph(g, a);
        if (gl.order() > 0) CHECK(eigenvalues(gl).smallest() >= -2 - 1e-7);
    }
}

TEST_CASE("A_{n,n-1} as a generalized line graph") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> a(static_cast<std::size_t>(n), 0);
        a[0] = 1;
        CHECK(is_isomorphic(generalized_line_graph(star_graph(n - 1), a), a_family(n, n - 1)));
        CHECK(rank_exact(a_family(n, n - 1)) == n);
    }
}

TEST_CASE("A and B families") {
    CHECK(a_family(3, 1) == Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}));
    CHECK(std::abs(energy(a_family(7, 4)) - 14) <= 1e-6);
    CHECK(a_family(4, 4) == complete_graph(5));
    CHECK(oracle::isomorphic(b_family(1), star_graph(2)));
    CHECK(eigenvalues(b_family(4)).smallest() < -1.8);
    for (int n = 2; n <= 12; ++n) CHECK(multiplicity(eigenvalues(b_family(n)), -1.0, 1e-6) >= n - 2);
    for (int n = 8; n <= 14; ++n)
        for (int t : {1, 2}) CHECK(eigenvalues(a_family(n, t)).positive_count == 2);
}

TEST_CASE("small named graphs") {
    const auto h1 = eigenvalues(named_small_graph(SmallGraphId::H1));
    CHECK(h1.lambda(6) < -1.8);
    CHECK(h1.lambda(5) < -1.3);
    const auto h2 = eigenvalues(named_small_graph(SmallGraphId::H2));
    CHECK(h2.lambda(6) < -1.7);
    CHECK(h2.lambda(5) < -1.6);
    CHECK(energy(named_small_graph(SmallGraphId::H5)) < 6);
    // H5: a triangle with pendants at two different vertices.
    const Graph h5 = named_small_graph(SmallGraphId::H5);
    std::vector<int> degrees;
    for (int v = 0; v < 5; ++v) degrees.push_back(h5.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(named_small_graph(SmallGraphId::HAux).order() == 5);
}

TEST_CASE("spec strings") {
    CHECK(FamilySpec::parse("K:4").build() == complete_graph(4));
    CHECK(FamilySpec::parse("family:A:7,4").build() == a_family(7, 4));
    CHECK(FamilySpec::parse("KM:1,1,3").build() == complete_multipartite({1, 1, 3}));
    CHECK(FamilySpec::parse("Haux").build() == named_small_graph(SmallGraphId::HAux));
    CHECK(FamilySpec::parse("L:Bw").build() == complete_graph(3));
    CHECK(FamilySpec::parse("GL:Bw:0,0,0").build() == complete_graph(3));
    CHECK(FamilySpec::parse("M:2,1").build() == matching_union(2, 1));
    for (const char* text : {"K:4", "A:7,4", "KM:1,1,3", "H3", "GL:Bw:1,0,0", "CP:3", "S:4", "B:5"})
        CHECK(FamilySpec::parse(FamilySpec::parse(text).to_string()).build() == FamilySpec::parse(text).build());
    CHECK_THROWS_AS(FamilySpec::parse("Q:3"), InputError);
    CHECK_THROWS_AS(FamilySpec::parse("K:x"), InputError);
    CHECK_THROWS_AS(FamilySpec::parse("K"), InputError);
    CHECK_THROWS_AS(FamilySpec::parse("A:3").build(), InputError);
}

}  // TEST_SUITE
