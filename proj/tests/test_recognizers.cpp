#include <doctest.h>

#include "graph_energy/enumerate.hpp"
#include "graph_energy/families.hpp"
#include "graph_energy/recognizers.hpp"
#include "oracles.hpp"

using namespace graph_energy;

namespace {

Graph join(const Graph& a, const Graph& b) {
    return complement(disjoint_union(complement(a), complement(b)));
}

// Independent restatement of the type (a) condition for vertex v.
bool type_a_at(const Graph& g, int v) {
    for (int x = 0; x < g.order(); ++x)
        for (int y = x + 1; y < g.order(); ++y) {
            if (x == v || y == v) continue;
            const bool both_in = g.adjacent(v, x) && g.adjacent(v, y);
            const bool both_out = !g.adjacent(v, x) && !g.adjacent(v, y);
            if (both_in && !g.adjacent(x, y)) return false;
            if (both_out && g.adjacent(x, y)) return false;
        }
    return true;
}

}  // namespace

TEST_SUITE("recognizers") {

TEST_CASE("unions of cliques") {
    CHECK(is_union_of_complete_graphs(disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), Graph(1))));
    CHECK_FALSE(is_union_of_complete_graphs(path_graph(3)));
    CHECK(is_union_of_complete_graphs(Graph(0)));
}

TEST_CASE("complete multipartite") {
    CHECK(is_complete_multipartite(cycle_graph(4)) == std::vector<int>{2, 2});
    CHECK(is_complete_multipartite(complete_graph(3)) == std::vector<int>{1, 1, 1});
    CHECK_FALSE(is_complete_multipartite(path_graph(4)).has_value());
}

TEST_CASE("type (a)") {
    const auto star = finck_type_a(star_graph(3));
    REQUIRE(star.has_value());
    CHECK(star->v == 1);
    CHECK(star->clique == std::vector<int>{0});
    CHECK(star->independent == std::vector<int>{2, 3});
    const auto k5 = finck_type_a(complete_graph(5));
    REQUIRE(k5.has_value());
    CHECK(k5->independent.empty());
    CHECK_FALSE(finck_type_a(cycle_graph(5)).has_value());
}

TEST_CASE("type (b)") {
    const auto c5 = finck_type_b(cycle_graph(5));
    REQUIRE(c5.has_value());
    CHECK(c5->clique.empty());
    CHECK(c5->independent.empty());
    const auto joined = finck_type_b(join(cycle_graph(5), complete_graph(2)));
    REQUIRE(joined.has_value());
    CHECK(joined->clique.size() == 2);
    CHECK_FALSE(finck_type_b(complete_graph(6)).has_value());
    CHECK_FALSE(finck_type_b(path_graph(4)).has_value());
}

TEST_CASE("witnesses are sound and type (a) is complete") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : all_graphs({.n = n})) {
            const auto a = finck_type_a(g);
            bool any = false;
            for (int v = 0; v < n; ++v) any = any || type_a_at(g, v);
            CHECK(a.has_value() == any);
            if (a) {
                CHECK(verify_witness(g, *a));
                CHECK(type_a_at(g, a->v));
            }
            if (const auto b = finck_type_b(g)) {
                CHECK(verify_witness(g, *b));
                CHECK(oracle::isomorphic(induced_subgraph(g, b->cycle), cycle_graph(5)));
            }
        }
}

TEST_CASE("verify_witness rejects tampered witnesses") {
    auto a = *finck_type_a(star_graph(3));
    a.independent.push_back(0);
    CHECK_FALSE(verify_witness(star_graph(3), a));
    auto b = *finck_type_b(cycle_graph(5));
    b.cycle = {0, 1, 2, 3, 3};
    CHECK_FALSE(verify_witness(cycle_graph(5), b));
}

TEST_CASE("low-energy classification") {
    CHECK_FALSE(classify_theorem_ab(a_family(7, 4)).has_value());
    const auto b5 = classify_theorem_ab(disjoint_union(b_family(5), Graph(3)));
    REQUIRE(b5.has_value());
    CHECK(b5->family == LowEnergyFamily::B);
    CHECK(b5->params == std::vector<int>{5});
    CHECK(b5->isolated == 3);
    CHECK_FALSE(classify_theorem_ab(a_family(9, 5)).has_value());
    for (int t : {1, 2, 8}) {
        const auto a9 = classify_theorem_ab(a_family(9, t));
        REQUIRE(a9.has_value());
        CHECK(a9->family == LowEnergyFamily::A);
    }
    const auto h5 = classify_theorem_ab(named_small_graph(SmallGraphId::H5));
    REQUIRE(h5.has_value());
    CHECK(h5->family == LowEnergyFamily::H5);
    const auto k4 = classify_theorem_ab(complete_graph(4));
    REQUIRE(k4.has_value());
    CHECK(k4->family == LowEnergyFamily::Complete);
    const auto edgeless = classify_theorem_ab(Graph(3));
    REQUIRE(edgeless.has_value());
    CHECK(edgeless->params == std::vector<int>{1});
    CHECK(edgeless->isolated == 2);
    CHECK_FALSE(classify_theorem_ab(cycle_graph(5)).has_value());
    CHECK(to_string(LowEnergyFamily::A) == "A_nt");
}

TEST_CASE("classification record") {
    const auto r = classify(cycle_graph(4));
    CHECK_FALSE(r.is_union_of_cliques);
    CHECK(r.multipartite_parts == std::vector<int>{2, 2});
    CHECK(r.finck_a.has_value() == false);
    CHECK_FALSE(r.theorem_ab_exception.has_value());
}

}  // TEST_SUITE
