#include <doctest.h>

#include "graph_energy/enumerate.hpp"
#include "graph_energy/exact.hpp"
#include "graph_energy/graph6.hpp"
#include "graph_energy/recognizers.hpp"
#include "graph_energy/spectrum.hpp"
#include "graph_energy/tolerances.hpp"
#include "oracles.hpp"

using namespace graph_energy;

namespace {

int triangles(const Graph& g) {
    int t = 0;
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            for (int k = j + 1; k < g.order(); ++k) t += g.adjacent(i, j) && g.adjacent(j, k) && g.adjacent(i, k);
    return t;
}

template <typename F>
void for_each_graph(int max_n, F&& f) {
    for (int n = 1; n <= max_n; ++n)
        for (const Graph& g : all_graphs({.n = n})) f(g);
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("trace identities") {
    for_each_graph(7, [](const Graph& g) {
        const auto spec = eigenvalues(g);
        double s1 = 0, s2 = 0, s3 = 0;
        for (double x : spec.eigenvalues) {
            s1 += x;
            s2 += x * x;
            s3 += x * x * x;
        }
        CHECK(std::abs(s1) <= 1e-9);
        CHECK(std::abs(s2 - 2 * g.size()) <= 1e-9);
        CHECK(std::abs(s3 - 6 * triangles(g)) <= 1e-8);
    });
}

TEST_CASE("rank consistency") {
    for_each_graph(7, [](const Graph& g) {
        const auto spec = eigenvalues(g);
        int nonzero = 0;
        for (double x : spec.eigenvalues) nonzero += std::abs(x) > kTolerances.zero_eigenvalue ? 1 : 0;
        const auto p = char_poly(g);
        CHECK(rank_exact(g) == nonzero);
        CHECK(p.rank == nonzero);
        if (g.order() >= 2) CHECK(p.coeffs[static_cast<std::size_t>(g.order() - 2)] == -g.size());
    });
}

TEST_CASE("complement involution and codec") {
    for_each_graph(7, [](const Graph& g) {
        CHECK(complement(complement(g)) == g);
        CHECK(parse_graph6(emit_graph6(g)) == g);
    });
}

TEST_CASE("interlacing on every vertex-deleted subgraph") {
    for_each_graph(7, [](const Graph& g) {
        for (int drop = 0; drop < g.order(); ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < g.order(); ++v)
                if (v != drop) keep.push_back(v);
            CHECK(check_interlacing(g, keep));
        }
    });
}

TEST_CASE("Finck witnesses survive complementation") {
    for_each_graph(7, [](const Graph& g) {
        const Graph h = complement(g);
        CHECK(finck_type_a(g).has_value() == finck_type_a(h).has_value());
        CHECK(finck_type_b(g).has_value() == finck_type_b(h).has_value());
    });
}

}  // TEST_SUITE
