#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

Graph complete_graph(int n);
Graph path_graph(int n);
/// n >= 3.
Graph cycle_graph(int n);
/// Star K_{1,t}: center 0, leaves 1..t.
Graph star_graph(int t);

/// K_{r_1,...,r_t}; vertices grouped by part in the given order.
Graph complete_multipartite(std::span<const int> parts);
inline Graph complete_multipartite(std::initializer_list<int> parts) {
    return complete_multipartite(std::span<const int>(parts.begin(), parts.size()));
}

/// CP(n): K_{2n} without the matching {2i, 2i+1}.
Graph cocktail_party(int n);

/// One vertex per edge of g (edges in lexicographic order).
Graph line_graph(const Graph& g);

/// L(g; a_1..a_n): L(g) first, then CP(a_i) blocks in index order, every
/// vertex of CP(a_i) joined to the line-graph vertices of edges at v_i.
Graph generalized_line_graph(const Graph& g, std::span<const int> a);

/// A_{n,t}: K_n on 0..n-1 plus vertex n adjacent to 0..t-1.
/// Defined for 1 <= t <= n-1; t == n is accepted and yields K_{n+1}.
Graph a_family(int n, int t);

/// B_n: K_n on 0..n-1 plus vertices n and n+1 pendant at 0.
Graph b_family(int n);

/// (r_pairs)K_2 followed by s_isolated isolated vertices.
Graph matching_union(int r_pairs, int s_isolated);

enum class SmallGraphId { H1, H2, H3, H4, H5, HAux };

/// The six-vertex (five for H5 and HAux) graphs used in the classification of
/// low-energy graphs. HAux is H2 with one pendant vertex removed.
Graph named_small_graph(SmallGraphId id);

enum class FamilyId {
    Complete,
    Path,
    Cycle,
    CompleteMultipartite,
    Star,
    CocktailParty,
    ANt,
    BN,
    H1,
    H2,
    H3,
    H4,
    H5,
    HAux,
    LineGraph,
    GeneralizedLineGraph,
    MatchingUnion,
};

/// A named family member. Textual form `[family:]<id>[:<params>]`:
///   K:n  P:n  C:n  KM:r1,r2,...  S:t  CP:n  A:n,t  B:n  M:r,s
///   H1 H2 H3 H4 H5 Haux  L:<graph6>  GL:<graph6>:a1,...,an
struct FamilySpec {
    FamilyId id = FamilyId::Complete;
    std::vector<int> params;
    /// Base graph for line-graph families.
    std::optional<Graph> base;

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
    Graph build() const;
};

}  // namespace graph_energy
