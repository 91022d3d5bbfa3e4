#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

bool is_clique(const Graph& g, const std::vector<int>& vertices);
bool is_independent(const Graph& g, const std::vector<int>& vertices);

/// Every connected component induces a complete graph.
bool is_union_of_complete_graphs(const Graph& g);

/// Part sizes (ordered by smallest vertex) when g is complete multipartite,
/// i.e. its complement is a disjoint union of cliques.
std::optional<std::vector<int>> is_complete_multipartite(const Graph& g);

/// v with K = N(v) a clique and S = V \ N[v] independent.
struct FinckTypeA {
    int v = -1;
    std::vector<int> clique;
    std::vector<int> independent;
};

/// Five-vertex induced cycle C, with the remaining vertices split into K
/// (a clique, joined to all of C) and S (independent, no edges to C).
struct FinckTypeB {
    std::vector<int> cycle;
    std::vector<int> clique;
    std::vector<int> independent;
};

/// Lowest-index witness vertex, if any.
std::optional<FinckTypeA> finck_type_a(const Graph& g);

/// First witness 5-set in lexicographic order, if any.
std::optional<FinckTypeB> finck_type_b(const Graph& g);

bool verify_witness(const Graph& g, const FinckTypeA& w);
bool verify_witness(const Graph& g, const FinckTypeB& w);

/// Graph families (after removing isolated vertices) with E(G) < 2 chi(G).
enum class LowEnergyFamily { Complete, B, A, H5 };

std::string to_string(LowEnergyFamily family);

struct TheoremAbException {
    LowEnergyFamily family = LowEnergyFamily::Complete;
    /// K: {n}; B: {n}; A: {n, t}; H5: {}.
    std::vector<int> params;
    int isolated = 0;
};

/// Match g (isolated vertices stripped) against K_n, B_n, the admissible
/// A_{n,t}, and H5. An edgeless graph with at least one vertex counts as K_1
/// plus isolated vertices. A_{n,t} is admissible when n <= 7 and
/// (n,t) != (7,4), or n >= 8 and t in {1, 2, n-1}.
std::optional<TheoremAbException> classify_theorem_ab(const Graph& g);

struct ClassificationRecord {
    bool is_union_of_cliques = false;
    std::optional<std::vector<int>> multipartite_parts;
    std::optional<FinckTypeA> finck_a;
    std::optional<FinckTypeB> finck_b;
    std::optional<TheoremAbException> theorem_ab_exception;
};

ClassificationRecord classify(const Graph& g);

}  // namespace graph_energy
