#pragma once

#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

struct EnumerationSpec {
    int n = 0;
    bool connected_only = false;
    bool bipartite_only = false;
    bool trees_only = false;
};

inline constexpr int kEnumerationMaxOrder = 8;
inline constexpr int kTreeEnumerationMaxOrder = 10;

/// One canonically labeled representative per isomorphism class on exactly
/// spec.n vertices that passes the filters, sorted by graph6 string.
/// Uses orderly generation by canonical augmentation.
std::vector<Graph> all_graphs(const EnumerationSpec& spec);

/// Unlabeled trees on n vertices (1 <= n <= 10), sorted by graph6 string.
std::vector<Graph> all_trees(int n);

}  // namespace graph_energy
