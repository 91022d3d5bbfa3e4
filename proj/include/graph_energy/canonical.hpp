#pragma once

#include <span>
#include <string>
#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

/// Canonical relabeling of a (optionally vertex-colored) graph.
struct CanonicalLabeling {
    /// position[v] is the canonical index of vertex v.
    std::vector<int> position;
    /// Isomorphism-invariant certificate: graph6 of the relabeled graph,
    /// followed by the color sequence when an initial coloring was given.
    std::string form;
};

/// Individualization-refinement search for the lexicographically smallest
/// relabeling. Exact; practical up to a dozen or so vertices, and n <= 62.
/// `colors`, when non-empty, is an initial vertex coloring that isomorphisms
/// must preserve.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

std::string canonical_form(const Graph& g);

/// Relabel so that vertex v moves to position[v].
Graph permute(const Graph& g, std::span<const int> position);

bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace graph_energy
