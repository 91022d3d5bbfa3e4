#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace graph_energy {

using Edge = std::pair<int, int>;

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex. Equality is labeled
/// equality (identical adjacency), not isomorphism.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);
    static Graph from_edges(int n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int order() const { return n_; }
    int size() const { return m_; }

    bool adjacent(int i, int j) const {
        return (bits_[static_cast<std::size_t>(i) * words_ + (j >> 6)] >> (j & 63)) & 1U;
    }
    int degree(int v) const;
    std::vector<int> neighbors(int v) const;
    std::vector<Edge> edges() const;

    /// Neighborhood of v as a 64-bit mask; only valid when order() <= 64.
    std::uint64_t row_mask(int v) const { return bits_[static_cast<std::size_t>(v) * words_]; }

    template <typename Scalar = double>
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> adjacency() const {
        Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a(n_, n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a(i, j) = adjacent(i, j) ? Scalar(1) : Scalar(0);
        return a;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend class GraphBuilder;

    int n_ = 0;
    int m_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    explicit GraphBuilder(const Graph& g) : g_(g) {}

    int order() const { return g_.n_; }
    bool adjacent(int i, int j) const { return g_.adjacent(i, j); }
    GraphBuilder& add_edge(int i, int j);
    GraphBuilder& remove_edge(int i, int j);

    Graph build() const { return g_; }

private:
    void set(int i, int j, bool on);
    Graph g_;
};

Graph complement(const Graph& g);

/// Subgraph induced by `vertices`, relabeled in the given order.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

/// Vertices of `a` keep their labels; those of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Components sorted internally ascending, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_connected(const Graph& g);

/// Proper 2-coloring with the lowest vertex of every component on side 0.
std::optional<std::vector<int>> bipartition(const Graph& g);

bool is_tree(const Graph& g);

/// Vertices of degree zero, ascending.
std::vector<int> isolated_vertices(const Graph& g);

/// The graph with every isolated vertex removed.
Graph strip_isolated(const Graph& g);

}  // namespace graph_energy
