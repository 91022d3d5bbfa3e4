#include "graph_energy/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "graph_energy/errors.hpp"

namespace graph_energy {

Graph::Graph(int n) {
    if (n < 0) throw InputError("vertex count must be non-negative, got " + std::to_string(n));
    n_ = n;
    words_ = static_cast<std::size_t>((n + 63) / 64);
    bits_.assign(static_cast<std::size_t>(n) * words_, 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    GraphBuilder b(n);
    for (auto [i, j] : edges) b.add_edge(i, j);
    return b.build();
}

int Graph::degree(int v) const {
    int d = 0;
    for (std::size_t w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<std::size_t>(v) * words_ + w]);
    return d;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int j = 0; j < n_; ++j)
        if (adjacent(v, j)) out.push_back(j);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::set(int i, int j, bool on) {
    const int n = g_.n_;
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for n=" + std::to_string(n));
    if (i == j) throw InputError("self-loop at vertex " + std::to_string(i));
    if (g_.adjacent(i, j) == on) return;
    auto flip = [&](int r, int c) {
        g_.bits_[static_cast<std::size_t>(r) * g_.words_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63);
    };
    flip(i, j);
    flip(j, i);
    g_.m_ += on ? 1 : -1;
}

GraphBuilder& GraphBuilder::add_edge(int i, int j) {
    set(i, j, true);
    return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int i, int j) {
    set(i, j, false);
    return *this;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) b.add_edge(i, j);
    return b.build();
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (int v : vertices) {
        if (v < 0 || v >= n)
            throw InputError("induced_subgraph: vertex " + std::to_string(v) + " out of range for n=" +
                             std::to_string(n));
        if (seen[static_cast<std::size_t>(v)]++)
            throw InputError("induced_subgraph: duplicate vertex " + std::to_string(v));
    }
    const int p = static_cast<int>(vertices.size());
    GraphBuilder b(p);
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]))
                b.add_edge(i, j);
    return b.build();
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.order();
    GraphBuilder out(a.order() + b.order());
    for (auto [i, j] : a.edges()) out.add_edge(i, j);
    for (auto [i, j] : b.edges()) out.add_edge(i + shift, j + shift);
    return out.build();
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.order();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        const int id = static_cast<int>(out.size());
        std::vector<int> members{s};
        comp[static_cast<std::size_t>(s)] = id;
        for (std::size_t head = 0; head < members.size(); ++head) {
            const int u = members[head];
            for (int w = 0; w < n; ++w) {
                if (g.adjacent(u, w) && comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    members.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    for (int s = 0; s < n; ++s) {
        if (side[static_cast<std::size_t>(s)] >= 0) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::vector<int> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const int u = queue[head];
            for (int w = 0; w < n; ++w) {
                if (!g.adjacent(u, w)) continue;
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw < 0) {
                    sw = 1 - side[static_cast<std::size_t>(u)];
                    queue.push_back(w);
                } else if (sw == side[static_cast<std::size_t>(u)]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::vector<int> isolated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) out.push_back(v);
    return out;
}

Graph strip_isolated(const Graph& g) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 0) keep.push_back(v);
    return induced_subgraph(g, keep);
}

}  // namespace graph_energy
