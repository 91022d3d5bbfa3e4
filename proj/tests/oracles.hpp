#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code paths with the library routines they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "graph_energy/graph.hpp"

namespace oracle {

using graph_energy::Graph;
using graph_energy::GraphBuilder;

inline bool isomorphic(const Graph& a, const Graph& b) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return false;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]))
                    ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

/// Pair index of (i, j), i < j, in a fixed order.
inline int pair_index(int i, int j, int n) {
    if (i > j) std::swap(i, j);
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

/// Number of isomorphism classes of labeled graphs on n <= 6 vertices,
/// by marking every relabeling of each unseen edge mask.
inline long count_unlabeled(int n, bool connected_only = false) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<std::pair<int, int>> pair_list;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pair_list.emplace_back(i, j);

    std::vector<char> seen(std::size_t{1} << pairs, 0);
    long classes = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        if (seen[mask]) continue;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (int k = 0; k < pairs; ++k)
                if ((mask >> k) & 1U) {
                    const auto [i, j] = pair_list[static_cast<std::size_t>(k)];
                    image |= std::uint32_t{1} << pair_index(perm[static_cast<std::size_t>(i)],
                                                            perm[static_cast<std::size_t>(j)], n);
                }
            seen[image] = 1;
        }
        if (connected_only) {
            GraphBuilder b(n);
            for (int k = 0; k < pairs; ++k)
                if ((mask >> k) & 1U) b.add_edge(pair_list[static_cast<std::size_t>(k)].first,
                                                 pair_list[static_cast<std::size_t>(k)].second);
            const Graph g = b.build();
            // Union-find connectivity.
            std::vector<int> root(static_cast<std::size_t>(n));
            std::iota(root.begin(), root.end(), 0);
            auto find = [&](int x) {
                while (root[static_cast<std::size_t>(x)] != x) x = root[static_cast<std::size_t>(x)];
                return x;
            };
            for (auto [i, j] : g.edges()) root[static_cast<std::size_t>(find(i))] = find(j);
            int comps = 0;
            for (int v = 0; v < n; ++v) comps += find(v) == v ? 1 : 0;
            if (n > 0 && comps != 1) continue;
        }
        ++classes;
    }
    return classes;
}

/// Labeled graph from an edge mask in pair_index order.
inline Graph from_mask(int n, std::uint32_t mask) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((mask >> pair_index(i, j, n)) & 1U) b.add_edge(i, j);
    return b.build();
}

/// Plain backtracking: is there a proper coloring with k colors?
inline bool colorable(const Graph& g, int k, std::vector<int>& color, int v = 0) {
    const int n = g.order();
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.adjacent(u, v) && color[static_cast<std::size_t>(u)] == c) ok = false;
        if (!ok) continue;
        color[static_cast<std::size_t>(v)] = c;
        if (colorable(g, k, color, v + 1)) return true;
    }
    return false;
}

inline int chromatic_number(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (int k = 0; k <= g.order(); ++k)
        if (colorable(g, k, color)) return k;
    return g.order();
}

/// (maximum matching size, number of maximum matchings) by listing every matching.
inline std::pair<int, long> matchings(const Graph& g) {
    const auto edges = g.edges();
    std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
    int best = 0;
    long count = 0;
    auto rec = [&](auto&& self, std::size_t from, int size) -> void {
        if (size > best) {
            best = size;
            count = 0;
        }
        if (size == best) ++count;
        for (std::size_t e = from; e < edges.size(); ++e) {
            const auto [i, j] = edges[e];
            if (used[static_cast<std::size_t>(i)] || used[static_cast<std::size_t>(j)]) continue;
            used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 1;
            self(self, e + 1, size + 1);
            used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = 0;
        }
    };
    rec(rec, 0, 0);
    return {best, count};
}

/// Eigenvalues via Eigen's own solver, sorted descending.
inline std::vector<double> eigen_reference(const Graph& g) {
    if (g.order() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.adjacency<double>(), Eigen::EigenvaluesOnly);
    std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + g.order());
    std::sort(out.rbegin(), out.rend());
    return out;
}

/// Rank through a floating-point full-pivot LU, adequate for small 0/1 matrices.
inline int float_rank(const Graph& g) {
    if (g.order() == 0) return 0;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(g.adjacency<double>());
    lu.setThreshold(1e-9);
    return static_cast<int>(lu.rank());
}

inline std::vector<double> sorted_desc(std::vector<double> v) {
    std::sort(v.rbegin(), v.rend());
    return v;
}

inline std::vector<double> complete_spectrum(int n) {
    std::vector<double> v(static_cast<std::size_t>(n), -1.0);
    v[0] = n - 1;
    return v;
}

inline std::vector<double> complete_bipartite_spectrum(int r, int s) {
    std::vector<double> v(static_cast<std::size_t>(r + s), 0.0);
    v.front() = std::sqrt(double(r) * s);
    v.back() = -std::sqrt(double(r) * s);
    return v;
}

inline std::vector<double> path_spectrum(int n) {
    std::vector<double> v;
    for (int k = 1; k <= n; ++k) v.push_back(2.0 * std::cos(k * M_PI / (n + 1)));
    return sorted_desc(v);
}

inline std::vector<double> cycle_spectrum(int n) {
    std::vector<double> v;
    for (int k = 0; k < n; ++k) v.push_back(2.0 * std::cos(2.0 * M_PI * k / n));
    return sorted_desc(v);
}

inline Graph petersen() {
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return b.build();
}

inline Graph random_graph(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) b.add_edge(i, j);
    return b.build();
}

inline Graph random_relabel(std::mt19937& rng, const Graph& g) {
    std::vector<int> p(static_cast<std::size_t>(g.order()));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    GraphBuilder b(g.order());
    for (auto [i, j] : g.edges()) b.add_edge(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
    return b.build();
}

}  // namespace oracle
