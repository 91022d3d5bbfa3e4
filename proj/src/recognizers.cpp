#include "graph_energy/recognizers.hpp"

#include <algorithm>

#include "graph_energy/canonical.hpp"
#include "graph_energy/families.hpp"

namespace graph_energy {

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

bool is_union_of_complete_graphs(const Graph& g) {
    for (const auto& comp : connected_components(g))
        if (!is_clique(g, comp)) return false;
    return true;
}

std::optional<std::vector<int>> is_complete_multipartite(const Graph& g) {
    const Graph co = complement(g);
    if (!is_union_of_complete_graphs(co)) return std::nullopt;
    std::vector<int> parts;
    for (const auto& comp : connected_components(co)) parts.push_back(static_cast<int>(comp.size()));
    return parts;
}

std::optional<FinckTypeA> finck_type_a(const Graph& g) {
    const int n = g.order();
    for (int v = 0; v < n; ++v) {
        FinckTypeA w{v, {}, {}};
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            (g.adjacent(u, v) ? w.clique : w.independent).push_back(u);
        }
        if (is_clique(g, w.clique) && is_independent(g, w.independent)) return w;
    }
    return std::nullopt;
}

namespace {

bool induces_five_cycle(const Graph& g, const std::vector<int>& c) {
    // Five vertices, all of degree two inside: necessarily a single 5-cycle.
    for (int v : c) {
        int d = 0;
        for (int u : c) d += g.adjacent(u, v) ? 1 : 0;
        if (d != 2) return false;
    }
    return true;
}

}  // namespace

std::optional<FinckTypeB> finck_type_b(const Graph& g) {
    const int n = g.order();
    if (n < 5) return std::nullopt;
    std::vector<int> idx{0, 1, 2, 3, 4};
    while (true) {
        if (induces_five_cycle(g, idx)) {
            FinckTypeB w{idx, {}, {}};
            bool ok = true;
            for (int u = 0; u < n && ok; ++u) {
                if (std::find(idx.begin(), idx.end(), u) != idx.end()) continue;
                int hits = 0;
                for (int c : idx) hits += g.adjacent(u, c) ? 1 : 0;
                if (hits == 5)
                    w.clique.push_back(u);
                else if (hits == 0)
                    w.independent.push_back(u);
                else
                    ok = false;
            }
            if (ok && is_clique(g, w.clique) && is_independent(g, w.independent)) return w;
        }
        // Next 5-subset in lexicographic order.
        int i = 4;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - 5 + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < 5; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

bool verify_witness(const Graph& g, const FinckTypeA& w) {
    const int n = g.order();
    if (w.v < 0 || w.v >= n) return false;
    if (static_cast<int>(w.clique.size() + w.independent.size()) != n - 1) return false;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(w.v)]++;
    for (int u : w.clique) seen[static_cast<std::size_t>(u)]++;
    for (int u : w.independent) seen[static_cast<std::size_t>(u)]++;
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
    auto k = w.clique;
    k.push_back(w.v);
    auto s = w.independent;
    s.push_back(w.v);
    return is_clique(g, k) && is_independent(g, s);
}

bool verify_witness(const Graph& g, const FinckTypeB& w) {
    const int n = g.order();
    if (w.cycle.size() != 5) return false;
    if (static_cast<int>(w.cycle.size() + w.clique.size() + w.independent.size()) != n) return false;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const auto* part : {&w.cycle, &w.clique, &w.independent})
        for (int u : *part) {
            if (u < 0 || u >= n) return false;
            seen[static_cast<std::size_t>(u)]++;
        }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) return false;
    if (!induces_five_cycle(g, w.cycle)) return false;
    for (int c : w.cycle) {
        for (int k : w.clique)
            if (!g.adjacent(c, k)) return false;
        for (int s : w.independent)
            if (g.adjacent(c, s)) return false;
    }
    return is_clique(g, w.clique) && is_independent(g, w.independent);
}

std::string to_string(LowEnergyFamily family) {
    switch (family) {
        case LowEnergyFamily::Complete: return "K_n";
        case LowEnergyFamily::B: return "B_n";
        case LowEnergyFamily::A: return "A_nt";
        case LowEnergyFamily::H5: return "H5";
    }
    return "?";
}

namespace {

bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

std::vector<int> all_but(int n, std::initializer_list<int> drop) {
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (std::find(drop.begin(), drop.end(), v) == drop.end()) out.push_back(v);
    return out;
}

bool admissible_a(int n, int t) {
    if (t < 1 || t > n - 1) return false;
    if (n <= 7) return !(n == 7 && t == 4);
    return t == 1 || t == 2 || t == n - 1;
}

}  // namespace

std::optional<TheoremAbException> classify_theorem_ab(const Graph& g) {
    const Graph h = strip_isolated(g);
    const int k = h.order();
    const int isolated = g.order() - k;
    if (k == 0) {
        if (g.order() == 0) return std::nullopt;
        return TheoremAbException{LowEnergyFamily::Complete, {1}, g.order() - 1};
    }
    if (is_complete(h)) return TheoremAbException{LowEnergyFamily::Complete, {k}, isolated};

    // B_n: two pendant vertices at a common vertex of a K_n (n = k - 2 >= 1).
    for (int x = 0; x < k; ++x) {
        if (h.degree(x) != 1) continue;
        for (int y = x + 1; y < k; ++y) {
            if (h.degree(y) != 1 || h.neighbors(x) != h.neighbors(y)) continue;
            if (is_complete(induced_subgraph(h, all_but(k, {x, y}))))
                return TheoremAbException{LowEnergyFamily::B, {k - 2}, isolated};
        }
    }

    // A_{n,t}: one vertex whose removal leaves K_n (n = k - 1).
    for (int w = 0; w < k; ++w) {
        if (!is_complete(induced_subgraph(h, all_but(k, {w})))) continue;
        const int n = k - 1;
        const int t = h.degree(w);
        if (admissible_a(n, t)) return TheoremAbException{LowEnergyFamily::A, {n, t}, isolated};
        return std::nullopt;
    }

    if (k == 5 && is_isomorphic(h, named_small_graph(SmallGraphId::H5)))
        return TheoremAbException{LowEnergyFamily::H5, {}, isolated};
    return std::nullopt;
}

ClassificationRecord classify(const Graph& g) {
    ClassificationRecord r;
    r.is_union_of_cliques = is_union_of_complete_graphs(g);
    r.multipartite_parts = is_complete_multipartite(g);
    r.finck_a = finck_type_a(g);
    r.finck_b = finck_type_b(g);
    r.theorem_ab_exception = classify_theorem_ab(g);
    return r;
}

}  // namespace graph_energy
