#include "graph_energy/enumerate.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "graph_energy/canonical.hpp"
#include "graph_energy/errors.hpp"
#include "graph_energy/graph6.hpp"

namespace graph_energy {

namespace {

// Canonical form of g with vertex v individualized.
std::string pointed_form(const Graph& g, int v) {
    std::vector<int> colors(static_cast<std::size_t>(g.order()), 1);
    colors[static_cast<std::size_t>(v)] = 0;
    return canonical_labeling(g, colors).form;
}

using Level = std::vector<std::pair<std::string, Graph>>;

// Children of `parent` obtained by adding vertex n-1, kept only when the new
// vertex lies in the orbit of the canonical deletion vertex (the vertex the
// canonical labeling places last). Siblings are deduplicated by form.
void augment(const Graph& parent, Level& out) {
    const int n = parent.order() + 1;
    const int fresh = n - 1;
    std::set<std::string> siblings;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        GraphBuilder b(n);
        for (auto [i, j] : parent.edges()) b.add_edge(i, j);
        for (int v = 0; v < n - 1; ++v)
            if ((mask >> v) & 1U) b.add_edge(v, fresh);
        const Graph child = b.build();

        const auto label = canonical_labeling(child);
        int last = 0;
        while (label.position[static_cast<std::size_t>(last)] != fresh) ++last;
        if (last != fresh) {
            if (child.degree(last) != child.degree(fresh)) continue;
            if (pointed_form(child, last) != pointed_form(child, fresh)) continue;
        }
        if (!siblings.insert(label.form).second) continue;
        out.emplace_back(label.form, permute(child, label.position));
    }
}

}  // namespace

std::vector<Graph> all_graphs(const EnumerationSpec& spec) {
    // Trees are connected and bipartite, so the other filters are no-ops.
    if (spec.trees_only) return all_trees(spec.n);
    if (spec.n < 0 || spec.n > kEnumerationMaxOrder)
        throw CapacityError("exhaustive enumeration supports 0 <= n <= " + std::to_string(kEnumerationMaxOrder) +
                            ", got n=" + std::to_string(spec.n));

    Level level{{canonical_form(Graph(0)), Graph(0)}};
    for (int k = 1; k <= spec.n; ++k) {
        Level next;
        for (const auto& [form, parent] : level) augment(parent, next);
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Graph> out;
    for (auto& [form, g] : level) {
        if (spec.connected_only && !is_connected(g)) continue;
        if (spec.bipartite_only && !bipartition(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n < 1 || n > kTreeEnumerationMaxOrder)
        throw CapacityError("tree enumeration supports 1 <= n <= " + std::to_string(kTreeEnumerationMaxOrder) +
                            ", got n=" + std::to_string(n));
    std::vector<std::pair<std::string, Graph>> level{{canonical_form(Graph(1)), Graph(1)}};
    for (int k = 2; k <= n; ++k) {
        std::set<std::string> seen;
        std::vector<std::pair<std::string, Graph>> next;
        for (const auto& [form, parent] : level) {
            for (int v = 0; v < k - 1; ++v) {
                GraphBuilder b(k);
                for (auto [i, j] : parent.edges()) b.add_edge(i, j);
                b.add_edge(v, k - 1);
                const Graph child = b.build();
                const auto label = canonical_labeling(child);
                if (seen.insert(label.form).second) next.emplace_back(label.form, permute(child, label.position));
            }
        }
        level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> out;
    for (auto& entry : level) out.push_back(std::move(entry.second));
    return out;
}

}  // namespace graph_energy
