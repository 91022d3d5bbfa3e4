#include "graph_energy/canonical.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "graph_energy/errors.hpp"
#include "graph_energy/graph6.hpp"

namespace graph_energy {

namespace {

// Rank-normalize colors so they are 0..k-1 preserving order. Returns k.
int normalize(std::vector<int>& colors) {
    std::vector<int> values(colors);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colors)
        c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    return static_cast<int>(values.size());
}

// Color refinement: split classes by the count of neighbors in every class
// until stable. Class order depends only on isomorphism-invariant data.
int refine(const Graph& g, std::vector<int>& colors) {
    const int n = g.order();
    int k = normalize(colors);
    while (true) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.assign(static_cast<std::size_t>(k) + 1, 0);
            s[0] = colors[static_cast<std::size_t>(v)];
            std::uint64_t row = g.row_mask(v);
            while (row) {
                const int w = std::countr_zero(row);
                row &= row - 1;
                ++s[1 + static_cast<std::size_t>(colors[static_cast<std::size_t>(w)])];
            }
        }
        std::vector<std::vector<int>> uniq(sig);
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        const int k2 = static_cast<int>(uniq.size());
        for (int v = 0; v < n; ++v)
            colors[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[static_cast<std::size_t>(v)]) - uniq.begin());
        if (k2 == k) return k;
        k = k2;
    }
}

bool twins(const Graph& g, int u, int v) {
    const std::uint64_t ignore = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
    return ((g.row_mask(u) ^ g.row_mask(v)) & ~ignore) == 0;
}

struct Search {
    const Graph& g;
    const std::vector<int>& input_colors;  // normalized initial coloring, empty if none
    std::optional<CanonicalLabeling> best;

    std::string leaf_form(const std::vector<int>& position) const {
        std::string form = emit_graph6(permute(g, position));
        if (!input_colors.empty()) {
            std::vector<int> inverse(position.size());
            for (std::size_t v = 0; v < position.size(); ++v)
                inverse[static_cast<std::size_t>(position[v])] = static_cast<int>(v);
            form.push_back('|');
            for (int v : inverse) {
                form += std::to_string(input_colors[static_cast<std::size_t>(v)]);
                form.push_back(',');
            }
        }
        return form;
    }

    void run(std::vector<int> colors) {
        const int n = g.order();
        const int k = refine(g, colors);
        if (k == n) {
            std::string form = leaf_form(colors);
            if (!best || form < best->form) best = CanonicalLabeling{colors, std::move(form)};
            return;
        }
        // First non-singleton class in class order.
        std::vector<int> count(static_cast<std::size_t>(k), 0);
        for (int c : colors) ++count[static_cast<std::size_t>(c)];
        int target = 0;
        while (count[static_cast<std::size_t>(target)] == 1) ++target;

        std::vector<int> tried;
        for (int v = 0; v < n; ++v) {
            if (colors[static_cast<std::size_t>(v)] != target) continue;
            // Transposing twins is an automorphism fixing the current partition.
            if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g, u, v); })) continue;
            tried.push_back(v);
            std::vector<int> next(colors);
            for (int w = 0; w < n; ++w) {
                auto& c = next[static_cast<std::size_t>(w)];
                c = 2 * c + ((c == target && w != v) ? 1 : 0);
            }
            run(std::move(next));
        }
    }
};

}  // namespace

Graph permute(const Graph& g, std::span<const int> position) {
    GraphBuilder b(g.order());
    for (auto [i, j] : g.edges())
        b.add_edge(position[static_cast<std::size_t>(i)], position[static_cast<std::size_t>(j)]);
    return b.build();
}

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw CapacityError("canonical labeling supports n <= 62, got n=" + std::to_string(n));
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw InputError("canonical_labeling: coloring length does not match vertex count");
    std::vector<int> initial(colors.begin(), colors.end());
    if (!initial.empty()) normalize(initial);
    Search search{g, initial, std::nullopt};
    search.run(initial.empty() ? std::vector<int>(static_cast<std::size_t>(n), 0) : initial);
    return std::move(*search.best);
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.order(); ++v) {
        da.push_back(a.degree(v));
        db.push_back(b.degree(v));
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace graph_energy
