#include "graph_energy/families.hpp"

#include <charconv>
#include <string>

#include "graph_energy/errors.hpp"
#include "graph_energy/graph6.hpp"

namespace graph_energy {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw InputError(what);
}

}  // namespace

Graph complete_graph(int n) {
    require(n >= 0, "complete_graph: n must be >= 0");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

Graph path_graph(int n) {
    require(n >= 0, "path_graph: n must be >= 0");
    GraphBuilder b(n);
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle_graph: n must be >= 3");
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

Graph star_graph(int t) {
    require(t >= 0, "star_graph: t must be >= 0");
    GraphBuilder b(t + 1);
    for (int i = 1; i <= t; ++i) b.add_edge(0, i);
    return b.build();
}

Graph complete_multipartite(std::span<const int> parts) {
    require(!parts.empty(), "complete_multipartite: at least one part required");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require(parts[p] >= 1, "complete_multipartite: part sizes must be >= 1");
        part_of.insert(part_of.end(), static_cast<std::size_t>(parts[p]), static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)]) b.add_edge(i, j);
    return b.build();
}

Graph cocktail_party(int n) {
    require(n >= 1, "cocktail_party: n must be >= 1");
    GraphBuilder b(2 * n);
    for (int i = 0; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j)
            if (i / 2 != j / 2) b.add_edge(i, j);
    return b.build();
}

Graph line_graph(const Graph& g) {
    return generalized_line_graph(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0));
}

Graph generalized_line_graph(const Graph& g, std::span<const int> a) {
    require(static_cast<int>(a.size()) == g.order(), "generalized_line_graph: need one multiplicity per vertex");
    const auto edges = g.edges();
    const int m = static_cast<int>(edges.size());
    int total = m;
    std::vector<int> block_start;
    for (int ai : a) {
        require(ai >= 0, "generalized_line_graph: multiplicities must be >= 0");
        block_start.push_back(total);
        total += 2 * ai;
    }
    GraphBuilder b(total);
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            const auto [p, q] = edges[static_cast<std::size_t>(x)];
            const auto [r, s] = edges[static_cast<std::size_t>(y)];
            if (p == r || p == s || q == r || q == s) b.add_edge(x, y);
        }
    for (int v = 0; v < g.order(); ++v) {
        const int start = block_start[static_cast<std::size_t>(v)];
        const int size = 2 * a[static_cast<std::size_t>(v)];
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (i / 2 != j / 2) b.add_edge(start + i, start + j);
        for (int x = 0; x < m; ++x) {
            const auto [p, q] = edges[static_cast<std::size_t>(x)];
            if (p != v && q != v) continue;
            for (int i = 0; i < size; ++i) b.add_edge(start + i, x);
        }
    }
    return b.build();
}

Graph a_family(int n, int t) {
    require(n >= 2, "a_family: n must be >= 2");
    require(t >= 1 && t <= n, "a_family: t must satisfy 1 <= t <= n");
    GraphBuilder b(complete_graph(n + 1));
    for (int i = t; i < n; ++i) b.remove_edge(i, n);
    return b.build();
}

Graph b_family(int n) {
    require(n >= 1, "b_family: n must be >= 1");
    GraphBuilder b(n + 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    b.add_edge(0, n);
    b.add_edge(0, n + 1);
    return b.build();
}

Graph matching_union(int r_pairs, int s_isolated) {
    require(r_pairs >= 0 && s_isolated >= 0, "matching_union: counts must be >= 0");
    GraphBuilder b(2 * r_pairs + s_isolated);
    for (int i = 0; i < r_pairs; ++i) b.add_edge(2 * i, 2 * i + 1);
    return b.build();
}

Graph named_small_graph(SmallGraphId id) {
    switch (id) {
        // Triangle 1-3-4; 0 and 5 pendant at 1; 2 pendant at 3.
        case SmallGraphId::H1:
            return Graph::from_edges(6, {{0, 1}, {1, 4}, {1, 3}, {2, 3}, {3, 4}, {1, 5}});
        // H1 with 5 also adjacent to 3.
        case SmallGraphId::H2:
            return Graph::from_edges(6, {{0, 1}, {1, 4}, {1, 3}, {2, 3}, {3, 4}, {1, 5}, {3, 5}});
        // K4 on {1,2,4,5}; 0 pendant at 1, 3 pendant at 4.
        case SmallGraphId::H3:
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {4, 5}});
        // K4 on {1,2,3,4}; 0 pendant at 1, 5 adjacent to 2 and 4.
        case SmallGraphId::H4:
            return Graph::from_edges(6, {{0, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}, {2, 5}, {4, 5}});
        // Triangle 1-3-4 with 0 pendant at 1 and 2 pendant at 3.
        case SmallGraphId::H5:
            return Graph::from_edges(5, {{0, 1}, {1, 4}, {1, 3}, {2, 3}, {3, 4}});
        case SmallGraphId::HAux: {
            const std::vector<int> keep{1, 2, 3, 4, 5};
            return induced_subgraph(named_small_graph(SmallGraphId::H2), keep);
        }
    }
    throw InputError("named_small_graph: unknown id");
}

namespace {

struct FamilyName {
    FamilyId id;
    std::string_view name;
};

constexpr FamilyName kNames[] = {
    {FamilyId::Complete, "K"},
    {FamilyId::Path, "P"},
    {FamilyId::Cycle, "C"},
    {FamilyId::CompleteMultipartite, "KM"},
    {FamilyId::Star, "S"},
    {FamilyId::CocktailParty, "CP"},
    {FamilyId::ANt, "A"},
    {FamilyId::BN, "B"},
    {FamilyId::H1, "H1"},
    {FamilyId::H2, "H2"},
    {FamilyId::H3, "H3"},
    {FamilyId::H4, "H4"},
    {FamilyId::H5, "H5"},
    {FamilyId::HAux, "Haux"},
    {FamilyId::LineGraph, "L"},
    {FamilyId::GeneralizedLineGraph, "GL"},
    {FamilyId::MatchingUnion, "M"},
};

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<int> parse_ints(std::string_view text, std::string_view spec) {
    std::vector<int> out;
    if (text.empty()) return out;
    for (auto part : split(text, ',')) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
            throw InputError("family spec '" + std::string(spec) + "': bad integer '" + std::string(part) + "'");
        out.push_back(value);
    }
    return out;
}

std::size_t expected_params(FamilyId id) {
    switch (id) {
        case FamilyId::Complete:
        case FamilyId::Path:
        case FamilyId::Cycle:
        case FamilyId::Star:
        case FamilyId::CocktailParty:
        case FamilyId::BN:
            return 1;
        case FamilyId::ANt:
        case FamilyId::MatchingUnion:
            return 2;
        case FamilyId::H1:
        case FamilyId::H2:
        case FamilyId::H3:
        case FamilyId::H4:
        case FamilyId::H5:
        case FamilyId::HAux:
        case FamilyId::LineGraph:
            return 0;
        default:
            return static_cast<std::size_t>(-1);  // variadic
    }
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    const std::string original(text);
    if (text.starts_with("family:")) text.remove_prefix(7);
    const auto fields = split(text, ':');
    FamilySpec spec;
    bool found = false;
    for (const auto& [id, name] : kNames)
        if (fields[0] == name) {
            spec.id = id;
            found = true;
        }
    if (!found) throw InputError("unknown family '" + std::string(fields[0]) + "' in '" + original + "'");

    auto need_fields = [&](std::size_t k) {
        if (fields.size() != k) throw InputError("family spec '" + original + "': wrong number of ':' fields");
    };
    switch (spec.id) {
        case FamilyId::LineGraph:
            need_fields(2);
            spec.base = parse_graph6(fields[1]);
            break;
        case FamilyId::GeneralizedLineGraph:
            need_fields(3);
            spec.base = parse_graph6(fields[1]);
            spec.params = parse_ints(fields[2], original);
            break;
        default: {
            const std::size_t want = expected_params(spec.id);
            if (want == 0) {
                need_fields(1);
            } else {
                need_fields(2);
                spec.params = parse_ints(fields[1], original);
            }
            if (want != static_cast<std::size_t>(-1) && spec.params.size() != want)
                throw InputError("family spec '" + original + "': expected " + std::to_string(want) + " parameter(s)");
        }
    }
    spec.build();  // validates parameter ranges
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = "family:";
    for (const auto& [fid, name] : kNames)
        if (fid == id) out += name;
    if (base) out += ":" + emit_graph6(*base);
    if (!params.empty() || id == FamilyId::GeneralizedLineGraph) {
        out += ":";
        for (std::size_t i = 0; i < params.size(); ++i) out += (i ? "," : "") + std::to_string(params[i]);
    }
    return out;
}

Graph FamilySpec::build() const {
    const auto p = [&](std::size_t i) { return params.at(i); };
    switch (id) {
        case FamilyId::Complete: return complete_graph(p(0));
        case FamilyId::Path: return path_graph(p(0));
        case FamilyId::Cycle: return cycle_graph(p(0));
        case FamilyId::CompleteMultipartite: return complete_multipartite(params);
        case FamilyId::Star: return star_graph(p(0));
        case FamilyId::CocktailParty: return cocktail_party(p(0));
        case FamilyId::ANt: return a_family(p(0), p(1));
        case FamilyId::BN: return b_family(p(0));
        case FamilyId::H1: return named_small_graph(SmallGraphId::H1);
        case FamilyId::H2: return named_small_graph(SmallGraphId::H2);
        case FamilyId::H3: return named_small_graph(SmallGraphId::H3);
        case FamilyId::H4: return named_small_graph(SmallGraphId::H4);
        case FamilyId::H5: return named_small_graph(SmallGraphId::H5);
        case FamilyId::HAux: return named_small_graph(SmallGraphId::HAux);
        case FamilyId::LineGraph: return line_graph(base.value());
        case FamilyId::GeneralizedLineGraph: return generalized_line_graph(base.value(), params);
        case FamilyId::MatchingUnion: return matching_union(p(0), p(1));
    }
    throw InputError("unknown family");
}

}  // namespace graph_energy
