#include "graph_energy/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <sstream>
#include <thread>

#include "graph_energy/canonical.hpp"
#include "graph_energy/errors.hpp"
#include "graph_energy/families.hpp"
#include "graph_energy/graph6.hpp"
#include "graph_energy/tolerances.hpp"

namespace graph_energy {

std::string to_string(TheoremId id) { return "T" + std::to_string(static_cast<int>(id)); }

TheoremId parse_theorem_id(std::string_view text) {
    if (text.size() >= 2 && (text[0] == 'T' || text[0] == 't')) {
        int value = 0;
        bool digits = true;
        for (char c : text.substr(1)) {
            if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
            else value = value * 10 + (c - '0');
        }
        if (digits && value >= 1 && value <= kTheoremCount) return static_cast<TheoremId>(value);
    }
    throw InputError("unknown theorem id '" + std::string(text) + "'");
}

std::vector<TheoremId> all_theorems() {
    std::vector<TheoremId> out;
    for (int k = 1; k <= kTheoremCount; ++k) out.push_back(static_cast<TheoremId>(k));
    return out;
}

std::vector<TheoremId> parse_theorem_list(std::string_view text) {
    if (text == "all") return all_theorems();
    std::vector<TheoremId> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto pos = text.find(',', start);
        const auto item = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        const TheoremId id = parse_theorem_id(item);
        if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string to_string(CheckStatus status) {
    switch (status) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Skip: return "skip";
        case CheckStatus::Error: return "error";
    }
    return "?";
}

CheckStatus TheoremCheck::status() const {
    if (errored) return CheckStatus::Error;
    if (!hypothesis_holds) return CheckStatus::Skip;
    return passed.value_or(false) ? CheckStatus::Pass : CheckStatus::Fail;
}

nlohmann::json to_json(const TheoremCheck& check) {
    nlohmann::json j;
    j["record"] = "check";
    j["theorem_id"] = to_string(check.theorem_id);
    j["graph"] = check.graph;
    j["hypothesis_holds"] = check.hypothesis_holds;
    j["passed"] = check.passed ? nlohmann::json(*check.passed) : nlohmann::json(nullptr);
    j["lhs"] = check.lhs;
    j["rhs"] = check.rhs;
    j["status"] = to_string(check.status());
    j["detail"] = check.detail;
    return j;
}

// ---------------------------------------------------------------------------

GraphContext::GraphContext(Graph g) : g_(std::move(g)) {}

const Graph& GraphContext::complement_graph() {
    if (!complement_) complement_ = complement(g_);
    return *complement_;
}

const std::string& GraphContext::graph6() {
    if (!graph6_) graph6_ = g_.order() <= kGraph6MaxOrder ? emit_graph6(g_) : std::string("<n>62>");
    return *graph6_;
}

const SpectrumResult& GraphContext::spectrum() {
    if (!spectrum_) spectrum_ = eigenvalues(g_);
    return *spectrum_;
}

const SpectrumResult& GraphContext::complement_spectrum() {
    if (!complement_spectrum_) complement_spectrum_ = eigenvalues(complement_graph());
    return *complement_spectrum_;
}

const CharPoly& GraphContext::char_poly() {
    if (!char_poly_) char_poly_ = graph_energy::char_poly(g_);
    return *char_poly_;
}

int GraphContext::rank() {
    if (!rank_) rank_ = rank_exact(g_);
    return *rank_;
}

const ColoringResult& GraphContext::coloring() {
    if (!coloring_) coloring_ = chromatic_number(g_);
    return *coloring_;
}

const ColoringResult& GraphContext::complement_coloring() {
    if (!complement_coloring_) complement_coloring_ = chromatic_number(complement_graph());
    return *complement_coloring_;
}

bool GraphContext::connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
}

bool GraphContext::bipartite() {
    if (!bipartite_) bipartite_ = bipartition(g_).has_value();
    return *bipartite_;
}

bool GraphContext::tree() { return g_.order() >= 1 && g_.size() == g_.order() - 1 && connected(); }

// ---------------------------------------------------------------------------

bool is_matching_union(const Graph& g) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 1) return false;
    return true;
}

namespace {

bool is_complete(const Graph& g) { return 2 * g.size() == g.order() * (g.order() - 1); }

bool is_star(const Graph& g) {
    const int n = g.order();
    if (n < 2 || g.size() != n - 1) return false;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) return true;
    return false;
}

bool isomorphic_quick(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && is_isomorphic(a, b);
}

bool listed_for_sum_bound(const Graph& h) {
    const int k = h.order();
    if (is_complete(h)) return true;
    // A_{k-1,k-2} is K_k minus one edge.
    if (2 * (h.size() + 1) == k * (k - 1)) return true;
    for (const Graph& listed : {b_family(1), b_family(2), a_family(3, 1)})
        if (isomorphic_quick(h, listed)) return true;
    return false;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

void t1(GraphContext& c, TheoremCheck& r) {
    const auto& tol = kTolerances;
    r.hypothesis_holds = true;
    r.lhs = c.spectrum().energy;
    r.rhs = c.rank();
    const bool equal = std::abs(r.lhs - r.rhs) <= tol.inequality_slack;
    const bool family = is_matching_union(c.graph());
    r.passed = r.lhs >= r.rhs - tol.inequality_slack && equal == family;
    r.detail = std::string(equal ? "E = rank" : "E > rank") + (family ? "; matching union" : "; not a matching union");
}

void t2(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    if (g.order() == 0 || !c.connected()) {
        r.detail = "not connected";
        return;
    }
    if (g.order() == 1 || (is_star(g) && g.order() <= 4)) {
        r.detail = "excluded: K1 or K_{1,i}, i <= 3";
        return;
    }
    r.hypothesis_holds = true;
    r.lhs = c.spectrum().energy;
    r.rhs = 4.0;
    r.passed = r.lhs >= r.rhs - kTolerances.inequality_slack;
}

void t3(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    if (g.size() == 0 || !c.connected() || !c.bipartite()) {
        r.detail = "not a connected bipartite graph with an edge";
        return;
    }
    r.hypothesis_holds = true;
    const double rank = c.rank();
    const double energy = c.spectrum().energy;
    r.lhs = energy;
    r.rhs = std::sqrt((rank + 1) * (rank + 1) - 5);
    // k = product of the squared positive eigenvalues = |a_r| for bipartite graphs.
    const double k = static_cast<double>(c.char_poly().a_r_abs);
    const double internal = std::sqrt(4.0 * g.size() + rank * (rank - 2) * std::pow(k, 2.0 / rank));
    const double slack = kTolerances.inequality_slack;
    const bool main_ok = energy >= r.rhs - slack;
    const bool internal_ok = energy >= internal - slack;
    r.passed = main_ok && internal_ok;
    r.detail = "internal bound sqrt(4m + r(r-2) k^(2/r)) = " + fmt(internal) + (internal_ok ? " holds" : " VIOLATED");
}

void t4(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    if (!c.tree() || g.order() < 2) {
        r.detail = "not a tree without isolated vertex";
        return;
    }
    const MatchingInfo info = matching_info(g);
    if (info.has_perfect) {
        r.detail = "tree has a perfect matching";
        return;
    }
    r.hypothesis_holds = true;
    const Integer count = tree_max_matching_count(g);
    r.lhs = static_cast<double>(count);
    r.rhs = 2;
    r.passed = count >= 2;
    r.detail = "maximum matchings: " + to_string(count);
}

void t5(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    if (!c.tree() || g.size() == 0) {
        r.detail = "not a tree with an edge";
        return;
    }
    r.hypothesis_holds = true;
    const Integer count = tree_max_matching_count(g);
    const Integer product = c.char_poly().a_r_abs;
    r.lhs = static_cast<double>(count);
    r.rhs = static_cast<double>(product);
    bool ok = count == product;
    std::string detail = "count " + to_string(count) + ", |a_r| " + to_string(product);
    if (g.order() <= kMatchingMaxOrder) {
        const MatchingInfo info = matching_info(g);
        if (info.max_count != count) {
            ok = false;
            detail += "; general counter disagrees: " + to_string(info.max_count);
        }
        if (!info.has_perfect) {
            const bool at_least_two = product >= 2;
            ok = ok && at_least_two;
            detail += at_least_two ? "; no perfect matching, product >= 2" : "; no perfect matching, product < 2";
        }
    }
    r.passed = ok;
    r.detail = detail;
}

void t6(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    if (g.order() < 4 || !c.connected() || !c.bipartite()) {
        r.detail = "not a connected bipartite graph on >= 4 vertices";
        return;
    }
    const int rank = c.rank();
    if (rank == g.order()) {
        r.detail = "full rank";
        return;
    }
    r.hypothesis_holds = true;
    r.lhs = c.spectrum().energy;
    r.rhs = 1.0 + rank;
    r.passed = r.lhs >= r.rhs - kTolerances.inequality_slack;
}

void t7(GraphContext& c, TheoremCheck& r) {
    r.hypothesis_holds = true;
    const int chi_bar = c.complement_coloring().chi;
    r.lhs = c.graph().order() - chi_bar;
    r.rhs = top_k_eigenvalue_sum(c.spectrum(), chi_bar);
    r.passed = r.lhs <= r.rhs + kTolerances.inequality_slack;
    r.detail = "chi(complement) = " + std::to_string(chi_bar);
}

void t8(GraphContext& c, TheoremCheck& r) {
    r.hypothesis_holds = true;
    const int chi_bar = c.complement_coloring().chi;
    r.lhs = c.spectrum().energy;
    r.rhs = 2.0 * (c.graph().order() - chi_bar);
    r.passed = r.lhs >= r.rhs - kTolerances.inequality_slack;
}

void t9(GraphContext& c, TheoremCheck& r) {
    r.hypothesis_holds = true;
    const Graph& g = c.graph();
    const int sum = c.coloring().chi + c.complement_coloring().chi;
    r.lhs = sum;
    r.rhs = g.order() + 1;
    const auto a = finck_type_a(g);
    const auto b = finck_type_b(g);
    const auto a_bar = finck_type_a(c.complement_graph());
    const auto b_bar = finck_type_b(c.complement_graph());
    bool ok = sum <= g.order() + 1;
    const bool equality = sum == g.order() + 1;
    ok = ok && (equality == (a.has_value() || b.has_value()));
    ok = ok && a.has_value() == a_bar.has_value() && b.has_value() == b_bar.has_value();
    if (a) ok = ok && verify_witness(g, *a);
    if (b) ok = ok && verify_witness(g, *b);
    r.passed = ok;
    r.detail = std::string(equality ? "equality" : "strict") + "; type a: " + (a ? "yes" : "no") +
               "; type b: " + (b ? "yes" : "no") + "; complement a/b: " + (a_bar ? "yes" : "no") + "/" +
               (b_bar ? "yes" : "no");
}

void t10(GraphContext& c, TheoremCheck& r) {
    r.hypothesis_holds = true;
    r.lhs = c.coloring().chi;
    r.rhs = c.spectrum().largest() + 1.0;
    r.passed = r.lhs <= r.rhs + kTolerances.zero_eigenvalue;
}

void t11(GraphContext& c, TheoremCheck& r) {
    r.hypothesis_holds = true;
    const double slack = kTolerances.inequality_slack;
    r.lhs = c.spectrum().energy;
    r.rhs = 2.0 * c.coloring().chi;
    const auto exception = classify_theorem_ab(c.graph());
    const bool in_band = std::abs(r.lhs - r.rhs) <= slack;
    const bool low = r.lhs < r.rhs - slack;
    r.passed = in_band ? !exception.has_value() : low == exception.has_value();
    if (exception) {
        std::string params;
        for (int p : exception->params) params += (params.empty() ? "" : ",") + std::to_string(p);
        r.detail = "exception " + to_string(exception->family) + "(" + params + ") + " +
                   std::to_string(exception->isolated) + " isolated";
    } else {
        r.detail = in_band ? "E = 2 chi, not an exception" : "not an exception";
    }
}

void t12(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    if (g.order() < 3) {
        r.detail = "n < 3";
        return;
    }
    const double sum = c.spectrum().energy + c.complement_spectrum().energy;
    const double bound = 2.0 * g.order();
    r.lhs = sum;
    r.rhs = bound;
    const bool holds = sum >= bound - kTolerances.inequality_slack;
    if (listed_for_sum_bound(g) || listed_for_sum_bound(c.complement_graph())) {
        r.detail = std::string("excluded family; bound ") + (holds ? "holds" : "violated");
        return;
    }
    r.hypothesis_holds = true;
    r.passed = holds;
}

void t13(GraphContext& c, TheoremCheck& r) {
    const double least = c.spectrum().smallest();
    r.lhs = least;
    r.rhs = -1.0;
    if (least < -1.0 - kTolerances.inequality_slack) {
        r.detail = "smallest eigenvalue below -1";
        return;
    }
    r.hypothesis_holds = true;
    r.passed = is_union_of_complete_graphs(c.graph());
}

void t14(GraphContext& c, TheoremCheck& r) {
    const Graph& g = c.graph();
    const int n = g.order() - 2;
    if (n < 2 || !isomorphic_quick(g, b_family(n))) {
        r.detail = "not B_n with n >= 2";
        return;
    }
    r.hypothesis_holds = true;
    const auto expected = b_family_char_poly(n);
    const auto& actual = c.char_poly().coeffs;
    int mismatches = 0;
    for (std::size_t k = 0; k < std::max(expected.size(), actual.size()); ++k) {
        const Integer e = k < expected.size() ? expected[k] : 0;
        const Integer a = k < actual.size() ? actual[k] : 0;
        if (e != a) ++mismatches;
    }
    r.lhs = mismatches;
    r.rhs = 0;
    r.passed = mismatches == 0;
    r.detail = "B_" + std::to_string(n) + ": " + std::to_string(mismatches) + " coefficient mismatches";
}

void t15(GraphContext& c, TheoremCheck& r) {
    std::string detail;
    double worst_margin = INFINITY;
    bool all = true;
    for (const auto& bound : spot_bounds()) {
        if (!isomorphic_quick(c.graph(), bound.graph)) continue;
        r.hypothesis_holds = true;
        const SpotOutcome out = evaluate(bound);
        all = all && out.holds;
        const double margin = std::abs(out.observed - bound.value);
        if (margin < worst_margin) {
            worst_margin = margin;
            r.lhs = out.observed;
            r.rhs = bound.value;
        }
        detail += (detail.empty() ? "" : "; ") + bound.name + ": " + fmt(out.observed) + (out.holds ? "" : " FAILED");
    }
    if (r.hypothesis_holds) r.passed = all;
    r.detail = r.hypothesis_holds ? detail : "no spot bound for this graph";
}

}  // namespace

TheoremCheck run_check(TheoremId id, GraphContext& ctx) {
    TheoremCheck r;
    r.theorem_id = id;
    r.graph = ctx.graph6();
    try {
        switch (id) {
            case TheoremId::T1: t1(ctx, r); break;
            case TheoremId::T2: t2(ctx, r); break;
            case TheoremId::T3: t3(ctx, r); break;
            case TheoremId::T4: t4(ctx, r); break;
            case TheoremId::T5: t5(ctx, r); break;
            case TheoremId::T6: t6(ctx, r); break;
            case TheoremId::T7: t7(ctx, r); break;
            case TheoremId::T8: t8(ctx, r); break;
            case TheoremId::T9: t9(ctx, r); break;
            case TheoremId::T10: t10(ctx, r); break;
            case TheoremId::T11: t11(ctx, r); break;
            case TheoremId::T12: t12(ctx, r); break;
            case TheoremId::T13: t13(ctx, r); break;
            case TheoremId::T14: t14(ctx, r); break;
            case TheoremId::T15: t15(ctx, r); break;
        }
    } catch (const std::exception& e) {
        r.errored = true;
        r.passed.reset();
        r.detail = std::string("error: ") + e.what();
    }
    if (!r.hypothesis_holds) r.passed.reset();
    return r;
}

TheoremCheck run_check(TheoremId id, const Graph& g) {
    GraphContext ctx(g);
    return run_check(id, ctx);
}

bool sum_bound_excluded(const Graph& g) {
    return listed_for_sum_bound(g) || listed_for_sum_bound(complement(g));
}

// ---------------------------------------------------------------------------

std::vector<SpotBound> spot_bounds() {
    const Graph h1 = named_small_graph(SmallGraphId::H1);
    const Graph h2 = named_small_graph(SmallGraphId::H2);
    const Graph h3 = named_small_graph(SmallGraphId::H3);
    const Graph h4 = named_small_graph(SmallGraphId::H4);
    const Graph haux = named_small_graph(SmallGraphId::HAux);
    return {
        {"lambda6(H1) < -1.8", h1, 6, '<', -1.8, 0},
        {"lambda5(H1) < -1.3", h1, 5, '<', -1.3, 0},
        {"lambda6(H2) < -1.7", h2, 6, '<', -1.7, 0},
        {"lambda5(H2) < -1.6", h2, 5, '<', -1.6, 0},
        {"lambda5(K_{1,1,3}) = -2", complete_multipartite({1, 1, 3}), 5, '=', -2.0, 1e-8},
        {"lambda5(Haux) < -1.74", haux, 5, '<', -1.74, 0},
        {"lambda4(Haux) < -1.27", haux, 4, '<', -1.27, 0},
        {"lambda5(H3) < -1.39", h3, 5, '<', -1.39, 0},
        {"lambda6(H3) < -1.61", h3, 6, '<', -1.61, 0},
        {"lambda5(H4) < -1.3", h4, 5, '<', -1.3, 0},
        {"lambda6(H4) < -1.7", h4, 6, '<', -1.7, 0},
        {"lambda5(A_{4,1}) < -1.5", a_family(4, 1), 5, '<', -1.5, 0},
        {"lambda5(A_{4,2}) < -1.68", a_family(4, 2), 5, '<', -1.68, 0},
        {"lambda6(B_4) < -1.8", b_family(4), 6, '<', -1.8, 0},
        {"E(K_{1,3}) > 3.4", star_graph(3), 0, '>', 3.4, 0},
        {"E(K_{1,2}) > 2.8", star_graph(2), 0, '>', 2.8, 0},
    };
}

SpotOutcome evaluate(const SpotBound& bound) {
    const auto spectrum = eigenvalues(bound.graph);
    SpotOutcome out;
    out.observed = bound.eigenvalue_index == 0 ? spectrum.energy : spectrum.lambda(bound.eigenvalue_index);
    const double slack = kTolerances.strict_slack;
    switch (bound.relation) {
        case '<': out.holds = out.observed < bound.value - slack; break;
        case '>': out.holds = out.observed > bound.value + slack; break;
        case '=': out.holds = std::abs(out.observed - bound.value) <= bound.tolerance; break;
        default: throw InputError("unknown relation in spot bound");
    }
    return out;
}

std::vector<Integer> b_family_char_poly(int n) {
    if (n < 2) throw InputError("b_family_char_poly: n must be >= 2");
    const Integer nn = n;
    std::vector<Integer> poly{0, 1};  // x
    for (int k = 0; k < n - 2; ++k) poly = poly_multiply(poly, {1, 1});
    return poly_multiply(poly, {2 * nn - 4, -(1 + nn), 2 - nn, 1});
}

// ---------------------------------------------------------------------------

AnalysisReport analyze(const Graph& g) {
    GraphContext ctx(g);
    AnalysisReport r;
    r.graph6 = ctx.graph6();
    r.n = g.order();
    r.m = g.size();
    const auto& spectrum = ctx.spectrum();
    r.spectrum = spectrum.eigenvalues;
    r.energy = spectrum.energy;
    r.positive_count = spectrum.positive_count;
    r.rank = ctx.rank();
    const CharPoly& poly = ctx.char_poly();
    r.a_r_abs = to_string(poly.a_r_abs);
    r.chi = ctx.coloring().chi;
    r.chi_complement = ctx.complement_coloring().chi;
    r.classification = classify(g);

    int numeric_rank = 0;
    for (double x : spectrum.eigenvalues)
        if (std::abs(x) > kTolerances.zero_eigenvalue) ++numeric_rank;
    if (numeric_rank != r.rank || poly.rank != r.rank)
        throw NumericalError("rank mismatch for " + r.graph6 + ": exact " + std::to_string(r.rank) + ", numeric " +
                             std::to_string(numeric_rank) + ", char_poly " + std::to_string(poly.rank));

    for (TheoremId id : all_theorems()) r.theorem_flags[to_string(id)] = to_string(run_check(id, ctx).status());
    return r;
}

nlohmann::json to_json(const ClassificationRecord& c) {
    nlohmann::json j;
    j["is_union_of_cliques"] = c.is_union_of_cliques;
    j["is_complete_multipartite"] = c.multipartite_parts.has_value();
    j["multipartite_parts"] = c.multipartite_parts ? nlohmann::json(*c.multipartite_parts) : nlohmann::json(nullptr);
    j["finck_type"] = c.finck_a ? "a" : (c.finck_b ? "b" : "none");
    j["finck_a"] = c.finck_a ? nlohmann::json{{"v", c.finck_a->v}, {"K", c.finck_a->clique}, {"S", c.finck_a->independent}}
                             : nlohmann::json(nullptr);
    j["finck_b"] = c.finck_b
                       ? nlohmann::json{{"C", c.finck_b->cycle}, {"K", c.finck_b->clique}, {"S", c.finck_b->independent}}
                       : nlohmann::json(nullptr);
    if (c.theorem_ab_exception) {
        const auto& e = *c.theorem_ab_exception;
        j["theorem_ab_exception"] = {{"family", to_string(e.family)}, {"params", e.params}, {"isolated", e.isolated}};
    } else {
        j["theorem_ab_exception"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const AnalysisReport& r) {
    nlohmann::json j;
    j["record"] = "analysis";
    j["graph6"] = r.graph6;
    j["n"] = r.n;
    j["m"] = r.m;
    j["spectrum"] = r.spectrum;
    j["energy"] = r.energy;
    j["rank"] = r.rank;
    j["a_r_abs"] = r.a_r_abs;
    j["chi"] = r.chi;
    j["chi_complement"] = r.chi_complement;
    j["positive_count"] = r.positive_count;
    j["classification"] = to_json(r.classification);
    j["theorems"] = r.theorem_flags;
    return j;
}

nlohmann::json tolerance_header() {
    const auto& t = kTolerances;
    return {{"record", "header"},
            {"tolerances",
             {{"zero_eigenvalue", t.zero_eigenvalue},
              {"inequality_slack", t.inequality_slack},
              {"residual", t.residual},
              {"strict_slack", t.strict_slack},
              {"interlacing", t.interlacing}}}};
}

nlohmann::json to_json(const SuiteSummary& s) {
    return {{"record", "summary"},          {"checked", s.checked}, {"hypothesis_skipped", s.hypothesis_skipped},
            {"passed", s.passed},           {"failed", s.failed},   {"errored", s.errored},
            {"counterexamples", s.counterexamples}};
}

// ---------------------------------------------------------------------------

SuiteSummary run_suite(const std::vector<TheoremId>& ids, const std::function<std::optional<Graph>()>& next,
                       const std::function<void(const TheoremCheck&)>& emit, const SuiteOptions& options) {
    SuiteSummary summary;
    const int jobs = std::max(1, options.jobs);
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch);
    bool exhausted = false;
    while (!exhausted) {
        std::vector<Graph> batch;
        while (batch.size() < batch_size) {
            auto g = next();
            if (!g) {
                exhausted = true;
                break;
            }
            batch.push_back(std::move(*g));
        }
        std::vector<std::vector<TheoremCheck>> results(batch.size());
        std::atomic<std::size_t> cursor{0};
        auto worker = [&] {
            for (std::size_t i = cursor++; i < batch.size(); i = cursor++) {
                GraphContext ctx(batch[i]);
                for (TheoremId id : ids) results[i].push_back(run_check(id, ctx));
            }
        };
        if (jobs == 1 || batch.size() <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        }
        for (const auto& per_graph : results) {
            for (const auto& check : per_graph) {
                ++summary.checked;
                switch (check.status()) {
                    case CheckStatus::Pass: ++summary.passed; break;
                    case CheckStatus::Skip: ++summary.hypothesis_skipped; break;
                    case CheckStatus::Fail:
                        ++summary.failed;
                        summary.counterexamples.push_back(to_string(check.theorem_id) + ":" + check.graph);
                        break;
                    case CheckStatus::Error:
                        ++summary.errored;
                        summary.counterexamples.push_back(to_string(check.theorem_id) + ":" + check.graph);
                        break;
                }
                if (options.include_skipped || check.status() != CheckStatus::Skip) emit(check);
            }
        }
    }
    return summary;
}

SuiteSummary run_suite(const std::vector<TheoremId>& ids, const std::vector<Graph>& graphs,
                       const std::function<void(const TheoremCheck&)>& emit, const SuiteOptions& options) {
    std::size_t i = 0;
    return run_suite(
        ids, [&]() -> std::optional<Graph> { return i < graphs.size() ? std::optional<Graph>(graphs[i++]) : std::nullopt; },
        emit, options);
}

}  // namespace graph_energy
