#pragma once

#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "graph_energy/coloring.hpp"
#include "graph_energy/exact.hpp"
#include "graph_energy/graph.hpp"
#include "graph_energy/recognizers.hpp"
#include "graph_energy/spectrum.hpp"

namespace graph_energy {

/// Identifiers T1..T15 of the checks the harness knows.
enum class TheoremId { T1 = 1, T2, T3, T4, T5, T6, T7, T8, T9, T10, T11, T12, T13, T14, T15 };

inline constexpr int kTheoremCount = 15;

std::string to_string(TheoremId id);
/// Parses "T7" (case-insensitive); InputError otherwise.
TheoremId parse_theorem_id(std::string_view text);
/// "all" or a comma-separated list such as "T1,T7,T11".
std::vector<TheoremId> parse_theorem_list(std::string_view text);
std::vector<TheoremId> all_theorems();

enum class CheckStatus { Pass, Fail, Skip, Error };
std::string to_string(CheckStatus status);

/// One theorem evaluated on one graph.
struct TheoremCheck {
    TheoremId theorem_id = TheoremId::T1;
    std::string graph;  // graph6
    bool hypothesis_holds = false;
    /// Set only when the hypothesis holds and no error occurred.
    std::optional<bool> passed;
    double lhs = 0.0;
    double rhs = 0.0;
    std::string detail;
    bool errored = false;

    CheckStatus status() const;
};

nlohmann::json to_json(const TheoremCheck& check);

/// Lazily computed invariants of one graph, shared across checks.
class GraphContext {
public:
    explicit GraphContext(Graph g);

    const Graph& graph() const { return g_; }
    const Graph& complement_graph();
    const std::string& graph6();
    const SpectrumResult& spectrum();
    const SpectrumResult& complement_spectrum();
    const CharPoly& char_poly();
    int rank();
    const ColoringResult& coloring();
    const ColoringResult& complement_coloring();
    bool connected();
    bool bipartite();
    bool tree();

private:
    Graph g_;
    std::optional<Graph> complement_;
    std::optional<std::string> graph6_;
    std::optional<SpectrumResult> spectrum_, complement_spectrum_;
    std::optional<CharPoly> char_poly_;
    std::optional<int> rank_;
    std::optional<ColoringResult> coloring_, complement_coloring_;
    std::optional<bool> connected_, bipartite_;
};

TheoremCheck run_check(TheoremId id, GraphContext& ctx);
TheoremCheck run_check(TheoremId id, const Graph& g);

/// (r/2)K_2 plus isolated vertices: maximum degree at most one.
bool is_matching_union(const Graph& g);

/// Graph families excluded from the E(G) + E(complement) >= 2n bound: G or
/// its complement is isomorphic to a complete graph, A_{k,k-1}, B_1, B_2 or
/// A_{3,1}.
bool sum_bound_excluded(const Graph& g);

/// One numeric claim about a specific small graph.
struct SpotBound {
    std::string name;        // e.g. "lambda6(H1) < -1.8"
    Graph graph;
    int eigenvalue_index;    // 1-based; 0 means energy
    char relation;           // '<', '>' or '='
    double value;
    double tolerance;        // only used for '='
};

std::vector<SpotBound> spot_bounds();

struct SpotOutcome {
    double observed = 0.0;
    bool holds = false;
};

SpotOutcome evaluate(const SpotBound& bound);

/// Coefficients of x (x+1)^(n-2) (x^3 + (2-n)x^2 - (1+n)x + 2n - 4), low to high, n >= 2.
std::vector<Integer> b_family_char_poly(int n);

struct AnalysisReport {
    std::string graph6;
    int n = 0;
    int m = 0;
    std::vector<double> spectrum;
    double energy = 0.0;
    int rank = 0;
    std::string a_r_abs;
    int chi = 0;
    int chi_complement = 0;
    int positive_count = 0;
    ClassificationRecord classification;
    std::map<std::string, std::string> theorem_flags;
};

/// Full report; cross-checks rank against the numeric spectrum and the
/// characteristic polynomial before returning (NumericalError on mismatch).
AnalysisReport analyze(const Graph& g);

nlohmann::json to_json(const AnalysisReport& report);
nlohmann::json to_json(const ClassificationRecord& record);
nlohmann::json tolerance_header();

struct SuiteSummary {
    long checked = 0;
    long hypothesis_skipped = 0;
    long passed = 0;
    long failed = 0;
    long errored = 0;
    /// graph6 of every graph with a failed or errored check, with theorem id.
    std::vector<std::string> counterexamples;

    bool ok() const { return failed == 0 && errored == 0; }
};

nlohmann::json to_json(const SuiteSummary& summary);

struct SuiteOptions {
    int jobs = 1;
    /// Graphs per parallel batch; output order is input order regardless.
    std::size_t batch = 256;
    /// Emit records for skipped checks too.
    bool include_skipped = false;
};

/// Run every theorem in `ids` on each graph supplied by `next` (which returns
/// nullopt at end of input). Each check is passed to `emit` in input order.
SuiteSummary run_suite(const std::vector<TheoremId>& ids, const std::function<std::optional<Graph>()>& next,
                       const std::function<void(const TheoremCheck&)>& emit, const SuiteOptions& options = {});

SuiteSummary run_suite(const std::vector<TheoremId>& ids, const std::vector<Graph>& graphs,
                       const std::function<void(const TheoremCheck&)>& emit, const SuiteOptions& options = {});

}  // namespace graph_energy
