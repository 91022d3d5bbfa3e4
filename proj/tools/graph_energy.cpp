// graph-energy: command-line front end for spectra, invariants, families,
// enumeration and the theorem-checking harness.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "graph_energy/enumerate.hpp"
#include "graph_energy/errors.hpp"
#include "graph_energy/families.hpp"
#include "graph_energy/graph6.hpp"
#include "graph_energy/harness.hpp"

namespace {

using namespace graph_energy;
using nlohmann::json;

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kCapacity = 3 };

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string paint(const std::string& text, const char* code) {
    return use_color() ? std::string("\033[") + code + "m" + text + "\033[0m" : text;
}

/// Accepts a graph6 string or a `family:` spec.
Graph graph_argument(const std::string& text) {
    if (text.starts_with("family:")) return FamilySpec::parse(text).build();
    return parse_graph6(text);
}

json integer_json(Integer v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

void print_analysis(const AnalysisReport& r, bool pretty) {
    if (!pretty) {
        std::cout << to_json(r).dump() << '\n';
        return;
    }
    std::cout << "graph " << r.graph6 << "  n=" << r.n << " m=" << r.m << '\n';
    std::cout << "  spectrum:";
    for (double x : r.spectrum) std::cout << ' ' << x;
    std::cout << "\n  energy " << r.energy << "  rank " << r.rank << "  |a_r| " << r.a_r_abs << "  chi " << r.chi
              << "  chi(complement) " << r.chi_complement << "  positive " << r.positive_count << '\n';
    std::cout << "  theorems:";
    for (TheoremId id : all_theorems()) std::cout << ' ' << to_string(id) << '=' << r.theorem_flags.at(to_string(id));
    std::cout << '\n';
}

int run_analyze(const std::string& g6, const std::string& file, const std::string& family, bool pretty) {
    if (!pretty) std::cout << tolerance_header().dump() << '\n';
    if (!g6.empty()) print_analysis(analyze(graph_argument(g6)), pretty);
    if (!family.empty()) print_analysis(analyze(FamilySpec::parse(family).build()), pretty);
    if (!file.empty()) {
        CatalogReader reader{std::filesystem::path(file)};
        while (auto g = reader.next()) print_analysis(analyze(*g), pretty);
    }
    return kOk;
}

struct VerifyArgs {
    std::string theorems = "all";
    int max_n = -1;
    std::string file;
    std::vector<std::string> families;
    bool trees = false;
    int jobs = 1;
    std::string summary_file;
    bool include_skipped = false;
    bool pretty = false;
};

int run_verify(const VerifyArgs& a) {
    const auto ids = parse_theorem_list(a.theorems);

    std::vector<Graph> graphs;
    if (a.max_n >= 0) {
        for (int n = 1; n <= a.max_n; ++n) {
            auto level = a.trees ? all_trees(n) : all_graphs({n});
            graphs.insert(graphs.end(), level.begin(), level.end());
        }
    }
    for (const auto& spec : a.families) graphs.push_back(FamilySpec::parse(spec).build());
    std::optional<CatalogReader> reader;
    if (!a.file.empty()) reader.emplace(std::filesystem::path(a.file));

    std::size_t i = 0;
    auto next = [&]() -> std::optional<Graph> {
        if (i < graphs.size()) return graphs[i++];
        if (reader) return reader->next();
        return std::nullopt;
    };
    if (!a.pretty) std::cout << tolerance_header().dump() << '\n';
    auto emit = [&](const TheoremCheck& c) {
        if (!a.pretty) {
            std::cout << to_json(c).dump() << '\n';
            return;
        }
        const auto status = c.status();
        const char* code = status == CheckStatus::Pass ? "32" : status == CheckStatus::Skip ? "90" : "31";
        std::cout << to_string(c.theorem_id) << '\t' << c.graph << '\t' << paint(to_string(status), code) << '\t'
                  << c.lhs << '\t' << c.rhs << '\t' << c.detail << '\n';
    };
    const SuiteSummary summary =
        run_suite(ids, next, emit, {.jobs = a.jobs, .include_skipped = a.include_skipped});
    std::cout.flush();

    const std::string text = to_json(summary).dump();
    if (!a.summary_file.empty()) {
        std::ofstream out(a.summary_file);
        if (!out) throw std::runtime_error("cannot write " + a.summary_file);
        out << text << '\n';
    } else {
        std::cerr << text << '\n';
    }
    if (summary.errored > 0 && summary.failed == 0) return kCapacity;
    return summary.ok() ? kOk : kFailure;
}

int run_classify(const std::string& g6, bool pretty) {
    const Graph g = graph_argument(g6);
    json j = to_json(classify(g));
    j["record"] = "classification";
    j["graph6"] = emit_graph6(g);
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
    return kOk;
}

int run_family(const std::string& spec_text, bool emit_only) {
    const FamilySpec spec = FamilySpec::parse(spec_text);
    const Graph g = spec.build();
    if (emit_only) {
        std::cout << emit_graph6(g) << '\n';
        return kOk;
    }
    std::cout << json{{"record", "family"}, {"family", spec.to_string()}, {"graph6", emit_graph6(g)},
                      {"n", g.order()},     {"m", g.size()},              {"edges", g.edges()}}
                     .dump()
              << '\n';
    return kOk;
}

int run_enumerate(int n, bool connected, bool trees, bool bipartite) {
    for (const Graph& g : all_graphs({n, connected, bipartite, trees})) std::cout << emit_graph6(g) << '\n';
    return kOk;
}

int run_spectrum(const std::string& g6, bool with_charpoly, bool pretty) {
    const Graph g = graph_argument(g6);
    const SpectrumResult s = eigenvalues(g);
    json j{{"record", "spectrum"},
           {"graph6", emit_graph6(g)},
           {"eigenvalues", s.eigenvalues},
           {"energy", s.energy},
           {"positive_count", s.positive_count},
           {"max_residual", s.max_residual.value_or(0.0)}};
    if (with_charpoly) {
        const CharPoly p = char_poly(g);
        json coeffs = json::array();
        for (Integer c : p.coeffs) coeffs.push_back(integer_json(c));
        j["char_poly"] = coeffs;
        j["rank"] = p.rank;
        j["a_r_abs"] = integer_json(p.a_r_abs);
    }
    std::cout << (pretty ? j.dump(2) : j.dump()) << '\n';
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Graph energy toolkit: spectra, exact invariants, named families and theorem checks"};
    app.require_subcommand(1, 1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output instead of JSON lines");

    std::string analyze_g6, analyze_file, analyze_family;
    auto* analyze_cmd = app.add_subcommand("analyze", "Full analysis report for one or more graphs");
    analyze_cmd->add_option("graph", analyze_g6, "graph6 string or family:<spec>");
    analyze_cmd->add_option("--file", analyze_file, "graph6 catalog")->check(CLI::ExistingFile);
    analyze_cmd->add_option("--family", analyze_family, "Family spec, e.g. A:7,4");
    analyze_cmd->callback([&] {
        if (analyze_g6.empty() && analyze_file.empty() && analyze_family.empty())
            throw CLI::ValidationError("analyze", "one of <graph>, --file or --family is required");
    });

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "Run theorem checks over a graph source");
    verify_cmd->add_option("--theorems", verify.theorems, "T1,...,T15 or all")->capture_default_str();
    verify_cmd->add_option("--max-n", verify.max_n, "Enumerate all graphs with 1..N vertices");
    verify_cmd->add_flag("--trees", verify.trees, "With --max-n: enumerate trees instead");
    verify_cmd->add_option("--file", verify.file, "graph6 catalog")->check(CLI::ExistingFile);
    verify_cmd->add_option("--family", verify.families, "Family spec(s) to include");
    verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--summary-file", verify.summary_file, "Write the summary JSON here instead of stderr");
    verify_cmd->add_flag("--include-skipped", verify.include_skipped, "Also emit checks whose hypothesis fails");
    verify_cmd->callback([&] {
        if (verify.max_n < 0 && verify.file.empty() && verify.families.empty())
            throw CLI::ValidationError("verify", "one of --max-n, --file or --family is required");
    });

    std::string classify_g6;
    auto* classify_cmd = app.add_subcommand("classify", "Structural classification record");
    classify_cmd->add_option("graph", classify_g6, "graph6 string or family:<spec>")->required();

    std::string family_spec;
    bool emit_graph6_only = false;
    auto* family_cmd = app.add_subcommand("family", "Build a named family member");
    family_cmd->add_option("spec", family_spec, "e.g. A:7,4, B:5, KM:1,1,3, H2")->required();
    family_cmd->add_flag("--emit-graph6", emit_graph6_only, "Print only the graph6 string");

    int enum_n = 0;
    bool enum_connected = false, enum_trees = false, enum_bipartite = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "All non-isomorphic graphs on N vertices as graph6");
    enumerate_cmd->add_option("--n", enum_n, "Vertex count")->required();
    enumerate_cmd->add_flag("--connected", enum_connected);
    enumerate_cmd->add_flag("--trees", enum_trees);
    enumerate_cmd->add_flag("--bipartite", enum_bipartite);

    std::string spectrum_g6;
    bool with_charpoly = false;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "Adjacency spectrum and energy");
    spectrum_cmd->add_option("graph", spectrum_g6, "graph6 string or family:<spec>")->required();
    spectrum_cmd->add_flag("--charpoly", with_charpoly, "Include the exact characteristic polynomial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze_g6, analyze_file, analyze_family, pretty);
        if (*verify_cmd) {
            verify.pretty = pretty;
            return run_verify(verify);
        }
        if (*classify_cmd) return run_classify(classify_g6, pretty);
        if (*family_cmd) return run_family(family_spec, emit_graph6_only);
        if (*enumerate_cmd) return run_enumerate(enum_n, enum_connected, enum_trees, enum_bipartite);
        if (*spectrum_cmd) return run_spectrum(spectrum_g6, with_charpoly, pretty);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << '\n';
        return kCapacity;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kCapacity;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}
