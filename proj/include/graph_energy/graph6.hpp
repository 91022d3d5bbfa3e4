#pragma once

#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graph_energy/graph.hpp"

namespace graph_energy {

/// Largest order representable by the short (single-byte size) graph6 form.
inline constexpr int kGraph6MaxOrder = 62;

/// Decode a short-form graph6 string. A leading ">>graph6<<" header is accepted.
/// Throws ParseError naming the offending byte offset.
Graph parse_graph6(std::string_view text);

/// Encode g in short-form graph6. Throws CapacityError when g.order() > 62.
std::string emit_graph6(const Graph& g);

/// Sequential reader over a graph6 catalog: one graph per line, '#' comments
/// and blank lines skipped, LF or CRLF endings.
class CatalogReader {
public:
    explicit CatalogReader(const std::filesystem::path& path);
    explicit CatalogReader(std::istream& in);

    /// Next graph, or nullopt at end of input. Parse failures raise
    /// ParseError prefixed with the 1-based line number.
    std::optional<Graph> next();

    int line_number() const { return line_; }

private:
    std::unique_ptr<std::ifstream> owned_;
    std::istream* in_;
    int line_ = 0;
};

std::vector<Graph> read_catalog(const std::filesystem::path& path);

}  // namespace graph_energy
