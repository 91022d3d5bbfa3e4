#include "graph_energy/graph6.hpp"

#include "graph_energy/errors.hpp"

namespace graph_energy {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
    throw ParseError("graph6 byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    if (text.starts_with(kHeader)) {
        text.remove_prefix(kHeader.size());
        base = kHeader.size();
    }
    if (text.empty()) fail(base, "empty input");

    const auto head = static_cast<unsigned char>(text[0]);
    if (head == 126) fail(base, "extended size header (n > 62) is not supported");
    if (head < 63 || head > 126) fail(base, "size byte out of range 63..126");
    const int n = head - 63;

    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes)
        fail(base + std::min(text.size(), 1 + nbytes),
             "expected " + std::to_string(1 + nbytes) + " bytes for n=" + std::to_string(n) + ", got " +
                 std::to_string(text.size()));

    for (std::size_t k = 1; k < text.size(); ++k) {
        const auto c = static_cast<unsigned char>(text[k]);
        if (c < 63 || c > 126) fail(base + k, "byte out of range 63..126");
    }

    GraphBuilder b(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            const int group = static_cast<unsigned char>(text[1 + bit / 6]) - 63;
            if ((group >> (5 - bit % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (nbits % 6 != 0) {
        const int group = static_cast<unsigned char>(text.back()) - 63;
        const int pad = static_cast<int>(6 - nbits % 6);
        if (group & ((1 << pad) - 1)) fail(base + text.size() - 1, "nonzero padding bits");
    }
    return b.build();
}

std::string emit_graph6(const Graph& g) {
    const int n = g.order();
    if (n > kGraph6MaxOrder)
        throw CapacityError("graph6 short form supports n <= 62, got n=" + std::to_string(n));
    const std::size_t nbits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    std::string out(1 + (nbits + 5) / 6, static_cast<char>(63));
    out[0] = static_cast<char>(63 + n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.adjacent(i, j)) out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
        }
    }
    return out;
}

CatalogReader::CatalogReader(const std::filesystem::path& path)
    : owned_(std::make_unique<std::ifstream>(path)), in_(owned_.get()) {
    if (!*owned_) throw std::runtime_error("cannot open catalog " + path.string());
}

CatalogReader::CatalogReader(std::istream& in) : in_(&in) {}

std::optional<Graph> CatalogReader::next() {
    std::string line;
    while (std::getline(*in_, line)) {
        ++line_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        try {
            return parse_graph6(line);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_) + ": " + e.what());
        }
    }
    if (in_->bad()) throw std::runtime_error("I/O error reading catalog at line " + std::to_string(line_));
    return std::nullopt;
}

std::vector<Graph> read_catalog(const std::filesystem::path& path) {
    CatalogReader reader(path);
    std::vector<Graph> out;
    while (auto g = reader.next()) out.push_back(std::move(*g));
    return out;
}

}  // namespace graph_energy
