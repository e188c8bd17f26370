#include "sepdepth/pace_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "sepdepth/errors.hpp"

namespace sepdepth {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint64_t parse_number(std::string_view token, int line_no, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size())
        throw ParseError(std::string("expected ") + what + ", got '" + std::string(token) + "'",
                         line_no);
    return value;
}

// Lines with \r\n endings normalized; yields (line, 1-based number).
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = (nl == std::string_view::npos) ? text.substr(pos)
                                                               : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        ++line_no;
        fn(line, line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

} // namespace

GrDocument parse_gr(std::string_view text) {
    GrDocument doc;
    bool have_header = false;
    std::uint64_t edge_lines = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;

    for_each_line(text, [&](std::string_view line, int line_no) {
        auto tokens = split_tokens(line);
        if (tokens.empty()) return; // blank lines tolerated
        if (tokens[0] == "c") {
            doc.comments.emplace_back(line);
            return;
        }
        if (tokens[0] == "p") {
            if (have_header) throw ParseError("duplicate header", line_no);
            if (tokens.size() != 4 || tokens[1] != "tdp")
                throw ParseError("expected header 'p tdp <n> <m>'", line_no);
            doc.n = static_cast<std::uint32_t>(parse_number(tokens[2], line_no, "vertex count"));
            doc.declared_m = parse_number(tokens[3], line_no, "edge count");
            have_header = true;
            return;
        }
        if (!have_header) throw ParseError("edge before 'p tdp' header", line_no);
        if (tokens.size() != 2) throw ParseError("expected '<u> <v>'", line_no);
        auto u = parse_number(tokens[0], line_no, "endpoint");
        auto v = parse_number(tokens[1], line_no, "endpoint");
        if (u < 1 || u > doc.n || v < 1 || v > doc.n)
            throw ParseError("endpoint out of range [1, " + std::to_string(doc.n) + "]", line_no);
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
        ++edge_lines;
        auto a = static_cast<std::uint32_t>(std::min(u, v));
        auto b = static_cast<std::uint32_t>(std::max(u, v));
        if (!seen.emplace(a, b).second) ++doc.duplicates_removed;
    });

    if (!have_header) throw ParseError("missing 'p tdp <n> <m>' header", 1);
    if (edge_lines != doc.declared_m)
        throw ParseError("header declares " + std::to_string(doc.declared_m) + " edges, found " +
                             std::to_string(edge_lines),
                         0);
    doc.edges.assign(seen.begin(), seen.end());
    return doc;
}

std::string write_gr(const GrDocument& doc) {
    std::ostringstream out;
    out << "p tdp " << doc.n << ' ' << doc.edges.size() << '\n';
    for (const auto& [u, v] : doc.edges) out << u << ' ' << v << '\n';
    return out.str();
}

Graph to_graph(const GrDocument& doc) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges0;
    edges0.reserve(doc.edges.size());
    for (const auto& [u, v] : doc.edges) edges0.emplace_back(u - 1, v - 1);
    return Graph::from_edges(doc.n, edges0);
}

GrDocument from_graph(const Graph& g) {
    GrDocument doc;
    doc.n = g.vertex_count();
    for (const auto& [u, v] : g.edges()) doc.edges.emplace_back(u + 1, v + 1);
    std::sort(doc.edges.begin(), doc.edges.end());
    doc.declared_m = doc.edges.size();
    return doc;
}

std::string write_tree(const TreedepthDecomposition& t) {
    std::ostringstream out;
    out << t.height << '\n';
    for (std::int32_t p : t.parent) out << (p < 0 ? 0 : p + 1) << '\n';
    return out.str();
}

TreeDocument parse_tree(std::string_view text, std::uint32_t n) {
    TreeDocument doc;
    bool have_depth = false;
    std::uint32_t parents_read = 0;
    for_each_line(text, [&](std::string_view line, int line_no) {
        auto tokens = split_tokens(line);
        if (tokens.empty()) return;
        if (tokens.size() != 1) throw ParseError("expected a single number", line_no);
        auto value = parse_number(tokens[0], line_no, "number");
        if (!have_depth) {
            doc.depth = static_cast<std::int32_t>(value);
            have_depth = true;
            return;
        }
        if (parents_read >= n) throw ParseError("more than n parent lines", line_no);
        if (value > n) throw ParseError("parent out of range [0, " + std::to_string(n) + "]",
                                        line_no);
        doc.parent.push_back(static_cast<std::uint32_t>(value));
        ++parents_read;
    });
    if (!have_depth) throw ParseError("missing depth line", 1);
    if (parents_read != n)
        throw ParseError("expected " + std::to_string(n) + " parent lines, found " +
                             std::to_string(parents_read),
                         0);

    // parent array must encode a forest (no self-parents, no cycles)
    std::vector<std::int8_t> state(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        if (doc.parent[v] == v + 1) throw ParseError("vertex is its own parent", 0);
        std::uint32_t cur = v;
        std::vector<std::uint32_t> chain;
        while (state[cur] == 0 && doc.parent[cur] != 0) {
            state[cur] = 1;
            chain.push_back(cur);
            cur = doc.parent[cur] - 1;
            if (state[cur] == 1) throw ParseError("parent array contains a cycle", 0);
        }
        state[cur] = 2;
        for (std::uint32_t u : chain) state[u] = 2;
    }
    return doc;
}

TreedepthDecomposition to_decomposition(const TreeDocument& doc) {
    TreedepthDecomposition t;
    t.height = doc.depth;
    t.parent.reserve(doc.parent.size());
    for (std::uint32_t p : doc.parent)
        t.parent.push_back(p == 0 ? -1 : static_cast<std::int32_t>(p) - 1);
    return t;
}

} // namespace sepdepth
