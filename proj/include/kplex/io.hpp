#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "kplex/graph.hpp"

namespace kplex {

enum class GraphFormat { edge_list, dimacs };

/// Malformed input; line() is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t b = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > b) out.push_back(s.substr(b, i - b));
    }
    return out;
}

inline Label parse_label(std::string_view tok, std::size_t line) {
    Label v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size())
        throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'", line);
    return v;
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

inline bool is_comment(std::string_view first) {
    return first.front() == '#' || first.front() == '%' || first == "c";
}

inline Graph from_labeled_edges(const std::vector<std::pair<Label, Label>>& edges, std::vector<Label> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto id = [&](Label l) { return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
    std::vector<std::pair<int, int>> internal;
    internal.reserve(edges.size());
    for (auto [a, b] : edges) internal.emplace_back(id(a), id(b));
    const int n = static_cast<int>(labels.size());
    return Graph::from_edges(n, internal, std::move(labels));
}

inline Graph parse_dimacs(const std::vector<Line>& lines) {
    std::optional<Label> n;
    std::vector<std::pair<Label, Label>> edges;
    for (const auto& ln : lines) {
        const auto& t = ln.tokens;
        if (t[0] == "p") {
            if (n) throw ParseError("duplicate problem line", ln.number);
            if (t.size() != 4) throw ParseError("expected 'p <format> <n> <m>'", ln.number);
            n = parse_label(t[2], ln.number);
            parse_label(t[3], ln.number);
        } else if (t[0] == "e") {
            if (!n) throw ParseError("edge before problem line", ln.number);
            if (t.size() != 3) throw ParseError("expected 'e <u> <v>'", ln.number);
            const Label u = parse_label(t[1], ln.number), v = parse_label(t[2], ln.number);
            if (u < 1 || v < 1 || u > *n || v > *n) throw ParseError("vertex out of range 1.." + std::to_string(*n), ln.number);
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unexpected line type '" + std::string(t[0]) + "'", ln.number);
        }
    }
    if (!n) throw ParseError("missing problem line", 0);
    std::vector<Label> labels;
    for (Label i = 1; i <= *n; ++i) labels.push_back(i);
    return from_labeled_edges(edges, std::move(labels));
}

// A leading two-number line is a header "n m" when the rest of the file has
// exactly m edge lines over at most n distinct labels.
inline Graph parse_edge_list(const std::vector<Line>& lines) {
    std::vector<std::pair<Label, Label>> edges;
    std::vector<Label> labels;
    for (const auto& ln : lines) {
        if (ln.tokens.size() != 2) throw ParseError("expected 'u v'", ln.number);
        const Label u = parse_label(ln.tokens[0], ln.number), v = parse_label(ln.tokens[1], ln.number);
        edges.emplace_back(u, v);
        labels.push_back(u);
        labels.push_back(v);
    }
    if (!edges.empty()) {
        const auto [hn, hm] = edges.front();
        std::vector<Label> rest(labels.begin() + 2, labels.end());
        std::sort(rest.begin(), rest.end());
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        if (hm == edges.size() - 1 && rest.size() <= hn) {
            edges.erase(edges.begin());
            labels = std::move(rest);
            // With a header and labels inside 0..n-1, keep isolated vertices.
            if (labels.empty() || labels.back() < hn)
                for (Label i = 0; i < hn; ++i) labels.push_back(i);
        }
    }
    return from_labeled_edges(edges, std::move(labels));
}

}  // namespace detail

/// Reads an edge list or DIMACS clique file. Without an explicit format the
/// first non-comment token decides: "p" means DIMACS.
inline Graph parse_graph(std::istream& in, std::optional<GraphFormat> format = std::nullopt) {
    std::vector<std::string> raw;
    std::vector<detail::Line> lines;
    std::string buf;
    while (std::getline(in, buf)) raw.push_back(std::move(buf));
    for (std::size_t i = 0; i < raw.size(); ++i) {
        auto toks = detail::split_ws(raw[i]);
        if (toks.empty() || detail::is_comment(toks.front())) continue;
        lines.push_back({i + 1, std::move(toks)});
    }
    if (!format) format = (!lines.empty() && lines.front().tokens.front() == "p") ? GraphFormat::dimacs : GraphFormat::edge_list;
    return *format == GraphFormat::dimacs ? detail::parse_dimacs(lines) : detail::parse_edge_list(lines);
}

inline Graph parse_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    return parse_graph(in, format);
}

inline Graph parse_graph_string(std::string_view text, std::optional<GraphFormat> format = std::nullopt) {
    std::istringstream in{std::string(text)};
    return parse_graph(in, format);
}

/// Edge list with an "n m" header, edges as original labels.
inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << g.label(u) << ' ' << g.label(v) << '\n';
}

inline void write_dimacs(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

}  // namespace kplex
