#pragma once

// Plain-text edge lists:
//
//   # comment to end of line
//   n 4          optional header, must precede every arc line
//   1 2          one arc per line, 1-based vertex ids
//
// Without a header the vertex count is the largest id seen.

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbound/digraph.hpp"

namespace qbound {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number; 0 for whole-document errors.
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
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

inline std::size_t parse_positive(std::string_view tok, std::size_t line, const char* what) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0) {
        throw ParseError(line, std::string("expected a positive integer ") + what + ", got '" +
                                   std::string(tok) + "'");
    }
    return v;
}

}  // namespace detail

inline Digraph parse_edge_list(std::istream& in) {
    std::optional<std::size_t> declared_n;
    std::vector<Arc> arcs;
    std::size_t max_id = 0;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = detail::split_ws(line);
        if (tok.empty()) continue;
        if (tok[0] == "n") {
            if (declared_n || !arcs.empty()) throw ParseError(line_no, "header 'n <count>' must come first and only once");
            if (tok.size() != 2) throw ParseError(line_no, "header must read 'n <count>'");
            declared_n = detail::parse_positive(tok[1], line_no, "vertex count");
            continue;
        }
        if (tok.size() != 2) throw ParseError(line_no, "expected '<i> <j>'");
        const std::size_t i = detail::parse_positive(tok[0], line_no, "vertex id");
        const std::size_t j = detail::parse_positive(tok[1], line_no, "vertex id");
        if (i == j) throw ParseError(line_no, "loop at vertex " + std::to_string(i));
        if (declared_n && (i > *declared_n || j > *declared_n)) {
            throw ParseError(line_no, "vertex id exceeds declared n = " + std::to_string(*declared_n));
        }
        max_id = std::max({max_id, i, j});
        arcs.push_back({i - 1, j - 1});
    }
    if (arcs.empty()) throw ParseError(line_no, "edge list contains no arcs");
    return Digraph::from_arc_list(declared_n.value_or(max_id), arcs);
}

inline Digraph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

inline Digraph read_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_edge_list(in);
}

inline std::string serialize_edge_list(const Digraph& g) {
    std::string out = "n " + std::to_string(g.order()) + "\n";
    for (const Arc& a : g.arcs()) {
        out += std::to_string(a.tail + 1);
        out += ' ';
        out += std::to_string(a.head + 1);
        out += '\n';
    }
    return out;
}

}  // namespace qbound
