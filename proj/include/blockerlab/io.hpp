#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "blockerlab/graph.hpp"

namespace blockerlab {

namespace detail {

/// Next line that is neither blank nor a '#' comment; false at EOF.
inline bool next_data_line(std::istream& in, std::string& line, int& line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        return true;
    }
    return false;
}

[[noreturn]] inline void parse_error(int line_no, const std::string& what) {
    throw InvalidInput("line " + std::to_string(line_no) + ": " + what);
}

/// Reads exactly `count` integers from one line and rejects trailing tokens.
inline std::vector<long long> read_ints(const std::string& line, std::size_t count, int line_no) {
    std::istringstream ls(line);
    std::vector<long long> out;
    long long x = 0;
    while (ls >> x) out.push_back(x);
    if (!ls.eof()) parse_error(line_no, "expected integers");
    if (out.size() != count)
        parse_error(line_no, "expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()));
    return out;
}

}  // namespace detail

/// Parses `n m` followed by m lines `u v` (0-based). Lines starting with '#'
/// and blank lines are skipped.
inline Graph read_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!detail::next_data_line(in, line, line_no)) throw InvalidInput("empty graph file");
    auto header = detail::read_ints(line, 2, line_no);
    if (header[0] < 0 || header[1] < 0) detail::parse_error(line_no, "negative header value");
    if (header[0] > 100000) detail::parse_error(line_no, "vertex count too large");
    Graph g(static_cast<int>(header[0]));
    for (long long i = 0; i < header[1]; ++i) {
        if (!detail::next_data_line(in, line, line_no))
            throw InvalidInput("expected " + std::to_string(header[1]) + " edges, file ended after " + std::to_string(i));
        auto uv = detail::read_ints(line, 2, line_no);
        if (uv[0] < 0 || uv[1] < 0 || uv[0] >= header[0] || uv[1] >= header[0])
            detail::parse_error(line_no, "vertex out of range");
        try {
            g.add_edge(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
        } catch (const InvalidInput& e) {
            detail::parse_error(line_no, e.what());
        }
    }
    if (detail::next_data_line(in, line, line_no)) detail::parse_error(line_no, "trailing data after edge list");
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

inline Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_graph(in);
}

/// Canonical text form: header plus edges in sorted order.
inline std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

/// FNV-1a of a text, as 16 hex digits.
inline std::string text_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

/// Digest of the canonical text of a graph.
inline std::string graph_digest(const Graph& g) { return text_digest(format_graph(g)); }

}  // namespace blockerlab
