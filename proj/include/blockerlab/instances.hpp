#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "blockerlab/io.hpp"

namespace blockerlab {

/// Weighted positive 2-SAT: clauses (x or y) over variables 0..variables-1,
/// at most k variables set true.
struct SatInstance {
    int variables = 0;
    std::vector<std::pair<int, int>> clauses;
    int k = 0;
};

/// Minimum sum of squares: split the indices of `a` into h groups so that
/// the sum over groups of (group total)^2 is at most J.
struct MssInstance {
    std::vector<int> a;
    int h = 1;
    long long J = 0;
};

/// Checks a SAT instance and returns it with clauses ordered (x < y), sorted
/// and deduplicated. Rejects an empty clause list and clauses repeating a
/// variable.
inline SatInstance normalized(SatInstance s) {
    if (s.variables < 1) throw InvalidInput("SAT instance needs at least one variable");
    if (s.k < 0) throw InvalidInput("SAT budget k must be non-negative");
    if (s.clauses.empty()) throw InvalidInput("SAT instance needs at least one clause");
    for (auto& [x, y] : s.clauses) {
        if (x < 0 || y < 0 || x >= s.variables || y >= s.variables) throw InvalidInput("clause variable out of range");
        if (x == y) throw InvalidInput("clause repeats variable " + std::to_string(x));
        if (x > y) std::swap(x, y);
    }
    std::sort(s.clauses.begin(), s.clauses.end());
    s.clauses.erase(std::unique(s.clauses.begin(), s.clauses.end()), s.clauses.end());
    return s;
}

inline void validate(const MssInstance& m) {
    if (m.a.empty()) throw InvalidInput("MSS instance needs at least one number");
    if (m.h < 1) throw InvalidInput("MSS instance needs h >= 1");
    for (int x : m.a)
        if (x < 1) throw InvalidInput("MSS numbers must be positive");
}

/// True when every clause has a true variable; `positives` lists the true ones.
inline bool is_satisfying(const SatInstance& s, const std::vector<int>& positives) {
    std::vector<char> on(static_cast<std::size_t>(s.variables), 0);
    for (int x : positives) {
        if (x < 0 || x >= s.variables) return false;
        on[static_cast<std::size_t>(x)] = 1;
    }
    for (const auto& [x, y] : s.clauses)
        if (!on[static_cast<std::size_t>(x)] && !on[static_cast<std::size_t>(y)]) return false;
    return true;
}

/// `p wp2sat <variables> <clauses> <k>` followed by one `x y` line per clause.
inline SatInstance read_sat(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!detail::next_data_line(in, line, line_no)) throw InvalidInput("empty SAT file");
    std::istringstream head(line);
    std::string p, tag;
    long long vars = 0, count = 0, k = 0;
    if (!(head >> p >> tag >> vars >> count >> k) || p != "p" || tag != "wp2sat")
        detail::parse_error(line_no, "expected 'p wp2sat <variables> <clauses> <k>'");
    std::string rest;
    if (head >> rest) detail::parse_error(line_no, "trailing data in header");
    if (vars < 0 || count < 0 || vars > 100000 || count > 1000000) detail::parse_error(line_no, "header value out of range");
    SatInstance s;
    s.variables = static_cast<int>(vars);
    s.k = static_cast<int>(k);
    for (long long i = 0; i < count; ++i) {
        if (!detail::next_data_line(in, line, line_no)) throw InvalidInput("SAT file ended after " + std::to_string(i) + " clauses");
        auto xy = detail::read_ints(line, 2, line_no);
        s.clauses.push_back({static_cast<int>(xy[0]), static_cast<int>(xy[1])});
    }
    if (detail::next_data_line(in, line, line_no)) detail::parse_error(line_no, "trailing data after clauses");
    return normalized(s);
}

/// `<l> <h> <J>` followed by a line with the l numbers.
inline MssInstance read_mss(std::istream& in) {
    std::string line;
    int line_no = 0;
    if (!detail::next_data_line(in, line, line_no)) throw InvalidInput("empty MSS file");
    auto head = detail::read_ints(line, 3, line_no);
    if (head[0] < 1 || head[0] > 100000) detail::parse_error(line_no, "bad tuple length");
    if (!detail::next_data_line(in, line, line_no)) throw InvalidInput("MSS file is missing the number line");
    auto nums = detail::read_ints(line, static_cast<std::size_t>(head[0]), line_no);
    MssInstance m;
    m.h = static_cast<int>(head[1]);
    m.J = head[2];
    for (auto x : nums) m.a.push_back(static_cast<int>(x));
    if (detail::next_data_line(in, line, line_no)) detail::parse_error(line_no, "trailing data");
    validate(m);
    return m;
}

/// Canonical text of a normalized SAT instance.
inline std::string format_sat(const SatInstance& s) {
    std::ostringstream out;
    out << "p wp2sat " << s.variables << ' ' << s.clauses.size() << ' ' << s.k << '\n';
    for (const auto& [x, y] : s.clauses) out << x << ' ' << y << '\n';
    return out.str();
}

inline std::string format_mss(const MssInstance& m) {
    std::ostringstream out;
    out << m.a.size() << ' ' << m.h << ' ' << m.J << '\n';
    for (std::size_t i = 0; i < m.a.size(); ++i) out << (i ? " " : "") << m.a[i];
    out << '\n';
    return out.str();
}

inline SatInstance load_sat(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_sat(in);
}

inline MssInstance load_mss(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return read_mss(in);
}

}  // namespace blockerlab
