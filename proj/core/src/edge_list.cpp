#include "rdom/edge_list.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace rdom {

namespace {

constexpr long long kMaxValue = 1000000000;  // generous guard on any count

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parse a line of exactly `count` nonnegative integers separated by single
// spaces, with no padding. Line numbers are 1-based physical lines.
std::vector<long long> parse_numbers(const std::string& line, int lineno, int count) {
    std::vector<long long> out;
    std::size_t pos = 0;
    for (int t = 0; t < count; ++t) {
        if (t > 0) {
            if (pos >= line.size() || line[pos] != ' ')
                throw ParseError(lineno, "expected a single space between numbers");
            ++pos;
        }
        if (pos >= line.size() || !is_digit(line[pos]))
            throw ParseError(lineno, "expected a nonnegative integer");
        long long value = 0;
        while (pos < line.size() && is_digit(line[pos])) {
            value = value * 10 + (line[pos] - '0');
            if (value > kMaxValue) throw ParseError(lineno, "number too large");
            ++pos;
        }
        out.push_back(value);
    }
    if (pos != line.size())
        throw ParseError(lineno, "unexpected trailing characters");
    return out;
}

}  // namespace

Graph from_edge_list(const std::string& text) {
    // Split into physical lines; a single trailing newline is not a line.
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos) {
            if (start < text.size()) lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }

    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        const std::string& line = lines[i];
        if (!line.empty() && line[0] == '#') continue;
        if (line.empty()) throw ParseError(lineno, "empty line");

        if (n < 0) {
            auto header = parse_numbers(line, lineno, 2);
            n = header[0];
            m = header[1];
            continue;
        }
        if (static_cast<long long>(edges.size()) == m)
            throw ParseError(lineno, "content after the declared " +
                                         std::to_string(m) + " edge(s)");
        auto nums = parse_numbers(line, lineno, 2);
        long long u = nums[0], v = nums[1];
        if (u >= n || v >= n)
            throw ParseError(lineno, "edge endpoint out of range for order " +
                                         std::to_string(n));
        if (u == v) throw ParseError(lineno, "self-loop");
        const int lo = static_cast<int>(std::min(u, v));
        const int hi = static_cast<int>(std::max(u, v));
        if (!seen.insert({lo, hi}).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(lo) +
                                         " " + std::to_string(hi));
        edges.emplace_back(lo, hi);
    }

    const int eof_line = static_cast<int>(lines.size()) + 1;
    if (n < 0) throw ParseError(eof_line, "missing header line");
    if (static_cast<long long>(edges.size()) < m)
        throw ParseError(eof_line, "expected " + std::to_string(m) +
                                       " edge(s), found " +
                                       std::to_string(edges.size()));
    return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace rdom
