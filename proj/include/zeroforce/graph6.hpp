#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace zf {

struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline int g6_char(std::string_view s, std::size_t i) {
    if (i >= s.size()) throw parse_error("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (c < 63 || c > 126) throw parse_error("graph6: character outside 63..126");
    return c - 63;
}

}  // namespace detail

/// Decode one graph6 line (optional ">>graph6<<" header allowed).
inline Graph parse_graph6(std::string_view line) {
    constexpr std::string_view header = ">>graph6<<";
    if (line.substr(0, header.size()) == header) line.remove_prefix(header.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty()) throw parse_error("graph6: empty input");

    std::size_t pos = 0;
    long long n;
    if (line[0] != '~') {
        n = detail::g6_char(line, pos++);
    } else {
        ++pos;
        if (pos < line.size() && line[pos] == '~')
            throw parse_error("graph6: vertex count beyond supported range");
        n = 0;
        for (int k = 0; k < 3; ++k) n = (n << 6) | detail::g6_char(line, pos++);
        if (n < 63) throw parse_error("graph6: malformed length prefix");
    }
    if (n > VertexSet::kMaxVertices)
        throw parse_error("graph6: vertex count exceeds configured cap");

    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    long long nchars = (nbits + 5) / 6;
    if (static_cast<long long>(line.size() - pos) != nchars)
        throw parse_error("graph6: wrong body length");

    long long bit = 0;
    for (long long k = 0; k < nchars; ++k) {
        int word = detail::g6_char(line, pos + k);
        for (int b = 5; b >= 0; --b, ++bit) {
            int val = (word >> b) & 1;
            if (bit >= nbits) {
                if (val) throw parse_error("graph6: nonzero padding bits");
                continue;
            }
            if (val) {
                // upper triangle in column order: columns j = 1..n-1, rows i < j
                long long t = bit;
                int j = 1;
                while (t >= j) t -= j, ++j;
                g.add_edge(static_cast<int>(t), j);
            }
        }
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int k = 12; k >= 0; k -= 6)
            out.push_back(static_cast<char>(((n >> k) & 63) + 63));
    }
    int word = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            word = (word << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = nb = 0;
            }
        }
    }
    if (nb) out.push_back(static_cast<char>((word << (6 - nb)) + 63));
    return out;
}

/// Plain edge-list text: vertex count first, then "u v" pairs.
/// Duplicate edges collapse; self-loops and bad indices are errors.
inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n;
    if (!(in >> n)) throw parse_error("edge list: missing vertex count");
    if (n < 0 || n > VertexSet::kMaxVertices)
        throw parse_error("edge list: vertex count out of range");
    Graph g(static_cast<int>(n));
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw parse_error("edge list: dangling endpoint");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge list: endpoint out of range");
        if (u == v) throw parse_error("edge list: self-loop");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

}  // namespace zf
