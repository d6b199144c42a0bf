#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "graph.hpp"

namespace zf {

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path: n below 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n below 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete: n below 1");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides below 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

/// Outer cycle 0..n-1, inner vertices n..2n-1 with skip k, spokes i ~ n+i.
inline Graph generalized_petersen(int n, int k) {
    if (n < 3 || k < 1 || 2 * k >= n)
        throw std::invalid_argument("generalized_petersen: requires n >= 3, 1 <= k < n/2");
    Graph g(2 * n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        g.add_edge(i, n + i);
        g.add_edge(n + i, n + (i + k) % n);
    }
    return g;
}

inline Graph petersen() { return generalized_petersen(5, 2); }

inline Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 1) throw std::invalid_argument("circulant: n below 1");
    Graph g(n);
    for (int s : offsets) {
        if (s < 1 || 2 * s > n) throw std::invalid_argument("circulant: offset out of 1..n/2");
        for (int i = 0; i < n; ++i)
            if ((i + s) % n != i) g.add_edge(i, (i + s) % n);
    }
    return g;
}

/// The Heawood graph, LCF [5,-5]^7: C_14 plus the matching i ~ i+5 for even i.
inline Graph heawood() {
    Graph g = cycle_graph(14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

/// Uniform G(n, m) conditioned on minimum degree >= delta by rejection;
/// m itself is drawn uniformly from the feasible range. Driven entirely
/// by the supplied mt19937_64 for cross-platform reproducibility.
inline Graph random_min_degree(int n, int delta, std::mt19937_64& rng) {
    if (n < 1 || delta < 0 || delta >= n)
        throw std::invalid_argument("random_min_degree: bad parameters");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int max_m = static_cast<int>(pairs.size());
    const int min_m = (n * delta + 1) / 2;
    if (min_m > max_m) throw std::invalid_argument("random_min_degree: infeasible");
    std::uniform_int_distribution<int> pick_m(min_m, max_m);
    for (;;) {
        int m = pick_m(rng);
        // partial Fisher-Yates: the first m entries become the edge set
        for (int i = 0; i < m; ++i) {
            std::uniform_int_distribution<int> pick(i, max_m - 1);
            std::swap(pairs[i], pairs[pick(rng)]);
        }
        Graph g(n);
        for (int i = 0; i < m; ++i) g.add_edge(pairs[i].first, pairs[i].second);
        if (min_degree(g) >= delta) return g;
    }
}

namespace detail {

inline std::uint64_t triangle_key(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t key = 0;
    const int n = g.n();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            key = (key << 1) | (g.has_edge(perm[a], perm[b]) ? 1u : 0u);
    return key;
}

}  // namespace detail

/// Canonical form of a graph with n <= 11: the minimum upper-triangle
/// bit string over all vertex orderings compatible with the
/// (degree, neighbor-degree multiset) invariant.
inline std::uint64_t canonical_key(const Graph& g) {
    const int n = g.n();
    if (n > 11) throw std::invalid_argument("canonical_key: n above 11");
    std::vector<std::pair<std::vector<int>, int>> inv(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> nd;
        const VertexSet& nb = g.neighbors(v);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        nd.insert(nd.begin(), g.degree(v));
        inv[v] = {std::move(nd), v};
    }
    std::sort(inv.begin(), inv.end());

    std::vector<int> perm(n);
    std::vector<std::pair<int, int>> classes;  // [begin, end) slices of perm
    for (int i = 0; i < n; ++i) {
        perm[i] = inv[i].second;
        if (i == 0 || inv[i].first != inv[i - 1].first) classes.emplace_back(i, i + 1);
        else classes.back().second = i + 1;
    }
    for (auto [b, e] : classes) std::sort(perm.begin() + b, perm.begin() + e);

    std::uint64_t best = ~std::uint64_t{0};
    auto visit = [&](auto&& self, std::size_t ci) -> void {
        if (ci == classes.size()) {
            best = std::min(best, detail::triangle_key(g, perm));
            return;
        }
        auto [b, e] = classes[ci];
        do {
            self(self, ci + 1);
        } while (std::next_permutation(perm.begin() + b, perm.begin() + e));
    };
    visit(visit, 0);
    return best;
}

inline Graph graph_from_key(std::uint64_t key, int n) {
    Graph g(n);
    int bits = n * (n - 1) / 2;
    for (int a = 0, idx = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, ++idx)
            if ((key >> (bits - 1 - idx)) & 1u) g.add_edge(a, b);
    return g;
}

/// All graphs on n vertices up to isomorphism, by vertex augmentation
/// with canonical-form dedup. Deterministic (keys ascending).
inline std::vector<Graph> all_graphs(int n) {
    if (n < 1 || n > 8) throw std::invalid_argument("all_graphs: n outside 1..8");
    std::vector<std::uint64_t> level = {0};  // K_1
    for (int m = 2; m <= n; ++m) {
        std::set<std::uint64_t> next;
        for (std::uint64_t key : level) {
            Graph base = graph_from_key(key, m - 1);
            for (int mask = 0; mask < (1 << (m - 1)); ++mask) {
                Graph h(m);
                for (int a = 0; a < m - 1; ++a)
                    for (int b = a + 1; b < m - 1; ++b)
                        if (base.has_edge(a, b)) h.add_edge(a, b);
                for (int a = 0; a < m - 1; ++a)
                    if ((mask >> a) & 1) h.add_edge(a, m - 1);
                next.insert(canonical_key(h));
            }
        }
        level.assign(next.begin(), next.end());
    }
    std::vector<Graph> out;
    out.reserve(level.size());
    for (std::uint64_t key : level) out.push_back(graph_from_key(key, n));
    return out;
}

/// Connected graphs on n vertices up to isomorphism (n <= 8).
inline std::vector<Graph> all_connected(int n) {
    std::vector<Graph> out;
    for (Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace zf
