#pragma once

#include <numeric>
#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "vertex_set.hpp"

namespace zf {

/// Simple undirected graph over vertex indices 0..n-1.
/// Immutable once built (construction goes through add_edge).
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(n) {
        if (n < 0) throw std::invalid_argument("negative vertex count");
        if (n > VertexSet::kMaxVertices)
            throw std::invalid_argument("vertex count exceeds configured cap");
    }

    int n() const { return n_; }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    int edge_count() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d += adj_[v].count();
        return d / 2;
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
    }
    void check_set(const VertexSet& s) const {
        if (!s.is_subset_of(VertexSet::full(n_)))
            throw std::out_of_range("vertex set member out of range");
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

/// Open neighborhood of X: union of neighbor sets minus X itself.
inline VertexSet neighborhood(const Graph& g, const VertexSet& x) {
    g.check_set(x);
    VertexSet out;
    for (int v = x.first(); v >= 0; v = x.next(v)) out |= g.neighbors(v);
    out -= x;
    return out;
}

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& x) {
    return neighborhood(g, x) | x;
}

inline int min_degree(const Graph& g) {
    if (g.n() == 0) throw std::invalid_argument("min_degree of empty graph");
    int d = g.degree(0);
    for (int v = 1; v < g.n(); ++v) d = std::min(d, g.degree(v));
    return d;
}

/// Length of a shortest cycle; nullopt for forests.
/// BFS from every root, closing on the first non-tree edge seen.
inline std::optional<int> girth(const Graph& g) {
    const int n = g.n();
    int best = -1;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[root] = 0;
        std::queue<int> bfs;
        bfs.push(root);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            const VertexSet& nb = g.neighbors(u);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    bfs.push(w);
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

/// Connected components of the induced subgraph G[restrict],
/// ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& restrict_to) {
    g.check_set(restrict_to);
    std::vector<VertexSet> out;
    VertexSet seen;
    for (int s = restrict_to.first(); s >= 0; s = restrict_to.next(s)) {
        if (seen.test(s)) continue;
        VertexSet comp;
        comp.set(s);
        std::queue<int> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop();
            VertexSet nb = g.neighbors(u) & restrict_to;
            nb -= comp;
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                comp.set(w);
                bfs.push(w);
            }
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    return components(g, VertexSet::full(g.n())).size() == 1;
}

/// Result of contracting part sets against a neighborhood set N:
/// h has vertices 0..p-1 for the parts followed by the members of N
/// in ascending order (n_orig maps h index p+j back to the original vertex).
struct Contraction {
    Graph h;
    int part_count = 0;
    std::vector<int> n_orig;
};

/// Contract each part to a single vertex and keep only part-to-N edges.
inline Contraction contract_to_bipartite(const Graph& g,
                                         const std::vector<VertexSet>& parts,
                                         const VertexSet& nbhd) {
    VertexSet part_union;
    for (const auto& part : parts) {
        g.check_set(part);
        if (part.empty()) throw std::invalid_argument("empty part");
        if (part.intersects(part_union)) throw std::invalid_argument("overlapping parts");
        if (components(g, part).size() != 1)
            throw std::invalid_argument("part does not induce a connected subgraph");
        part_union |= part;
    }
    g.check_set(nbhd);
    if (nbhd.intersects(part_union))
        throw std::invalid_argument("N intersects the parts");
    // every edge leaving the parts must land in N
    VertexSet reach = neighborhood(g, part_union);
    if (!reach.is_subset_of(nbhd))
        throw std::invalid_argument("edge from a part leaves parts + N");

    Contraction out;
    out.part_count = static_cast<int>(parts.size());
    out.n_orig = nbhd.to_vector();
    out.h = Graph(out.part_count + static_cast<int>(out.n_orig.size()));
    for (int i = 0; i < out.part_count; ++i) {
        VertexSet touched = neighborhood(g, parts[i]) & nbhd;
        for (std::size_t j = 0; j < out.n_orig.size(); ++j)
            if (touched.test(out.n_orig[j]))
                out.h.add_edge(i, out.part_count + static_cast<int>(j));
    }
    return out;
}

/// Visits the k-subsets of {0..n-1} as sorted index tuples in
/// lexicographic order. Stops early when f returns true; returns
/// whether it stopped.
template <class F>
bool for_each_combination(int n, int k, F&& f) {
    if (k < 0 || k > n) return false;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        if (f(static_cast<const std::vector<int>&>(c))) return true;
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) return false;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace zf
