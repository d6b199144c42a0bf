#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "forcing.hpp"
#include "graph.hpp"

namespace zf {

/// A structural claim of the girth-degree argument failed on a concrete
/// graph. Carries the name of the claim that broke.
struct proof_error : std::runtime_error {
    explicit proof_error(std::string claim_)
        : std::runtime_error("proof claim violated: " + claim_),
          claim(std::move(claim_)) {}
    std::string claim;
};

/// Everything the structural argument builds from one graph and one
/// choice of X: the neighborhood N, the tree components K_i of G[X],
/// the contracted bipartite graph H, the pruned graph H' and the
/// counts q and f.
struct ProofDecomposition {
    Graph g;
    int girth_value = 0;
    int delta = 0;
    VertexSet x;
    VertexSet nbhd;
    std::vector<VertexSet> parts;
    int p = 0;
    Graph h;                    // 0..p-1 part-vertices, then N ascending
    std::vector<int> n_orig;    // h index p+j -> original vertex
    Graph hprime;               // h minus its degree-1 vertices (single pass)
    std::vector<int> hp_to_h;   // hprime vertex -> h vertex
    int q = 0;                  // members of N surviving in hprime
    int f = 0;                  // sum over N of (d_H(v) - 1)

    int h_part_degree(int i) const { return h.degree(i); }
};

/// Builds the decomposition for an explicitly supplied X, verifying the
/// structural invariants the argument relies on. Does not gate on the
/// girth hypothesis, so deliberately bad inputs can be fed to the
/// checkers.
inline ProofDecomposition decompose_with(const Graph& g, const VertexSet& x) {
    ProofDecomposition d;
    d.g = g;
    auto gg = girth(g);
    d.girth_value = gg ? *gg : 0;
    d.delta = min_degree(g);
    d.x = x;
    d.nbhd = neighborhood(g, x);
    d.parts = components(g, x);
    d.p = static_cast<int>(d.parts.size());

    // components of G[X] are trees
    for (const auto& part : d.parts) {
        int internal_edges = 0;
        for (int v = part.first(); v >= 0; v = part.next(v))
            internal_edges += (g.neighbors(v) & part).count();
        internal_edges /= 2;
        if (internal_edges != part.count() - 1)
            throw proof_error("component of G[X] is not a tree");
    }
    // no vertex of N has two neighbors inside one part
    for (int v = d.nbhd.first(); v >= 0; v = d.nbhd.next(v))
        for (const auto& part : d.parts)
            if ((g.neighbors(v) & part).count() > 1)
                throw proof_error("vertex of N has two neighbors in one component");

    Contraction c = contract_to_bipartite(g, d.parts, d.nbhd);
    d.h = c.h;
    d.n_orig = c.n_orig;

    d.f = 0;
    for (int j = 0; j < static_cast<int>(d.n_orig.size()); ++j)
        d.f += d.h.degree(d.p + j) - 1;

    // single-pass removal of degree-1 vertices
    std::vector<int> keep;
    for (int v = 0; v < d.h.n(); ++v)
        if (d.h.degree(v) != 1) keep.push_back(v);
    std::vector<int> new_index(d.h.n(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) new_index[keep[i]] = i;
    d.hprime = Graph(static_cast<int>(keep.size()));
    d.hp_to_h = keep;
    for (int a : keep)
        for (int b = d.h.neighbors(a).first(); b >= 0; b = d.h.neighbors(a).next(b))
            if (b > a && new_index[b] >= 0) d.hprime.add_edge(new_index[a], new_index[b]);
    d.q = 0;
    for (int v : keep)
        if (v >= d.p) ++d.q;
    return d;
}

/// Selects the lexicographically smallest X of size g-2 minimizing
/// |N(X)| and decomposes around it. Requires girth >= 5 and delta >= 2.
inline ProofDecomposition build_decomposition(const Graph& g) {
    auto gg = girth(g);
    if (!gg || *gg < 5) throw std::invalid_argument("build_decomposition: girth below 5");
    if (min_degree(g) < 2) throw std::invalid_argument("build_decomposition: min degree below 2");
    int p = *gg - 2;
    if (g.n() < p) throw std::invalid_argument("build_decomposition: graph smaller than g-2");
    return decompose_with(g, delta_p(g, p).argmin);
}

struct PairwiseCaps {
    bool ok = false;
    bool numeric_ok = false;
    bool structural_ok = false;
    int pair_sum = 0;
    int cap = 0;
};

/// The pairwise common-neighborhood cap: sum over part pairs of
/// |N(K_i) cap N(K_j)| is at most C(p,2) for p >= 3 and 2p-2 for
/// p in {1,2}, with the structural facts behind it checked as well.
inline PairwiseCaps check_pairwise_caps(const ProofDecomposition& d) {
    PairwiseCaps out;
    std::vector<VertexSet> nb(d.p);
    for (int i = 0; i < d.p; ++i) nb[i] = neighborhood(d.g, d.parts[i]);

    out.pair_sum = 0;
    bool pair_le_one = true;
    for (int i = 0; i < d.p; ++i)
        for (int j = i + 1; j < d.p; ++j) {
            int common = (nb[i] & nb[j]).count();
            out.pair_sum += common;
            if (common > 1) pair_le_one = false;
        }
    if (d.p >= 3) {
        out.cap = d.p * (d.p - 1) / 2;
        // no part pair may share two attachment vertices
        out.structural_ok = pair_le_one;
    } else {
        out.cap = 2 * d.p - 2;
        if (d.p == 2) {
            int both = (nb[0] & nb[1]).count();
            out.structural_ok = both <= 2;
        } else {
            out.structural_ok = true;
        }
    }
    out.numeric_ok = out.pair_sum <= out.cap;
    out.ok = out.numeric_ok && out.structural_ok;
    return out;
}

struct HprimeGirth {
    bool ok = false;
    std::optional<int> hprime_girth;  // nullopt: acyclic
    int required = 0;
};

/// H' must have girth at least p+2 (p even) or p+3 (p odd), or no cycle
/// at all.
inline HprimeGirth check_hprime_girth(const ProofDecomposition& d) {
    HprimeGirth out;
    out.required = d.p % 2 == 0 ? d.p + 2 : d.p + 3;
    out.hprime_girth = girth(d.hprime);
    out.ok = !out.hprime_girth || *out.hprime_girth >= out.required;
    return out;
}

struct CountingChain {
    bool ok = false;
    bool identity_ok = false;      // |N| = sum_parts d_H - f, exact
    bool part_degree_ok = false;   // d_H(K_i) >= delta|K_i| - 2(|K_i|-1)
    bool chain_ok = false;         // |N| >= bound + (2p-2 - f)
    int n_size = 0;
    int f = 0;
    int p = 0;
    int bound = 0;
};

/// Re-runs the displayed counting chain line by line.
inline CountingChain check_counting_chain(const ProofDecomposition& d) {
    CountingChain out;
    out.n_size = d.nbhd.count();
    out.f = d.f;
    out.p = d.p;
    out.bound = (d.girth_value - 2) * (d.delta - 2) + 2;

    int part_degree_sum = 0;
    out.part_degree_ok = true;
    for (int i = 0; i < d.p; ++i) {
        int deg = d.h_part_degree(i);
        part_degree_sum += deg;
        int k = d.parts[i].count();
        if (deg < d.delta * k - 2 * (k - 1)) out.part_degree_ok = false;
    }
    out.identity_ok = out.n_size == part_degree_sum - d.f;
    out.chain_ok = out.n_size >= out.bound + (2 * d.p - 2 - d.f);
    out.ok = out.identity_ok && out.part_degree_ok && out.chain_ok;
    return out;
}

struct BranchVerdict {
    enum class Kind {
        counting_branch,        // f <= 2p-2: bound follows from the chain
        contradiction_refuted,  // a sub-check of the scaffolding fired
        consistent_end          // must never happen on a real graph
    };
    Kind kind = Kind::counting_branch;
    std::string detail;
    bool ok() const { return kind != Kind::consistent_end; }
};

/// Walks the f >= 2p-1 contradiction branch on the concrete numbers.
/// On a real graph this branch is unreachable to completion: some
/// sub-check must fire before the Moore inequality and the numeric
/// lemma can coexist.
inline BranchVerdict check_moore_contradiction_branch(const ProofDecomposition& d) {
    BranchVerdict out;
    if (d.f <= 2 * d.p - 2) {
        out.kind = BranchVerdict::Kind::counting_branch;
        out.detail = "bound already proven via counting chain";
        return out;
    }
    out.kind = BranchVerdict::Kind::contradiction_refuted;
    if (d.p < 5) {
        out.detail = "f >= 2p-1 with p < 5 (pairwise cap violated)";
        return out;
    }
    for (int i = 0; i < d.p; ++i)
        if (d.h_part_degree(i) < 2) {
            out.detail = "part-vertex of H has degree below 2";
            return out;
        }
    if (d.f < d.p) {
        out.detail = "average degree of H' below 2";
        return out;
    }
    Rational avg = Rational(2 * (d.f + d.q), d.p + d.q);
    if (avg < 2 || !moore_check(d.p + d.q, (d.p + 1) / 2 + 1, avg)) {
        out.detail = "Moore inequality fails on (p, q, f)";
        return out;
    }
    if (!lemma2_holds(d.p, d.f).holds) {
        out.detail = "numeric lemma fails at (p, f)";
        return out;
    }
    out.kind = BranchVerdict::Kind::consistent_end;
    out.detail = "contradiction branch reached a consistent end state";
    return out;
}

struct ProofOutcome {
    bool ok = true;
    std::string detail;        // first failing claim or check
    int minimizers_checked = 0;
};

namespace detail {

inline bool run_checks(const ProofDecomposition& d, std::string& why) {
    if (auto caps = check_pairwise_caps(d); !caps.ok) {
        why = "pairwise cap check failed";
        return false;
    }
    if (auto hg = check_hprime_girth(d); !hg.ok) {
        why = "H' girth check failed";
        return false;
    }
    if (auto chain = check_counting_chain(d); !chain.ok) {
        why = "counting chain check failed";
        return false;
    }
    if (auto branch = check_moore_contradiction_branch(d); !branch.ok()) {
        why = branch.detail;
        return false;
    }
    return true;
}

}  // namespace detail

/// Full battery: decomposition plus the four checks. With
/// all_minimizers set, every X attaining delta_{g-2} is tried (the
/// argument must work for any minimizer).
inline ProofOutcome run_proof_battery(const Graph& g, bool all_minimizers = false) {
    ProofOutcome out;
    auto gg = girth(g);
    if (!gg || *gg < 5 || min_degree(g) < 2)
        throw std::invalid_argument("run_proof_battery: hypotheses not met");
    int psize = *gg - 2;
    DeltaP dp = delta_p(g, psize);

    auto run_one = [&](const VertexSet& x) {
        ++out.minimizers_checked;
        try {
            ProofDecomposition d = decompose_with(g, x);
            std::string why;
            if (!detail::run_checks(d, why)) {
                out.ok = false;
                out.detail = why;
            }
        } catch (const proof_error& e) {
            out.ok = false;
            out.detail = e.claim;
        }
        return !out.ok;  // stop on first failure
    };

    if (!all_minimizers) {
        run_one(dp.argmin);
        return out;
    }
    for_each_combination(g.n(), psize, [&](const std::vector<int>& c) {
        VertexSet x;
        for (int v : c) x.set(v);
        if (neighborhood(g, x).count() != dp.value) return false;
        return run_one(x);
    });
    return out;
}

}  // namespace zf
