#pragma once

#include <utility>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace zf {

struct DeltaP {
    int value = 0;
    VertexSet argmin;
};

/// delta_p(G) = min |N(X)| over all p-subsets X, by exhaustive
/// enumeration. The argmin is the lexicographically smallest minimizer.
/// Refuses (rather than approximates) when C(n,p) exceeds the budget.
inline DeltaP delta_p(const Graph& g, int p,
                      long long subset_budget = 100'000'000LL) {
    const int n = g.n();
    if (p < 1 || p > n) throw std::invalid_argument("delta_p: p out of range");
    if (binomial(n, p) > subset_budget)
        throw std::runtime_error("delta_p: subset enumeration budget exceeded");
    DeltaP best;
    best.value = n + 1;
    for_each_combination(n, p, [&](const std::vector<int>& c) {
        VertexSet x;
        for (int v : c) x.set(v);
        int size = neighborhood(g, x).count();
        if (size < best.value) {
            best.value = size;
            best.argmin = x;
        }
        return false;
    });
    return best;
}

/// The girth-degree lower bound (g-2)(delta-2)+2 on Z(G).
inline int girth_degree_bound(int g, int delta) {
    if (g < 3) throw std::invalid_argument("girth_degree_bound: girth below 3");
    if (delta < 2) throw std::invalid_argument("girth_degree_bound: min degree below 2");
    return (g - 2) * (delta - 2) + 2;
}

/// Moore bound check for girth >= 2r and average degree d >= 2:
/// true iff n >= 2 * sum_{i=0}^{r-1} (d-1)^i, evaluated exactly.
inline bool moore_check(int n, int r, const Rational& d) {
    if (r < 1) throw std::invalid_argument("moore_check: r below 1");
    if (d < 2) throw std::invalid_argument("moore_check: average degree below 2");
    Rational sum = 0;
    Rational term = 1;
    for (int i = 0; i < r; ++i) {
        sum += term;
        term *= d - 1;
    }
    return Rational(n) >= 2 * sum;
}

struct Lemma2Result {
    bool holds = false;
    Rational lhs;
};

/// Exact verdict for (1 + 2(f-p)/(f+p))^(ceil(p/2)+1) > f - p + 1.
inline Lemma2Result lemma2_holds(int p, int f) {
    if (p < 1 || f < 1) throw std::invalid_argument("lemma2_holds: p, f must be positive");
    Rational base = Rational(3 * f - p, f + p);  // 1 + 2(f-p)/(f+p)
    unsigned exponent = static_cast<unsigned>((p + 1) / 2 + 1);
    Lemma2Result out;
    out.lhs = rational_pow(base, exponent);
    out.holds = out.lhs > f - p + 1;
    return out;
}

struct Lemma2Scan {
    long long pairs_checked = 0;
    std::vector<std::pair<int, int>> violations;
};

/// Checks every pair (p, f) with 2p-1 <= f <= C(p,2) across the p range.
inline Lemma2Scan lemma2_scan(int p_min, int p_max) {
    if (p_min < 5) throw std::invalid_argument("lemma2_scan: p_min below 5");
    Lemma2Scan out;
    for (int p = p_min; p <= p_max; ++p) {
        int f_max = p * (p - 1) / 2;
        for (int f = 2 * p - 1; f <= f_max; ++f) {
            ++out.pairs_checked;
            if (!lemma2_holds(p, f).holds) out.violations.emplace_back(p, f);
        }
    }
    return out;
}

/// The analytic step for p >= 17, with 1.64 pinned as 41/25:
/// (i) the base at f = 2p-1 is at least 41/25, and
/// (ii) (41/25)^(ceil(p/2)+1) > C(p,2) - p + 1.
inline bool growth_check(int p) {
    if (p < 17) throw std::invalid_argument("growth_check: p below 17");
    const Rational floor_164(41, 25);
    int f = 2 * p - 1;
    Rational base = Rational(3 * f - p, f + p);
    if (base < floor_164) return false;
    unsigned exponent = static_cast<unsigned>((p + 1) / 2 + 1);
    Rational target = Integer(binomial(p, 2) - p + 1);
    return rational_pow(floor_164, exponent) > target;
}

}  // namespace zf
