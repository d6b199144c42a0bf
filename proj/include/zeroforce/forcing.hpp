#pragma once

#include <vector>

#include "graph.hpp"

namespace zf {

/// A zero forcing set Z together with a witnessing forcing order:
/// step i colors forced[i], performed by forcers[i].
struct ForcingSchedule {
    VertexSet z;
    std::vector<int> forced;
    std::vector<int> forcers;
};

struct ClosureResult {
    VertexSet set;
    ForcingSchedule schedule;
};

/// Repeatedly applies the forcing rule (a colored vertex with exactly one
/// uncolored neighbor colors it) until fixpoint. Each round scans the
/// round's colored snapshot in ascending order and applies forces
/// immediately, so the schedule is deterministic.
inline ClosureResult closure(const Graph& g, const VertexSet& z) {
    g.check_set(z);
    ClosureResult out;
    out.set = z;
    out.schedule.z = z;
    bool changed = true;
    while (changed) {
        changed = false;
        VertexSet snapshot = out.set;
        for (int v = snapshot.first(); v >= 0; v = snapshot.next(v)) {
            VertexSet outside = g.neighbors(v) - out.set;
            if (outside.count() == 1) {
                int u = outside.first();
                out.set.set(u);
                out.schedule.forced.push_back(u);
                out.schedule.forcers.push_back(v);
                changed = true;
            }
        }
    }
    return out;
}

inline bool is_zero_forcing_set(const Graph& g, const VertexSet& z) {
    return closure(g, z).set == VertexSet::full(g.n());
}

/// Replays a claimed schedule step by step, independent of how it was
/// produced.
inline bool verify_schedule(const Graph& g, const ForcingSchedule& s) {
    g.check_set(s.z);
    if (s.forced.size() != s.forcers.size()) return false;
    VertexSet colored = s.z;
    for (std::size_t i = 0; i < s.forced.size(); ++i) {
        int u = s.forced[i], v = s.forcers[i];
        g.check_vertex(u);
        g.check_vertex(v);
        if (!colored.test(v) || colored.test(u)) return false;
        VertexSet outside = g.neighbors(v) - colored;
        if (outside.count() != 1 || outside.first() != u) return false;
        colored.set(u);
    }
    return true;
}

struct ZeroForcingNumber {
    int value = 0;
    VertexSet witness;
};

/// Exact Z(G): candidate sizes upward from the hint, lexicographic subset
/// enumeration per size. The first hit is optimal and lexicographically
/// smallest.
inline ZeroForcingNumber zero_forcing_number(const Graph& g, int lower_bound_hint = 1) {
    if (g.n() == 0) throw std::invalid_argument("zero_forcing_number of empty graph");
    const int n = g.n();
    for (int s = std::max(lower_bound_hint, 1); s <= n; ++s) {
        ZeroForcingNumber result;
        bool found = for_each_combination(n, s, [&](const std::vector<int>& c) {
            VertexSet z;
            for (int v : c) z.set(v);
            if (!is_zero_forcing_set(g, z)) return false;
            result.value = s;
            result.witness = z;
            return true;
        });
        if (found) return result;
    }
    throw std::logic_error("no zero forcing set found");  // V(G) always forces
}

}  // namespace zf
