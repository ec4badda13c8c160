#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "biclique/enumerate.hpp"
#include "biclique/graph.hpp"

namespace biclique {

enum class Sense { Max, Min };

inline std::string to_string(Sense s) { return s == Sense::Max ? "max" : "min"; }

struct Solution {
    Biclique biclique;
    ExtendedWeight value;
};

namespace detail {

inline bool better(const ExtendedWeight& a, const ExtendedWeight& b, Sense sense) {
    return sense == Sense::Max ? a > b : a < b;
}

// Restricted column sums over the selected rows.
inline std::vector<ExtendedWeight> column_sums(const BipartiteGraph& g,
                                               const std::vector<int>& rows) {
    std::vector<ExtendedWeight> sums(g.n, ExtendedWeight(0));
    for (int j = 0; j < g.n; ++j) {
        ExtendedWeight s(0);
        for (int i : rows) s += g.at(i, j);
        sums[j] = s;
    }
    return sums;
}

// The optimal completion of a fixed row set: the `count` columns with the
// best restricted sums. Ties go to the smaller column index, which makes the
// chosen subset the lexicographically least among the optimal ones.
inline std::pair<std::vector<int>, ExtendedWeight> best_columns(
    const std::vector<ExtendedWeight>& sums, int count, Sense sense) {
    std::vector<int> order(sums.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (sums[a] != sums[b]) return better(sums[a], sums[b], sense);
        return a < b;
    });
    std::vector<int> chosen(order.begin(), order.begin() + count);
    std::sort(chosen.begin(), chosen.end());
    ExtendedWeight total(0);
    for (int j : chosen) total += sums[j];
    return {std::move(chosen), total};
}

// Shared enumeration core: for every admissible split size a and every row
// subset of size a, complete with the best k-a columns. Candidates arrive in
// (a, u, v) order, so keeping strict improvements realizes the global
// lexicographic tie-break.
inline Solution enumerate_with_completion(const BipartiteGraph& g, int k, int a_lo, int a_hi,
                                          Sense sense) {
    Solution best;
    bool have = false;
    for (int a = a_lo; a <= a_hi; ++a) {
        for_each_subset(g.n, a, [&](const std::vector<int>& u) {
            auto sums = column_sums(g, u);
            auto [v, value] = best_columns(sums, k - a, sense);
            if (!have || better(value, best.value, sense)) {
                best.biclique = Biclique(u, v);
                best.value = value;
                have = true;
            }
        });
    }
    return best;
}

}  // namespace detail

/// Optimal k-balanced biclique, exact. For each of the C(n,k) row subsets the
/// optimal column subset is the k best restricted column sums, so the scan is
/// C(n,k) * O(n log n) instead of C(n,k)^2.
inline Solution solve_wbcbs(const BipartiteGraph& g, int k, Sense sense) {
    if (k < 1 || k > g.n) throw ParameterError("solve_wbcbs: k must satisfy 1 <= k <= n");
    if (!g.all_finite()) throw InstanceError("solve_wbcbs: all weights must be finite");
    return detail::enumerate_with_completion(g, 2 * k, k, k, sense);
}

/// Maximum-weight biclique on k vertices total, nonnegative finite weights.
inline Solution solve_maxwcbs(const BipartiteGraph& g, int k) {
    if (k < 2 || k > 2 * g.n) throw ParameterError("solve_maxwcbs: k must satisfy 2 <= k <= 2n");
    if (!g.all_finite() || !g.all_nonnegative())
        throw InstanceError("solve_maxwcbs: weights must be finite and nonnegative");
    return detail::enumerate_with_completion(g, k, std::max(1, k - g.n), std::min(g.n, k - 1),
                                             Sense::Max);
}

/// Minimum-weight biclique on k vertices total; weights nonnegative or
/// infinite. An infinite optimum is returned only when every feasible
/// solution is infinite.
inline Solution solve_minwcbs(const BipartiteGraph& g, int k) {
    if (k < 2 || k > 2 * g.n) throw ParameterError("solve_minwcbs: k must satisfy 2 <= k <= 2n");
    if (!g.all_nonnegative())
        throw InstanceError("solve_minwcbs: weights must be nonnegative or infinite");
    return detail::enumerate_with_completion(g, k, std::max(1, k - g.n), std::min(g.n, k - 1),
                                             Sense::Min);
}

/// Independent check: exhaustive scan of the full feasible set with the same
/// (a, u, v) tie-break. Shares no code path with the completion solvers
/// beyond weight evaluation.
inline Solution brute_force_oracle(const BipartiteGraph& g, int k, SetKind kind, Sense sense) {
    FeasibleSet fs = enumerate_feasible(g.n, k, kind);
    Solution best;
    bool have = false;
    for (const Biclique& b : fs.members) {
        ExtendedWeight w = weight_of(b, g);
        if (!have || detail::better(w, best.value, sense)) {
            best.biclique = b;
            best.value = w;
            have = true;
        }
    }
    return best;
}

}  // namespace biclique
