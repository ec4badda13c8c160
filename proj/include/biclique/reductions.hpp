#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

/// A transformed instance together with the number the source question
/// turns into: "the source is a YES-instance iff the optimum meets the
/// threshold".
struct ReductionOutput {
    BipartiteGraph instance;
    int k_out = 0;
    Rational threshold;
    std::string direction;
};

namespace detail {

inline BipartiteGraph indicator_weights(const UnweightedBipartiteGraph& g) {
    BipartiteGraph w(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (g.edge(i, j)) w.at(i, j) = 1;
    return w;
}

}  // namespace detail

/// Balanced biclique existence -> balanced optimization: weight 1 on the
/// edges of g and 0 elsewhere. A k-balanced subgraph of weight k*k exists
/// iff it uses g-edges only, i.e. iff g contains a k-balanced biclique.
inline ReductionOutput bcbs_to_wbcbs(const UnweightedBipartiteGraph& g, int k) {
    if (k < 1 || k > g.n) throw ParameterError("bcbs_to_wbcbs: need 1 <= k <= n");
    ReductionOutput out;
    out.instance = detail::indicator_weights(g);
    out.k_out = k;
    out.threshold = Rational(k) * k;
    out.direction = "source has a k-balanced biclique iff the max k-balanced weight equals k^2";
    return out;
}

/// Same weighting, asked as an unbalanced maximum on 2k vertices: only a
/// k-balanced subgraph can pack k*k unit edges into 2k vertices.
inline ReductionOutput bcbs_to_maxwcbs(const UnweightedBipartiteGraph& g, int k) {
    if (k < 1 || k > g.n) throw ParameterError("bcbs_to_maxwcbs: need 1 <= k <= n");
    ReductionOutput out;
    out.instance = detail::indicator_weights(g);
    out.k_out = 2 * k;
    out.threshold = Rational(k) * k;
    out.direction =
        "source has a k-balanced biclique iff the max weight on 2k vertices equals k^2";
    return out;
}

struct QCoverReduction {
    UnweightedBipartiteGraph graph;  // heavy edges only
    int q = 0;
};

/// Minimum biclique with two weight levels {1, n^2} -> maximum q-vertex
/// cover with q = 2n - k: selecting the k biclique vertices is the same as
/// deleting q vertices, and the unit edges together weigh less than one
/// heavy edge, so the optimum first maximizes deleted heavy edges. The exact
/// value identity (and the brute-force check in the tests) restricts the
/// deleted set to leave at least one vertex in each part, because a biclique
/// keeps both parts nonempty:
///   minWCBS(g, k) = n^2 * (|E*| - cover*) + r
/// with E* the heavy edge set, cover* the best constrained q-cover of the
/// heavy graph, and r the fewest unit edges among coverage-optimal bicliques.
inline QCoverReduction minwcbs_to_qcover(const BipartiteGraph& g, int k) {
    if (k < 2 || k > 2 * g.n) throw ParameterError("minwcbs_to_qcover: need 2 <= k <= 2n");
    const Rational heavy = Rational(g.n) * g.n;
    QCoverReduction out;
    out.graph = UnweightedBipartiteGraph(g.n);
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            const ExtendedWeight& w = g.at(i, j);
            if (w.is_infinite() || (w.value() != 1 && w.value() != heavy))
                throw InstanceError("minwcbs_to_qcover: weights must all be 1 or n^2");
            if (w.value() == heavy) out.graph.set_edge(i, j);
        }
    }
    out.q = 2 * g.n - k;
    return out;
}

/// Replace the symbolic weight levels (subset of {-1, 0, 1, inf}) by
/// positive integers 1 = a1 < a2 < ... with a_{i+1} = n^2 * a_i + 1, so each
/// level outweighs all n^2 edges of the previous one combined.
inline std::map<ExtendedWeight, Rational> normalize_weights(std::vector<ExtendedWeight> levels,
                                                            int n) {
    if (n < 1) throw ParameterError("normalize_weights: n must be positive");
    if (levels.empty()) throw ParameterError("normalize_weights: no levels given");
    for (const ExtendedWeight& w : levels) {
        const bool ok = w.is_infinite() ||
                        (w.value() == -1 || w.value() == 0 || w.value() == 1);
        if (!ok) throw ParameterError("normalize_weights: levels must come from {-1, 0, 1, inf}");
    }
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    std::map<ExtendedWeight, Rational> out;
    Rational a = 1;
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0) a = Rational(n) * n * a + 1;
        out.emplace(levels[i], a);
    }
    return out;
}

/// Apply a level map to every entry of an instance.
inline BipartiteGraph apply_level_map(const BipartiteGraph& g,
                                      const std::map<ExtendedWeight, Rational>& level_map) {
    BipartiteGraph out(g.n);
    for (std::size_t e = 0; e < g.weights.size(); ++e) {
        auto it = level_map.find(g.weights[e]);
        if (it == level_map.end())
            throw InstanceError("apply_level_map: weight outside the mapped levels");
        out.weights[e] = ExtendedWeight(it->second);
    }
    return out;
}

}  // namespace biclique
