#pragma once

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

struct Matching {
    std::vector<std::pair<int, int>> pairs;  // (left, right), sorted by left index
    std::size_t size() const { return pairs.size(); }
};

struct VertexCover {
    std::vector<int> left;
    std::vector<int> right;
    std::size_t size() const { return left.size() + right.size(); }

    bool covers(const UnweightedBipartiteGraph& g) const {
        std::vector<char> inl(g.n, 0), inr(g.n, 0);
        for (int i : left) inl[i] = 1;
        for (int j : right) inr[j] = 1;
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                if (g.edge(i, j) && !inl[i] && !inr[j]) return false;
        return true;
    }
};

struct IndependentSet {
    std::vector<int> left;
    std::vector<int> right;
    std::size_t size() const { return left.size() + right.size(); }
};

namespace detail {

// Hopcroft-Karp on an n+n bipartite graph. Vertices are scanned in ascending
// index order in both the BFS and DFS phases, so the matching is a pure
// function of the adjacency matrix.
class HopcroftKarp {
public:
    explicit HopcroftKarp(const UnweightedBipartiteGraph& g)
        : n_(g.n), adj_(g.n), match_left_(g.n, -1), match_right_(g.n, -1) {
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (g.edge(i, j)) adj_[i].push_back(j);
    }

    void run() {
        while (bfs()) {
            for (int i = 0; i < n_; ++i)
                if (match_left_[i] < 0) dfs(i);
        }
    }

    const std::vector<int>& match_left() const { return match_left_; }
    const std::vector<int>& match_right() const { return match_right_; }

private:
    static constexpr int kInf = std::numeric_limits<int>::max();

    bool bfs() {
        std::deque<int> queue;
        dist_.assign(n_, kInf);
        for (int i = 0; i < n_; ++i) {
            if (match_left_[i] < 0) {
                dist_[i] = 0;
                queue.push_back(i);
            }
        }
        bool reachable_free_right = false;
        while (!queue.empty()) {
            int i = queue.front();
            queue.pop_front();
            for (int j : adj_[i]) {
                int i2 = match_right_[j];
                if (i2 < 0) {
                    reachable_free_right = true;
                } else if (dist_[i2] == kInf) {
                    dist_[i2] = dist_[i] + 1;
                    queue.push_back(i2);
                }
            }
        }
        return reachable_free_right;
    }

    bool dfs(int i) {
        for (int j : adj_[i]) {
            int i2 = match_right_[j];
            if (i2 < 0 || (dist_[i2] == dist_[i] + 1 && dfs(i2))) {
                match_left_[i] = j;
                match_right_[j] = i;
                return true;
            }
        }
        dist_[i] = kInf;
        return false;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_left_, match_right_;
    std::vector<int> dist_;
};

// Vertices reachable from the unmatched left vertices along alternating paths
// (non-matching edges left-to-right, matching edges right-to-left).
struct AlternatingReach {
    std::vector<char> left;
    std::vector<char> right;
    bool reaches_free_right = false;
};

inline AlternatingReach alternating_reachability(const UnweightedBipartiteGraph& g,
                                                 const std::vector<int>& match_left,
                                                 const std::vector<int>& match_right) {
    AlternatingReach r;
    r.left.assign(g.n, 0);
    r.right.assign(g.n, 0);
    std::deque<int> queue;
    for (int i = 0; i < g.n; ++i) {
        if (match_left[i] < 0) {
            r.left[i] = 1;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < g.n; ++j) {
            if (!g.edge(i, j) || match_left[i] == j || r.right[j]) continue;
            r.right[j] = 1;
            int i2 = match_right[j];
            if (i2 < 0) {
                r.reaches_free_right = true;
            } else if (!r.left[i2]) {
                r.left[i2] = 1;
                queue.push_back(i2);
            }
        }
    }
    return r;
}

}  // namespace detail

inline Matching max_matching(const UnweightedBipartiteGraph& g) {
    detail::HopcroftKarp hk(g);
    hk.run();
    Matching m;
    for (int i = 0; i < g.n; ++i)
        if (hk.match_left()[i] >= 0) m.pairs.emplace_back(i, hk.match_left()[i]);
    return m;
}

/// Constructive minimum vertex cover from a maximum matching: take the left
/// vertices NOT reachable by an alternating path from an unmatched left
/// vertex, plus the reachable right vertices. Matching maximality is checked
/// (an alternating path into a free right vertex would be augmenting).
inline VertexCover min_vertex_cover(const UnweightedBipartiteGraph& g, const Matching& m) {
    std::vector<int> match_left(g.n, -1), match_right(g.n, -1);
    for (const auto& [i, j] : m.pairs) {
        if (i < 0 || i >= g.n || j < 0 || j >= g.n || !g.edge(i, j))
            throw ContractError("matching contains a non-edge");
        if (match_left[i] >= 0 || match_right[j] >= 0)
            throw ContractError("matching repeats a vertex");
        match_left[i] = j;
        match_right[j] = i;
    }
    auto reach = detail::alternating_reachability(g, match_left, match_right);
    if (reach.reaches_free_right)
        throw ContractError("matching is not maximum: an augmenting path exists");
    VertexCover cover;
    for (int i = 0; i < g.n; ++i)
        if (!reach.left[i]) cover.left.push_back(i);
    for (int j = 0; j < g.n; ++j)
        if (reach.right[j]) cover.right.push_back(j);
    return cover;
}

/// All vertices outside some minimum vertex cover.
inline IndependentSet max_independent_set(const UnweightedBipartiteGraph& g) {
    Matching m = max_matching(g);
    VertexCover cover = min_vertex_cover(g, m);
    IndependentSet is;
    std::vector<char> inl(g.n, 0), inr(g.n, 0);
    for (int i : cover.left) inl[i] = 1;
    for (int j : cover.right) inr[j] = 1;
    for (int i = 0; i < g.n; ++i)
        if (!inl[i]) is.left.push_back(i);
    for (int j = 0; j < g.n; ++j)
        if (!inr[j]) is.right.push_back(j);
    return is;
}

namespace detail {

// Maximum independent set of the subgraph of g induced by the allowed
// vertices, via matching + cover on the induced graph.
inline IndependentSet induced_max_independent_set(const UnweightedBipartiteGraph& g,
                                                  const std::vector<char>& allow_left,
                                                  const std::vector<char>& allow_right) {
    UnweightedBipartiteGraph h(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j)
            if (allow_left[i] && allow_right[j] && g.edge(i, j)) h.set_edge(i, j);
    Matching m = max_matching(h);
    std::vector<int> match_left(g.n, -1), match_right(g.n, -1);
    for (const auto& [i, j] : m.pairs) {
        match_left[i] = j;
        match_right[j] = i;
    }
    // Alternating reachability must start only from allowed unmatched lefts.
    AlternatingReach r;
    r.left.assign(g.n, 0);
    r.right.assign(g.n, 0);
    std::deque<int> queue;
    for (int i = 0; i < g.n; ++i)
        if (allow_left[i] && match_left[i] < 0) {
            r.left[i] = 1;
            queue.push_back(i);
        }
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (int j = 0; j < g.n; ++j) {
            if (!h.edge(i, j) || match_left[i] == j || r.right[j]) continue;
            r.right[j] = 1;
            int i2 = match_right[j];
            if (i2 >= 0 && !r.left[i2]) {
                r.left[i2] = 1;
                queue.push_back(i2);
            }
        }
    }
    IndependentSet is;
    for (int i = 0; i < g.n; ++i)
        if (allow_left[i] && r.left[i]) is.left.push_back(i);      // uncovered lefts
    for (int j = 0; j < g.n; ++j)
        if (allow_right[j] && !r.right[j]) is.right.push_back(j);  // uncovered rights
    return is;
}

}  // namespace detail

/// Largest biclique of g by total vertex count, both parts nonempty, found
/// through maximum independent sets of the bipartite complement. A maximum
/// independent set of the complement can be entirely one-sided, so the search
/// anchors one edge (i, j) of g at a time: with both endpoints forced into
/// the solution, the compatible vertices are exactly the common neighbours,
/// and the induced independent set is optimal among bicliques through (i, j).
/// Taking the best anchor over all edges is exact; no edges means no biclique.
inline std::optional<Biclique> max_unbalanced_biclique_unweighted(
    const UnweightedBipartiteGraph& g) {
    const UnweightedBipartiteGraph h = g.complement();
    std::optional<Biclique> best;
    for (int i = 0; i < g.n; ++i) {
        for (int j = 0; j < g.n; ++j) {
            if (!g.edge(i, j)) continue;
            std::vector<char> allow_left(g.n, 0), allow_right(g.n, 0);
            for (int i2 = 0; i2 < g.n; ++i2) allow_left[i2] = g.edge(i2, j) ? 1 : 0;
            for (int j2 = 0; j2 < g.n; ++j2) allow_right[j2] = g.edge(i, j2) ? 1 : 0;
            IndependentSet is = detail::induced_max_independent_set(h, allow_left, allow_right);
            Biclique candidate(is.left, is.right);
            if (!best || candidate.total_vertices() > best->total_vertices()) {
                best = std::move(candidate);
            }
        }
    }
    return best;
}

}  // namespace biclique
