#pragma once

#include <algorithm>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "biclique/enumerate.hpp"
#include "biclique/graph.hpp"

namespace biclique {

enum class FamilyKind { BalancedDiagonal, MaxEven, MaxOdd, MinPartition };

inline std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::BalancedDiagonal: return "balanced-diagonal";
        case FamilyKind::MaxEven: return "max-even";
        case FamilyKind::MaxOdd: return "max-odd";
        default: return "min-partition";
    }
}

/// A family of feasible solutions that is pairwise adjacent in the relevant
/// skeleton / cone-decomposition graph, together with its parameters.
/// m and s are only meaningful for MinPartition (m = floor(n/2), k = 3s).
struct CliqueFamily {
    FamilyKind kind = FamilyKind::BalancedDiagonal;
    int n = 0;
    int k = 0;
    int m = 0;
    int s = 0;
    std::vector<Biclique> members;

    std::size_t size() const { return members.size(); }
};

/// All k-subsets taken identically on both sides. Any two members differ in
/// both parts, so they are pairwise adjacent in the balanced skeleton.
inline CliqueFamily family_balanced(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw ParameterError("family_balanced: need 1 <= k <= n");
    CliqueFamily f;
    f.kind = FamilyKind::BalancedDiagonal;
    f.n = n;
    f.k = k;
    for_each_subset(n, k, [&](const std::vector<int>& s) { f.members.emplace_back(s, s); });
    return f;
}

/// Pairwise cone-adjacent family for the maximum problem on k vertices.
/// Even k = 2s: the diagonal family of s-subsets. Odd k = 2s+1: s-subsets of
/// the first n-1 indices mirrored to the right side plus the fixed last
/// vertex, so every member shares that right vertex and no two share a part.
inline CliqueFamily family_max(int n, int k) {
    if (n < 1 || k < 2 || k > 2 * n) throw ParameterError("family_max: need 2 <= k <= 2n");
    CliqueFamily f;
    f.n = n;
    f.k = k;
    if (k % 2 == 0) {
        const int s = k / 2;
        if (s > n) throw ParameterError("family_max: k/2 exceeds n");
        f.kind = FamilyKind::MaxEven;
        f.s = s;
        for_each_subset(n, s, [&](const std::vector<int>& t) { f.members.emplace_back(t, t); });
    } else {
        const int s = (k - 1) / 2;
        if (s < 1 || s > n - 1)
            throw ParameterError("family_max: odd k needs 1 <= (k-1)/2 <= n-1");
        f.kind = FamilyKind::MaxOdd;
        f.s = s;
        for_each_subset(n - 1, s, [&](const std::vector<int>& t) {
            std::vector<int> v = t;
            v.push_back(n - 1);
            f.members.emplace_back(t, v);
        });
    }
    return f;
}

/// Pairwise cone-adjacent family for the minimum problem. Both parts are cut
/// in half (for odd n the last vertex of each part is left out, so the
/// effective half is m = floor(n/2)); an s-subset S of the first half gives
/// the member with rows S and columns S and S shifted by m. Requires k = 3s
/// inside the window (9/4)m < k < 3m.
inline CliqueFamily family_min(int n, int k) {
    if (n < 1) throw ParameterError("family_min: n must be positive");
    const int m = n / 2;
    if (k % 3 != 0) throw ParameterError("family_min: k must be a multiple of 3 (k = 3s)");
    if (4 * k <= 9 * m)
        throw ParameterError("family_min: violated (9/4)m < k with m = " + std::to_string(m));
    if (k >= 3 * m)
        throw ParameterError("family_min: violated k < 3m with m = " + std::to_string(m));
    CliqueFamily f;
    f.kind = FamilyKind::MinPartition;
    f.n = n;
    f.k = k;
    f.m = m;
    f.s = k / 3;
    for_each_subset(m, f.s, [&](const std::vector<int>& s_set) {
        std::vector<int> v = s_set;
        for (int i : s_set) v.push_back(i + m);
        f.members.emplace_back(s_set, v);
    });
    return f;
}

namespace detail {

inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace detail

/// 0/1 tie weights for two balanced bicliques that differ in both parts:
/// weight 1 on the edges of either subgraph and 0 elsewhere. Both tie at
/// k*k, the largest value any k-balanced subgraph can reach, and only they
/// reach it. All entries are nonnegative, so the same vector also certifies
/// adjacency of the orthant cones.
inline BipartiteGraph cert_disjoint_parts(const Biclique& x, const Biclique& y, int n) {
    x.validate(n);
    y.validate(n);
    if (!x.balanced() || !y.balanced() || x.u.size() != y.u.size())
        throw ParameterError("cert_disjoint_parts: bicliques must be balanced with equal k");
    if (x.u == y.u || x.v == y.v)
        throw ParameterError("cert_disjoint_parts: parts must differ on both sides");
    BipartiteGraph c(n);
    for (int i : x.u)
        for (int j : x.v) c.at(i, j) = 1;
    for (int i : y.u)
        for (int j : y.v) c.at(i, j) = 1;
    return c;
}

/// Tie weights for two balanced bicliques sharing one part and differing in
/// one vertex on the other: 1 on rows common to both, 0 on the two swapped
/// rows, -1 everywhere else (transposed when the shared part is U). Both tie
/// at k(k-1) and every other balanced subgraph is strictly below.
inline BipartiteGraph cert_common_part(const Biclique& x, const Biclique& y, int n) {
    x.validate(n);
    y.validate(n);
    if (!x.balanced() || !y.balanced() || x.u.size() != y.u.size())
        throw ParameterError("cert_common_part: bicliques must be balanced with equal k");
    const bool shared_v = x.v == y.v && detail::set_difference(x.u, y.u).size() == 1;
    const bool shared_u = x.u == y.u && detail::set_difference(x.v, y.v).size() == 1;
    if (!shared_v && !shared_u)
        throw ParameterError(
            "cert_common_part: need one shared part and a single-vertex difference");
    BipartiteGraph c(n, ExtendedWeight(-1));
    if (shared_v) {
        auto common = detail::set_intersection(x.u, y.u);
        auto swapped = detail::set_union(detail::set_difference(x.u, y.u),
                                         detail::set_difference(y.u, x.u));
        for (int j : x.v) {
            for (int i : common) c.at(i, j) = 1;
            for (int i : swapped) c.at(i, j) = 0;
        }
    } else {
        auto common = detail::set_intersection(x.v, y.v);
        auto swapped = detail::set_union(detail::set_difference(x.v, y.v),
                                         detail::set_difference(y.v, x.v));
        for (int i : x.u) {
            for (int j : common) c.at(i, j) = 1;
            for (int j : swapped) c.at(i, j) = 0;
        }
    }
    return c;
}

namespace detail {

inline void require_min_partition_member(const Biclique& b, int n, int m, int s) {
    if (static_cast<int>(b.u.size()) != s)
        throw ParameterError("min-family member must select s rows");
    for (int i : b.u)
        if (i < 0 || i >= m) throw ParameterError("min-family rows must lie in the first half");
    std::vector<int> expected_v = b.u;
    for (int i : b.u) expected_v.push_back(i + m);
    std::sort(expected_v.begin(), expected_v.end());
    if (b.v != expected_v)
        throw ParameterError("min-family columns must mirror the rows in both column halves");
    if (n < 2 * m) throw ParameterError("min-family member out of range for n");
}

}  // namespace detail

/// Tie weights for two members of the min-partition family: 0 on each
/// member's own rows against its own columns and on all rows against the
/// shared columns, 1 on the shared rows against the symmetric-difference
/// columns, infinite everywhere else. With a = |U(x) n U(y)| both members
/// evaluate to 2a(s-a) and everything else is strictly costlier.
inline BipartiteGraph cert_min_family(const Biclique& x, const Biclique& y, int n, int k) {
    const int m = n / 2;
    if (k % 3 != 0) throw ParameterError("cert_min_family: k must be 3s");
    const int s = k / 3;
    detail::require_min_partition_member(x, n, m, s);
    detail::require_min_partition_member(y, n, m, s);
    if (x == y) throw ParameterError("cert_min_family: members must be distinct");

    auto v_common = detail::set_intersection(x.v, y.v);
    BipartiteGraph c(n, ExtendedWeight::infinity());
    for (int i : detail::set_difference(x.u, y.u))
        for (int j : x.v) c.at(i, j) = 0;
    for (int i : detail::set_difference(y.u, x.u))
        for (int j : y.v) c.at(i, j) = 0;
    for (int i : detail::set_union(x.u, y.u))
        for (int j : v_common) c.at(i, j) = 0;
    auto u_common = detail::set_intersection(x.u, y.u);
    for (int i : u_common) {
        for (int j : detail::set_difference(x.v, y.v)) c.at(i, j) = 1;
        for (int j : detail::set_difference(y.v, x.v)) c.at(i, j) = 1;
    }
    return c;
}

/// For two balanced bicliques that share one part and differ by at least two
/// vertices on the other, produce the pair (z, t) on the same shared part
/// whose characteristic vectors sum exactly to char(x) + char(y). The
/// symmetric difference is dealt out alternately in ascending order; if that
/// reproduces x or y, the last two cards are swapped.
inline std::pair<Biclique, Biclique> nonadjacency_witness(const Biclique& x, const Biclique& y) {
    if (!x.balanced() || !y.balanced() || x.u.size() != y.u.size())
        throw ParameterError("nonadjacency_witness: bicliques must be balanced with equal k");
    const bool shared_v = x.v == y.v;
    const bool shared_u = x.u == y.u;
    if (!shared_v && !shared_u)
        throw ParameterError("nonadjacency_witness: one part must coincide");

    const std::vector<int>& xs = shared_v ? x.u : x.v;
    const std::vector<int>& ys = shared_v ? y.u : y.v;
    auto common = detail::set_intersection(xs, ys);
    auto only_x = detail::set_difference(xs, ys);
    auto only_y = detail::set_difference(ys, xs);
    if (only_x.size() < 2)
        throw ParameterError("nonadjacency_witness: parts must differ by at least two vertices");

    std::vector<int> sym = detail::set_union(only_x, only_y);
    std::vector<int> za, ta;
    for (std::size_t i = 0; i < sym.size(); ++i) (i % 2 == 0 ? za : ta).push_back(sym[i]);
    auto assemble = [&](const std::vector<int>& picks) {
        std::vector<int> side = common;
        side.insert(side.end(), picks.begin(), picks.end());
        std::sort(side.begin(), side.end());
        return side;
    };
    std::vector<int> z_side = assemble(za), t_side = assemble(ta);
    if (z_side == xs || z_side == ys) {
        std::swap(za.back(), ta.back());
        z_side = assemble(za);
        t_side = assemble(ta);
    }
    if (shared_v) return {Biclique(z_side, x.v), Biclique(t_side, x.v)};
    return {Biclique(x.u, z_side), Biclique(x.u, t_side)};
}

}  // namespace biclique
