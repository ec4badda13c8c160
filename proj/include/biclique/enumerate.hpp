#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "biclique/graph.hpp"

namespace biclique {

enum class SetKind { Balanced, Unbalanced };

/// The full solution space of one problem instance size: every k-balanced
/// biclique (Balanced), or every biclique on k vertices total (Unbalanced).
/// Members are in canonical order: |u| ascending, then (u, v) lexicographic.
struct FeasibleSet {
    int n = 0;
    int k = 0;
    SetKind kind = SetKind::Balanced;
    std::vector<Biclique> members;

    std::size_t size() const { return members.size(); }

    /// Index of a member in canonical order, or nullopt.
    std::optional<std::size_t> index_of(const Biclique& b) const {
        auto it = std::lower_bound(members.begin(), members.end(), b);
        if (it == members.end() || !(*it == b)) return std::nullopt;
        return static_cast<std::size_t>(it - members.begin());
    }
};

/// Visit all k-subsets of {0,...,n-1} in lexicographic order.
inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        fn(s);
        int i = k - 1;
        while (i >= 0 && s[i] == n - k + i) --i;
        if (i < 0) break;
        ++s[i];
        for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

inline FeasibleSet enumerate_balanced(int n, int k) {
    if (n < 1) throw ParameterError("enumerate_balanced: n must be positive");
    if (k < 1 || k > n) throw ParameterError("enumerate_balanced: k must satisfy 1 <= k <= n");
    FeasibleSet fs;
    fs.n = n;
    fs.k = k;
    fs.kind = SetKind::Balanced;
    fs.members.reserve(binomial(n, k) * binomial(n, k));
    for_each_subset(n, k, [&](const std::vector<int>& u) {
        for_each_subset(n, k, [&](const std::vector<int>& v) { fs.members.emplace_back(u, v); });
    });
    return fs;
}

inline FeasibleSet enumerate_unbalanced(int n, int k) {
    if (n < 1) throw ParameterError("enumerate_unbalanced: n must be positive");
    if (k < 2 || k > 2 * n)
        throw ParameterError("enumerate_unbalanced: k must satisfy 2 <= k <= 2n");
    FeasibleSet fs;
    fs.n = n;
    fs.k = k;
    fs.kind = SetKind::Unbalanced;
    const int a_lo = std::max(1, k - n);
    const int a_hi = std::min(n, k - 1);
    for (int a = a_lo; a <= a_hi; ++a) {
        for_each_subset(n, a, [&](const std::vector<int>& u) {
            for_each_subset(n, k - a,
                            [&](const std::vector<int>& v) { fs.members.emplace_back(u, v); });
        });
    }
    return fs;
}

inline FeasibleSet enumerate_feasible(int n, int k, SetKind kind) {
    return kind == SetKind::Balanced ? enumerate_balanced(n, k) : enumerate_unbalanced(n, k);
}

inline std::string to_string(SetKind kind) {
    return kind == SetKind::Balanced ? "balanced" : "unbalanced";
}

}  // namespace biclique
