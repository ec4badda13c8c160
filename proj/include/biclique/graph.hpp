#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "biclique/errors.hpp"
#include "biclique/rational.hpp"

namespace biclique {

/// A feasible solution: one nonempty vertex subset per part, sorted ascending.
/// Indices are 0-based everywhere, including the file formats.
struct Biclique {
    std::vector<int> u;
    std::vector<int> v;

    Biclique() = default;
    Biclique(std::vector<int> u_sel, std::vector<int> v_sel)
        : u(std::move(u_sel)), v(std::move(v_sel)) {}

    bool balanced() const { return u.size() == v.size(); }
    int total_vertices() const { return static_cast<int>(u.size() + v.size()); }

    /// Throws unless both parts are nonempty, strictly increasing, and within [0, n).
    void validate(int n) const {
        auto check = [n](const std::vector<int>& side, const char* name) {
            if (side.empty()) throw ParameterError(std::string("biclique has empty part ") + name);
            for (std::size_t i = 0; i < side.size(); ++i) {
                if (side[i] < 0 || side[i] >= n)
                    throw ParameterError(std::string("biclique index out of range in part ") + name);
                if (i > 0 && side[i - 1] >= side[i])
                    throw ParameterError(std::string("biclique part not strictly ascending: ") + name);
            }
        };
        check(u, "u");
        check(v, "v");
    }

    friend bool operator==(const Biclique& a, const Biclique& b) {
        return a.u == b.u && a.v == b.v;
    }
    friend bool operator!=(const Biclique& a, const Biclique& b) { return !(a == b); }

    /// Canonical order: part sizes first, then both parts lexicographically.
    /// This is the enumeration order of every feasible set and the global
    /// tie-break order of every solver.
    friend bool operator<(const Biclique& a, const Biclique& b) {
        return std::tie(a.u.size(), a.u, a.v) < std::tie(b.u.size(), b.u, b.v);
    }
};

/// 0/1 vector of length n*n encoding a biclique; entry (i, j) sits at i*n + j.
struct CharacteristicVector {
    int n = 0;
    std::vector<std::uint8_t> bits;

    int dimension() const { return n * n; }
    std::uint8_t at(int i, int j) const { return bits[static_cast<std::size_t>(i) * n + j]; }

    friend bool operator==(const CharacteristicVector& a, const CharacteristicVector& b) {
        return a.n == b.n && a.bits == b.bits;
    }
};

inline CharacteristicVector characteristic_vector(const Biclique& b, int n) {
    b.validate(n);
    CharacteristicVector x;
    x.n = n;
    x.bits.assign(static_cast<std::size_t>(n) * n, 0);
    for (int i : b.u)
        for (int j : b.v) x.bits[static_cast<std::size_t>(i) * n + j] = 1;
    return x;
}

/// Complete weighted bipartite graph on n + n vertices. Also used as the
/// carrier for certificate weight vectors, which live in the same space.
struct BipartiteGraph {
    int n = 0;
    std::vector<ExtendedWeight> weights;  // row-major n*n

    BipartiteGraph() = default;
    explicit BipartiteGraph(int parts, ExtendedWeight fill = ExtendedWeight(0))
        : n(parts), weights(static_cast<std::size_t>(parts) * parts, fill) {
        if (parts <= 0) throw ParameterError("graph needs a positive number of vertices per part");
    }

    ExtendedWeight& at(int i, int j) { return weights[static_cast<std::size_t>(i) * n + j]; }
    const ExtendedWeight& at(int i, int j) const {
        return weights[static_cast<std::size_t>(i) * n + j];
    }

    bool all_finite() const {
        return std::all_of(weights.begin(), weights.end(),
                           [](const ExtendedWeight& w) { return w.is_finite(); });
    }
    bool all_nonnegative() const {
        return std::all_of(weights.begin(), weights.end(), [](const ExtendedWeight& w) {
            return w.is_infinite() || w.value() >= 0;
        });
    }
};

/// Sum of edge weights of the subgraph spanned by the biclique; infinite as
/// soon as one touched edge is infinite.
inline ExtendedWeight weight_of(const Biclique& b, const BipartiteGraph& g) {
    b.validate(g.n);
    ExtendedWeight total(0);
    for (int i : b.u) {
        for (int j : b.v) {
            const ExtendedWeight& w = g.at(i, j);
            if (w.is_infinite()) return ExtendedWeight::infinity();
            total += w;
        }
    }
    return total;
}

/// Plain bipartite graph given by an n-by-n 0/1 adjacency matrix.
struct UnweightedBipartiteGraph {
    int n = 0;
    std::vector<std::uint8_t> adjacency;  // row-major n*n

    UnweightedBipartiteGraph() = default;
    explicit UnweightedBipartiteGraph(int parts)
        : n(parts), adjacency(static_cast<std::size_t>(parts) * parts, 0) {
        if (parts <= 0) throw ParameterError("graph needs a positive number of vertices per part");
    }

    bool edge(int i, int j) const { return adjacency[static_cast<std::size_t>(i) * n + j] != 0; }
    void set_edge(int i, int j, bool present = true) {
        adjacency[static_cast<std::size_t>(i) * n + j] = present ? 1 : 0;
    }
    std::size_t edge_count() const {
        return static_cast<std::size_t>(
            std::count(adjacency.begin(), adjacency.end(), std::uint8_t{1}));
    }

    UnweightedBipartiteGraph complement() const {
        UnweightedBipartiteGraph c(n);
        for (std::size_t e = 0; e < adjacency.size(); ++e) c.adjacency[e] = adjacency[e] ? 0 : 1;
        return c;
    }

    /// True iff every selected pair is an edge.
    bool complete_on(const Biclique& b) const {
        for (int i : b.u)
            for (int j : b.v)
                if (!edge(i, j)) return false;
        return true;
    }
};

}  // namespace biclique
