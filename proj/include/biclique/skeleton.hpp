#pragma once

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "biclique/enumerate.hpp"
#include "biclique/graph.hpp"
#include "biclique/simplex.hpp"
#include "biclique/solvers.hpp"

namespace biclique {

enum class AdjacencyMethod { Criterion, MidpointLP, ConeMarginMax, ConeMarginMin };
enum class Domain { FullSpace, Orthant };

inline std::string to_string(AdjacencyMethod m) {
    switch (m) {
        case AdjacencyMethod::Criterion: return "criterion";
        case AdjacencyMethod::MidpointLP: return "midpoint-lp";
        case AdjacencyMethod::ConeMarginMax: return "cone-max";
        default: return "cone-min";
    }
}

/// Combinatorial adjacency test for two k-balanced bicliques: adjacent iff
/// the subgraphs share no part at all, or share one part exactly and differ
/// in a single vertex on the other.
inline bool adjacent_balanced_criterion(const Biclique& x, const Biclique& y) {
    if (!x.balanced() || !y.balanced())
        throw ParameterError("criterion applies to balanced bicliques only");
    if (x.u.size() != y.u.size()) throw ParameterError("criterion: mismatched k");
    if (x == y) throw ParameterError("criterion: bicliques must be distinct");
    auto diff_size = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> d;
        std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(d));
        return d.size();
    };
    const bool same_u = x.u == y.u;
    const bool same_v = x.v == y.v;
    if (!same_u && !same_v) return true;
    if (same_u) return diff_size(x.v, y.v) == 1;
    return diff_size(x.u, y.u) == 1;
}

namespace detail {

inline std::vector<Rational> char_as_rationals(const Biclique& b, int n) {
    CharacteristicVector cv = characteristic_vector(b, n);
    std::vector<Rational> r(cv.bits.size());
    for (std::size_t e = 0; e < cv.bits.size(); ++e) r[e] = int(cv.bits[e]);
    return r;
}

}  // namespace detail

/// Exact polytope-vertex adjacency: x and y are adjacent iff the midpoint of
/// their characteristic vectors cannot be written as a convex combination of
/// the remaining feasible points. Decided by rational phase-1 simplex.
inline bool adjacent_midpoint_lp(std::size_t x_idx, std::size_t y_idx, const FeasibleSet& fs) {
    if (x_idx == y_idx) throw ParameterError("midpoint test: indices must differ");
    if (x_idx >= fs.size() || y_idx >= fs.size())
        throw ParameterError("midpoint test: index out of range");
    const int d = fs.n * fs.n;
    std::vector<std::size_t> others;
    others.reserve(fs.size() - 2);
    for (std::size_t z = 0; z < fs.size(); ++z)
        if (z != x_idx && z != y_idx) others.push_back(z);

    // rows: d coordinate equations plus the convexity row.
    std::vector<std::vector<Rational>> A(d + 1, std::vector<Rational>(others.size(), Rational(0)));
    for (std::size_t col = 0; col < others.size(); ++col) {
        CharacteristicVector cv = characteristic_vector(fs.members[others[col]], fs.n);
        for (int e = 0; e < d; ++e)
            if (cv.bits[e]) A[e][col] = 1;
        A[d][col] = 1;
    }
    CharacteristicVector cx = characteristic_vector(fs.members[x_idx], fs.n);
    CharacteristicVector cy = characteristic_vector(fs.members[y_idx], fs.n);
    std::vector<Rational> b(d + 1);
    for (int e = 0; e < d; ++e) b[e] = Rational(int(cx.bits[e]) + int(cy.bits[e])) / 2;
    b[d] = 1;
    return !lp_feasible(A, b);
}

/// A tie weight vector c with the gap to the third-best feasible point.
/// Adjacency of the two cones is certified exactly when the margin is a
/// positive rational.
struct ConeAdjacencyCertificate {
    BipartiteGraph c;  // finite entries inside the optimization box
    Rational margin = 0;
};

struct ConeAdjacencyResult {
    bool adjacent = false;
    ConeAdjacencyCertificate certificate;
};

namespace detail {

// Margin LP over a working subset W of competitors:
//   maximize t   s.t.  <c,x> = <c,y>,
//                      gap(z) >= t for z in W,          (sense-directed)
//                      lo <= c_e <= 1,
// in standard equality form with c_e = lo + u_e, t = tp - tm, a surplus
// variable per competitor row and a slack per box row.
inline LPResult solve_margin_lp(const std::vector<const CharacteristicVector*>& members,
                                std::size_t x_idx, std::size_t y_idx,
                                const std::vector<std::size_t>& working, Sense sense, int lo,
                                int d) {
    const std::size_t w = working.size();
    const std::size_t cols = d + 2 + w + d;  // u, tp, tm, surpluses, box slacks
    const std::size_t rows = 1 + w + d;
    StandardLP lp;
    lp.A.assign(rows, std::vector<Rational>(cols, Rational(0)));
    lp.b.assign(rows, Rational(0));
    lp.c.assign(cols, Rational(0));
    lp.c[d] = -1;  // maximize t = tp - tm
    lp.c[d + 1] = 1;

    const CharacteristicVector& cx = *members[x_idx];
    const CharacteristicVector& cy = *members[y_idx];

    // <c, x - y> = 0
    long coeff_sum = 0;
    for (int e = 0; e < d; ++e) {
        int diff = int(cx.bits[e]) - int(cy.bits[e]);
        if (diff != 0) {
            lp.A[0][e] = diff;
            coeff_sum += diff;
        }
    }
    lp.b[0] = Rational(-lo * coeff_sum);

    for (std::size_t r = 0; r < w; ++r) {
        const CharacteristicVector& cz = *members[working[r]];
        long sum = 0;
        for (int e = 0; e < d; ++e) {
            int diff = int(cx.bits[e]) - int(cz.bits[e]);
            if (sense == Sense::Min) diff = -diff;
            if (diff != 0) {
                lp.A[1 + r][e] = diff;
                sum += diff;
            }
        }
        lp.A[1 + r][d] = -1;          // -tp
        lp.A[1 + r][d + 1] = 1;       // +tm
        lp.A[1 + r][d + 2 + r] = -1;  // surplus
        lp.b[1 + r] = Rational(-lo * sum);
    }
    for (int e = 0; e < d; ++e) {
        lp.A[1 + w + e][e] = 1;
        lp.A[1 + w + e][d + 2 + w + e] = 1;
        lp.b[1 + w + e] = Rational(1 - lo);
    }
    return solve_lp(lp);
}

}  // namespace detail

/// Maximum-margin tie certificate for one pair of feasible points: maximize t
/// with <c,x> = <c,y> and every other feasible point worse by at least t,
/// entries of c boxed to [0,1] (Orthant) or [-1,1] (FullSpace). Certificates
/// are scale invariant, so the box costs no generality. Solved exactly; for
/// large feasible sets the competitor rows are generated lazily against a
/// full scan, which changes nothing about the optimum.
inline ConeAdjacencyResult cone_adjacent_margin(std::size_t x_idx, std::size_t y_idx,
                                                const FeasibleSet& fs, Sense sense,
                                                Domain domain = Domain::Orthant) {
    if (x_idx == y_idx) throw ParameterError("cone margin test: indices must differ");
    if (x_idx >= fs.size() || y_idx >= fs.size())
        throw ParameterError("cone margin test: index out of range");
    const int d = fs.n * fs.n;
    const int lo = domain == Domain::Orthant ? 0 : -1;

    ConeAdjacencyResult result;
    result.certificate.c = BipartiteGraph(fs.n);
    if (fs.size() == 2) {
        // No competitors: the zero vector ties x and y and nothing can beat
        // them. Report margin 1 for the vacuous strict condition.
        result.adjacent = true;
        result.certificate.margin = 1;
        return result;
    }

    std::vector<CharacteristicVector> chars(fs.size());
    std::vector<const CharacteristicVector*> members(fs.size());
    for (std::size_t z = 0; z < fs.size(); ++z) {
        chars[z] = characteristic_vector(fs.members[z], fs.n);
        members[z] = &chars[z];
    }

    std::vector<std::size_t> all_others;
    all_others.reserve(fs.size() - 2);
    for (std::size_t z = 0; z < fs.size(); ++z)
        if (z != x_idx && z != y_idx) all_others.push_back(z);

    constexpr std::size_t kDirectLimit = 512;
    std::vector<std::size_t> working;
    if (all_others.size() <= kDirectLimit) {
        working = all_others;
    } else {
        // Seed with the competitors closest to the pair in Hamming distance;
        // they are the likely binding rows.
        std::vector<std::pair<int, std::size_t>> ranked;
        ranked.reserve(all_others.size());
        for (std::size_t z : all_others) {
            int dist = 0;
            for (int e = 0; e < d; ++e) {
                dist += int(chars[z].bits[e] != chars[x_idx].bits[e]);
                dist += int(chars[z].bits[e] != chars[y_idx].bits[e]);
            }
            ranked.emplace_back(dist, z);
        }
        std::sort(ranked.begin(), ranked.end());
        for (std::size_t i = 0; i < std::min<std::size_t>(128, ranked.size()); ++i)
            working.push_back(ranked[i].second);
        std::sort(working.begin(), working.end());
    }

    std::vector<char> in_working(fs.size(), 0);
    for (std::size_t z : working) in_working[z] = 1;

    while (true) {
        LPResult lp = detail::solve_margin_lp(members, x_idx, y_idx, working, sense, lo, d);
        if (lp.status != LPStatus::Optimal)
            throw ParameterError("cone margin LP did not reach an optimum");
        Rational margin = -lp.objective;  // objective was -t
        std::vector<Rational> c(d);
        for (int e = 0; e < d; ++e) c[e] = lp.x[e] + lo;

        if (working.size() == all_others.size()) {
            result.certificate.margin = margin;
            for (int e = 0; e < d; ++e) result.certificate.c.weights[e] = ExtendedWeight(c[e]);
            result.adjacent = margin > 0;
            return result;
        }

        // Exact separation scan: collect the most violated competitors.
        Rational vx = 0;
        for (int e = 0; e < d; ++e)
            if (chars[x_idx].bits[e]) vx += c[e];
        std::vector<std::pair<Rational, std::size_t>> violated;
        for (std::size_t z : all_others) {
            if (in_working[z]) continue;
            Rational vz = 0;
            for (int e = 0; e < d; ++e)
                if (chars[z].bits[e]) vz += c[e];
            Rational gap = sense == Sense::Max ? vx - vz : vz - vx;
            if (gap < margin) violated.emplace_back(gap, z);
        }
        if (violated.empty()) {
            result.certificate.margin = margin;
            for (int e = 0; e < d; ++e) result.certificate.c.weights[e] = ExtendedWeight(c[e]);
            result.adjacent = margin > 0;
            return result;
        }
        std::sort(violated.begin(), violated.end());
        const std::size_t take = std::min<std::size_t>(32, violated.size());
        for (std::size_t i = 0; i < take; ++i) {
            working.push_back(violated[i].second);
            in_working[violated[i].second] = 1;
        }
        std::sort(working.begin(), working.end());
    }
}

/// Independent re-check of any tie certificate (finite or with infinite
/// entries) by direct evaluation over the whole feasible set.
struct CertificateCheck {
    bool tie = false;              // <c,x> == <c,y>, both finite
    bool strict = false;           // every other member strictly worse
    ExtendedWeight margin;         // smallest gap to a third member
    ExtendedWeight value;          // the tied objective value
};

inline CertificateCheck verify_certificate(const FeasibleSet& fs, std::size_t x_idx,
                                           std::size_t y_idx, const BipartiteGraph& cert,
                                           Sense sense) {
    if (x_idx == y_idx || x_idx >= fs.size() || y_idx >= fs.size())
        throw ParameterError("certificate check: bad member indices");
    CertificateCheck out;
    ExtendedWeight wx = weight_of(fs.members[x_idx], cert);
    ExtendedWeight wy = weight_of(fs.members[y_idx], cert);
    out.value = wx;
    out.tie = wx.is_finite() && wy.is_finite() && wx == wy;
    if (!out.tie) return out;
    out.margin = ExtendedWeight::infinity();
    out.strict = true;
    for (std::size_t z = 0; z < fs.size(); ++z) {
        if (z == x_idx || z == y_idx) continue;
        ExtendedWeight wz = weight_of(fs.members[z], cert);
        ExtendedWeight gap;
        if (sense == Sense::Max) {
            // finite certificate values only on the Max side
            if (wz.is_infinite()) throw InstanceError("infinite weight in a Max certificate");
            gap = ExtendedWeight(wx.value() - wz.value());
        } else {
            gap = wz.is_infinite() ? ExtendedWeight::infinity()
                                   : ExtendedWeight(wz.value() - wx.value());
        }
        if (gap < out.margin) out.margin = gap;
        if (!(gap > ExtendedWeight(0))) out.strict = false;
    }
    return out;
}

/// Replace infinite entries by a finite stand-in large enough that no set of
/// at most k*k finite edges can compete: (k^2 + 1) times the largest finite
/// entry, at least 1.
inline BipartiteGraph substitute_infinite(const BipartiteGraph& cert, int k) {
    Rational max_finite = 0;
    for (const auto& w : cert.weights)
        if (w.is_finite() && w.value() > max_finite) max_finite = w.value();
    Rational stand_in = (Rational(k) * k + 1) * max_finite;
    if (stand_in < 1) stand_in = 1;
    BipartiteGraph out = cert;
    for (auto& w : out.weights)
        if (w.is_infinite()) w = ExtendedWeight(stand_in);
    return out;
}

/// Adjacency structure over a feasible set: the polytope 1-skeleton (via the
/// balanced criterion or the midpoint LP) or the graph of a nonnegative cone
/// decomposition (via the margin LP in either sense).
struct SkeletonGraph {
    FeasibleSet feasible;
    AdjacencyMethod method = AdjacencyMethod::Criterion;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // i < j, sorted
};

inline SkeletonGraph build_skeleton(const FeasibleSet& fs, AdjacencyMethod method,
                                    unsigned threads = 1) {
    if (fs.size() < 2) throw ParameterError("skeleton needs at least two feasible points");
    if (method == AdjacencyMethod::Criterion && fs.kind != SetKind::Balanced)
        throw ParameterError("criterion skeleton is defined for balanced feasible sets only");
    if (method != AdjacencyMethod::Criterion && fs.size() > 200)
        std::cerr << "skeleton: " << fs.size()
                  << " members means an LP per pair; this may take a while\n";

    const std::size_t m = fs.size();
    const std::size_t pair_count = m * (m - 1) / 2;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(pair_count);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);

    std::vector<char> adjacent(pair_count, 0);
    auto evaluate = [&](std::size_t p) {
        auto [i, j] = pairs[p];
        switch (method) {
            case AdjacencyMethod::Criterion:
                return adjacent_balanced_criterion(fs.members[i], fs.members[j]);
            case AdjacencyMethod::MidpointLP:
                return adjacent_midpoint_lp(i, j, fs);
            case AdjacencyMethod::ConeMarginMax:
                return cone_adjacent_margin(i, j, fs, Sense::Max, Domain::Orthant).adjacent;
            default:
                return cone_adjacent_margin(i, j, fs, Sense::Min, Domain::Orthant).adjacent;
        }
    };

    threads = std::max(1u, threads);
    if (threads == 1 || pair_count < 2 * threads) {
        for (std::size_t p = 0; p < pair_count; ++p) adjacent[p] = evaluate(p) ? 1 : 0;
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (pair_count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(pair_count, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (std::size_t p = lo; p < hi; ++p) adjacent[p] = evaluate(p) ? 1 : 0;
            });
        }
        for (auto& th : pool) th.join();
    }

    SkeletonGraph sg;
    sg.feasible = fs;
    sg.method = method;
    for (std::size_t p = 0; p < pair_count; ++p)
        if (adjacent[p]) sg.edges.push_back(pairs[p]);
    return sg;
}

struct CliqueResult {
    int omega = 0;
    std::vector<int> witness;  // member indices, ascending
};

/// Exact maximum clique by branch and bound with pivoting: the branching set
/// P \ N(pivot) with the |R| + |P| bound. Exhaustive, so omega is exact.
inline CliqueResult max_clique(const SkeletonGraph& sg) {
    const std::size_t m = sg.feasible.size();
    CliqueResult best;
    if (m == 0) return best;
    using Bits = boost::dynamic_bitset<>;
    std::vector<Bits> nbr(m, Bits(m));
    for (auto [i, j] : sg.edges) {
        nbr[i].set(j);
        nbr[j].set(i);
    }

    std::vector<int> current;
    auto extend = [&](auto&& self, Bits candidates, Bits excluded) -> void {
        if (candidates.none() && excluded.none()) {
            if (static_cast<int>(current.size()) > best.omega) {
                best.omega = static_cast<int>(current.size());
                best.witness = current;
            }
            return;
        }
        if (static_cast<int>(current.size() + candidates.count()) <= best.omega) return;
        // pivot: vertex covering the most candidates
        std::size_t pivot = Bits::npos;
        std::size_t cover = 0;
        Bits both = candidates | excluded;
        for (std::size_t u = both.find_first(); u != Bits::npos; u = both.find_next(u)) {
            std::size_t c = (candidates & nbr[u]).count();
            if (pivot == Bits::npos || c > cover) {
                pivot = u;
                cover = c;
            }
        }
        Bits branch = candidates & ~nbr[pivot];
        for (std::size_t v = branch.find_first(); v != Bits::npos; v = branch.find_next(v)) {
            current.push_back(static_cast<int>(v));
            self(self, candidates & nbr[v], excluded & nbr[v]);
            current.pop_back();
            candidates.reset(v);
            excluded.set(v);
            if (static_cast<int>(current.size() + candidates.count()) <= best.omega) return;
        }
    };
    Bits all(m);
    all.set();
    extend(extend, all, Bits(m));
    std::sort(best.witness.begin(), best.witness.end());
    return best;
}

inline std::string biclique_label(const Biclique& b) {
    auto join = [](const std::vector<int>& xs) {
        std::ostringstream os;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) os << ",";
            os << xs[i];
        }
        return os.str();
    };
    return "u:{" + join(b.u) + "}|v:{" + join(b.v) + "}";
}

inline std::string to_dot(const SkeletonGraph& sg) {
    std::ostringstream os;
    os << "graph skeleton {\n  node [shape=box];\n";
    for (std::size_t i = 0; i < sg.feasible.size(); ++i)
        os << "  " << i << " [label=\"" << biclique_label(sg.feasible.members[i]) << "\"];\n";
    for (auto [i, j] : sg.edges) os << "  " << i << " -- " << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace biclique
