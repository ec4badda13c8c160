#pragma once

#include <cstddef>
#include <vector>

#include "biclique/rational.hpp"

namespace biclique {

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPResult {
    LPStatus status = LPStatus::Infeasible;
    Rational objective = 0;   // value of c*x at the optimum
    std::vector<Rational> x;  // primal solution, empty unless Optimal
};

/// minimize c*x subject to A x = b, x >= 0.
struct StandardLP {
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rational> c;
};

/// Two-phase primal simplex over exact rationals. Every comparison is against
/// exact zero; there are no tolerances anywhere. Pivot selection is Bland's
/// rule (lowest eligible index in, lowest basic index out on ratio ties),
/// which rules out cycling, so termination is guaranteed.
class Simplex {
public:
    explicit Simplex(const StandardLP& lp)
        : m_(lp.A.size()), n_(lp.c.size()), tableau_(lp.A), rhs_(lp.b), cost_(lp.c) {
        for (auto& row : tableau_)
            if (row.size() != n_) throw ParameterError("simplex: ragged constraint matrix");
        if (rhs_.size() != m_) throw ParameterError("simplex: rhs size mismatch");
        for (std::size_t i = 0; i < m_; ++i) {
            if (rhs_[i] < 0) {
                for (auto& a : tableau_[i]) a = -a;
                rhs_[i] = -rhs_[i];
            }
        }
    }

    /// Runs phase 1 and, unless `feasibility_only`, phase 2.
    LPResult solve(bool feasibility_only = false) {
        install_crash_basis();
        LPResult result;
        if (!phase1()) {
            result.status = LPStatus::Infeasible;
            return result;
        }
        if (!feasibility_only && !phase2()) {
            result.status = LPStatus::Unbounded;
            return result;
        }
        result.status = LPStatus::Optimal;
        result.x = extract_solution();
        for (std::size_t j = 0; j < n_; ++j)
            if (!is_zero(result.x[j])) result.objective += cost_[j] * result.x[j];
        return result;
    }

private:
    static bool is_zero(const Rational& r) { return r.sign() == 0; }

    // Columns >= n_ are artificials. Existing unit columns are adopted as the
    // starting basis so artificials are only created for the leftover rows.
    void install_crash_basis() {
        basis_.assign(m_, -1);
        std::vector<char> used(n_, 0);
        for (std::size_t j = 0; j < n_; ++j) {
            long pivot_row = -1;
            bool unit = true;
            for (std::size_t i = 0; i < m_ && unit; ++i) {
                const Rational& a = tableau_[i][j];
                if (is_zero(a)) continue;
                if (a == 1 && pivot_row < 0 && basis_[i] < 0)
                    pivot_row = static_cast<long>(i);
                else
                    unit = false;
            }
            if (unit && pivot_row >= 0 && !used[j]) {
                basis_[pivot_row] = static_cast<long>(j);
                used[j] = 1;
            }
        }
        artificial_of_row_.assign(m_, -1);
        std::size_t next = n_;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 0) {
                artificial_of_row_[i] = static_cast<long>(next);
                basis_[i] = static_cast<long>(next);
                ++next;
            }
        }
        total_cols_ = next;
        for (std::size_t i = 0; i < m_; ++i) {
            tableau_[i].resize(total_cols_, Rational(0));
            if (artificial_of_row_[i] >= 0) tableau_[i][artificial_of_row_[i]] = 1;
        }
    }

    // Reduced-cost row for the given per-variable costs.
    void build_objective(const std::vector<Rational>& full_cost) {
        obj_ = full_cost;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 0) continue;
            const Rational& cb = full_cost[basis_[i]];
            if (is_zero(cb)) continue;
            for (std::size_t j = 0; j < total_cols_; ++j)
                if (!is_zero(tableau_[i][j])) obj_[j] -= cb * tableau_[i][j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rational p = tableau_[row][col];
        for (std::size_t j = 0; j < total_cols_; ++j)
            if (!is_zero(tableau_[row][j])) tableau_[row][j] /= p;
        rhs_[row] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || is_zero(tableau_[i][col])) continue;
            const Rational f = tableau_[i][col];
            for (std::size_t j = 0; j < total_cols_; ++j)
                if (!is_zero(tableau_[row][j])) tableau_[i][j] -= f * tableau_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        if (!is_zero(obj_[col])) {
            const Rational f = obj_[col];
            for (std::size_t j = 0; j < total_cols_; ++j)
                if (!is_zero(tableau_[row][j])) obj_[j] -= f * tableau_[row][j];
        }
        basis_[row] = static_cast<long>(col);
    }

    // One Bland step. Entering: lowest-index allowed column with negative
    // reduced cost. Leaving: minimum ratio, ties to the lowest basic variable
    // index. Rows whose basis entry is -1 were dropped as redundant.
    bool bland_step(const std::vector<char>& allowed, bool& unbounded) {
        unbounded = false;
        long col = -1;
        for (std::size_t j = 0; j < total_cols_; ++j) {
            if (allowed[j] && obj_[j] < 0) {
                col = static_cast<long>(j);
                break;
            }
        }
        if (col < 0) return false;
        long row = -1;
        Rational best_ratio;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < 0) continue;
            const Rational& a = tableau_[i][col];
            if (a > 0) {
                Rational ratio = rhs_[i] / a;
                if (row < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[row])) {
                    row = static_cast<long>(i);
                    best_ratio = ratio;
                }
            }
        }
        if (row < 0) {
            unbounded = true;
            return false;
        }
        pivot(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
        return true;
    }

    bool phase1() {
        bool any_artificial = false;
        for (long a : artificial_of_row_) any_artificial |= (a >= 0);
        if (!any_artificial) return true;
        std::vector<Rational> cost1(total_cols_, Rational(0));
        for (long a : artificial_of_row_)
            if (a >= 0) cost1[a] = 1;
        build_objective(cost1);
        std::vector<char> allowed(total_cols_, 1);
        bool unbounded = false;
        while (bland_step(allowed, unbounded)) {
        }
        Rational infeasibility = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= static_cast<long>(n_)) infeasibility += rhs_[i];
        if (!is_zero(infeasibility)) return false;
        expel_artificials();
        return true;
    }

    // Basic artificials sit at value zero here: pivot them out on any nonzero
    // structural column (a degenerate pivot, feasibility is untouched), or
    // drop the row as redundant.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < static_cast<long>(n_)) continue;
            long col = -1;
            for (std::size_t j = 0; j < n_; ++j) {
                if (!is_zero(tableau_[i][j])) {
                    col = static_cast<long>(j);
                    break;
                }
            }
            if (col >= 0)
                pivot(i, static_cast<std::size_t>(col));
            else
                basis_[i] = -1;
        }
    }

    bool phase2() {
        std::vector<Rational> cost2(total_cols_, Rational(0));
        for (std::size_t j = 0; j < n_; ++j) cost2[j] = cost_[j];
        build_objective(cost2);
        std::vector<char> allowed(total_cols_, 0);
        for (std::size_t j = 0; j < n_; ++j) allowed[j] = 1;
        bool unbounded = false;
        while (bland_step(allowed, unbounded)) {
        }
        return !unbounded;
    }

    std::vector<Rational> extract_solution() const {
        std::vector<Rational> x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= 0 && basis_[i] < static_cast<long>(n_)) x[basis_[i]] = rhs_[i];
        return x;
    }

    std::size_t m_, n_, total_cols_ = 0;
    std::vector<std::vector<Rational>> tableau_;
    std::vector<Rational> rhs_;
    std::vector<Rational> cost_;
    std::vector<Rational> obj_;
    std::vector<long> basis_;
    std::vector<long> artificial_of_row_;
};

inline LPResult solve_lp(const StandardLP& lp) { return Simplex(lp).solve(false); }

/// Phase-1 feasibility of { A x = b, x >= 0 }.
inline bool lp_feasible(const std::vector<std::vector<Rational>>& A,
                        const std::vector<Rational>& b) {
    StandardLP lp;
    lp.A = A;
    lp.b = b;
    lp.c.assign(A.empty() ? 0 : A.front().size(), Rational(0));
    return Simplex(lp).solve(true).status == LPStatus::Optimal;
}

}  // namespace biclique
