#pragma once

// Dense two-phase simplex over exact rationals.
//
// Pivoting follows Bland's rule (lowest-index entering column, lowest-index
// leaving basic variable among ratio ties), so the method terminates on
// degenerate problems without any perturbation. Everything lives in the call
// frame; solve() is reentrant.

#include "bsets/rational.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bsets::lp {

enum class Relation { LessEq, Equal, GreaterEq };

struct Term {
    std::size_t var;
    Rat coef;
};

struct Constraint {
    std::vector<Term> terms;
    Relation rel = Relation::Equal;
    Rat rhs;
};

// minimize objective . x  subject to rows, x_j >= 0 unless free[j]
struct LinearProgram {
    std::size_t num_vars = 0;
    std::vector<bool> free;
    std::vector<Rat> objective;
    std::vector<Constraint> rows;

    explicit LinearProgram(std::size_t n = 0) : num_vars(n), free(n, false), objective(n) {}

    std::size_t add_var(bool is_free, Rat cost = 0)
    {
        free.push_back(is_free);
        objective.push_back(std::move(cost));
        return num_vars++;
    }

    void add_row(std::vector<Term> terms, Relation rel, Rat rhs)
    {
        rows.push_back(Constraint{std::move(terms), rel, std::move(rhs)});
    }
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rat objective;
    std::vector<Rat> x;
    std::size_t pivots = 0;
};

namespace detail {

class Tableau {
public:
    Tableau(std::size_t rows, std::size_t cols)
        : a_(rows, std::vector<Rat>(cols + 1)), basis_(rows, 0), cost_(cols + 1) {}

    std::size_t rows() const { return a_.size(); }
    std::size_t cols() const { return cost_.size() - 1; }
    Rat& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    Rat& rhs(std::size_t r) { return a_[r].back(); }
    std::size_t& basis(std::size_t r) { return basis_[r]; }
    const std::vector<std::size_t>& basis() const { return basis_; }

    // reduced-cost row for the objective c, pricing out the current basis
    void set_objective(const std::vector<Rat>& c)
    {
        for (std::size_t j = 0; j < cols(); ++j)
            cost_[j] = j < c.size() ? c[j] : Rat(0);
        cost_.back() = 0;
        for (std::size_t r = 0; r < rows(); ++r) {
            const Rat cb = basis_[r] < c.size() ? c[basis_[r]] : Rat(0);
            if (cb == 0)
                continue;
            for (std::size_t j = 0; j <= cols(); ++j)
                if (a_[r][j] != 0)
                    cost_[j] -= cb * a_[r][j];
        }
    }

    // current objective value
    Rat value() const { return -cost_.back(); }

    void pivot(std::size_t pr, std::size_t pc)
    {
        std::vector<Rat>& prow = a_[pr];
        const Rat inv = 1 / prow[pc];
        for (auto& v : prow)
            if (v != 0)
                v *= inv;
        for (std::size_t r = 0; r < rows(); ++r) {
            if (r == pr || a_[r][pc] == 0)
                continue;
            const Rat factor = a_[r][pc];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (prow[j] != 0)
                    a_[r][j] -= factor * prow[j];
        }
        if (cost_[pc] != 0) {
            const Rat factor = cost_[pc];
            for (std::size_t j = 0; j <= cols(); ++j)
                if (prow[j] != 0)
                    cost_[j] -= factor * prow[j];
        }
        basis_[pr] = pc;
        ++pivots_;
    }

    // Runs primal simplex over columns [0, limit). Returns false if unbounded.
    bool optimize(std::size_t limit)
    {
        for (;;) {
            std::optional<std::size_t> enter;
            for (std::size_t j = 0; j < limit; ++j)
                if (cost_[j] < 0) {
                    enter = j;
                    break;
                }
            if (!enter)
                return true;

            std::optional<std::size_t> leave;
            Rat best;
            for (std::size_t r = 0; r < rows(); ++r) {
                const Rat& coef = a_[r][*enter];
                if (coef <= 0)
                    continue;
                Rat ratio = a_[r].back() / coef;
                if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
                    leave = r;
                    best = std::move(ratio);
                }
            }
            if (!leave)
                return false;
            pivot(*leave, *enter);
        }
    }

    void drop_row(std::size_t r)
    {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    }

    std::size_t pivots() const { return pivots_; }

private:
    std::vector<std::vector<Rat>> a_;
    std::vector<std::size_t> basis_;
    std::vector<Rat> cost_;
    std::size_t pivots_ = 0;
};

} // namespace detail

inline Solution solve(const LinearProgram& lp)
{
    if (lp.free.size() != lp.num_vars || lp.objective.size() != lp.num_vars)
        throw std::invalid_argument("linear program: inconsistent variable metadata");

    // structural columns: x_j = pos_j - neg_j for free variables
    std::vector<std::size_t> pos_col(lp.num_vars), neg_col(lp.num_vars, SIZE_MAX);
    std::size_t ncols = 0;
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        pos_col[j] = ncols++;
        if (lp.free[j])
            neg_col[j] = ncols++;
    }
    std::vector<std::size_t> slack_col(lp.rows.size(), SIZE_MAX);
    for (std::size_t r = 0; r < lp.rows.size(); ++r)
        if (lp.rows[r].rel != Relation::Equal)
            slack_col[r] = ncols++;
    const std::size_t structural = ncols;
    const std::size_t m = lp.rows.size();
    const std::size_t total = structural + m; // one artificial per row

    detail::Tableau t(m, total);
    for (std::size_t r = 0; r < m; ++r) {
        const Constraint& row = lp.rows[r];
        for (const Term& term : row.terms) {
            if (term.var >= lp.num_vars)
                throw std::out_of_range("linear program: variable index out of range");
            t.at(r, pos_col[term.var]) += term.coef;
            if (neg_col[term.var] != SIZE_MAX)
                t.at(r, neg_col[term.var]) -= term.coef;
        }
        if (slack_col[r] != SIZE_MAX)
            t.at(r, slack_col[r]) = row.rel == Relation::LessEq ? 1 : -1;
        t.rhs(r) = row.rhs;
        if (t.rhs(r) < 0)
            for (std::size_t j = 0; j <= total; ++j)
                if (t.at(r, j) != 0)
                    t.at(r, j) = -t.at(r, j);
        t.at(r, structural + r) = 1;
        t.basis(r) = structural + r;
    }

    // phase 1: drive the artificial sum to zero
    std::vector<Rat> phase1(total);
    for (std::size_t r = 0; r < m; ++r)
        phase1[structural + r] = 1;
    t.set_objective(phase1);
    t.optimize(total);

    Solution sol;
    if (t.value() != 0) {
        sol.status = Status::Infeasible;
        sol.pivots = t.pivots();
        return sol;
    }

    // pivot remaining (zero-level) artificials out, dropping redundant rows
    for (std::size_t r = t.rows(); r-- > 0;) {
        if (t.basis(r) < structural)
            continue;
        std::optional<std::size_t> col;
        for (std::size_t j = 0; j < structural; ++j)
            if (t.at(r, j) != 0) {
                col = j;
                break;
            }
        if (col)
            t.pivot(r, *col);
        else
            t.drop_row(r);
    }

    std::vector<Rat> phase2(total);
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        phase2[pos_col[j]] = lp.objective[j];
        if (neg_col[j] != SIZE_MAX)
            phase2[neg_col[j]] = -lp.objective[j];
    }
    t.set_objective(phase2);
    if (!t.optimize(structural)) {
        sol.status = Status::Unbounded;
        sol.pivots = t.pivots();
        return sol;
    }

    std::vector<Rat> col_value(total);
    for (std::size_t r = 0; r < t.rows(); ++r)
        col_value[t.basis(r)] = t.rhs(r);
    sol.x.resize(lp.num_vars);
    for (std::size_t j = 0; j < lp.num_vars; ++j) {
        sol.x[j] = col_value[pos_col[j]];
        if (neg_col[j] != SIZE_MAX)
            sol.x[j] -= col_value[neg_col[j]];
    }
    sol.status = Status::Optimal;
    sol.objective = t.value();
    sol.pivots = t.pivots();
    return sol;
}

} // namespace bsets::lp
