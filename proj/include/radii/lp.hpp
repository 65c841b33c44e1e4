#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "radii/errors.hpp"
#include "radii/linalg.hpp"
#include "radii/tolerances.hpp"
#include "radii/vec.hpp"

namespace radii {

enum class Relation { le, eq, ge };
enum class Sense { minimize, maximize };
enum class LpStatus { optimal, infeasible, unbounded };

struct LpRow {
    Vec a;
    Relation rel = Relation::le;
    double b = 0.0;
};

struct SimplexOptions {
    int max_pivots = 50000;    // hard cap, exceeding it is a SolverFailure
    int stall_limit = 100;     // degenerate pivots before switching to Bland's rule
    double eps_pivot = 1e-10;  // entering / ratio tolerance
};

/// Reported duals follow the Lagrangian convention for the requested sense:
/// with s = +1 for minimize and s = -1 for maximize, and rho_i = +1 for
/// "<=" and "=" rows, -1 for ">=" rows, the multipliers satisfy
///     s*c + sum_i duals[i] * rho_i * a_i = 0  over free variables,
/// duals[i] >= 0 on inequality rows, and the dual objective
///     -s * sum_i duals[i] * rho_i * b_i
/// matches the primal objective at an optimum.
struct LPSolution {
    LpStatus status = LpStatus::infeasible;
    Vec x;
    double objective = std::numeric_limits<double>::quiet_NaN();
    Vec duals;
    double dual_objective = std::numeric_limits<double>::quiet_NaN();
};

struct LpProblem {
    Vec c;
    std::vector<LpRow> rows;
    Sense sense = Sense::minimize;
    std::vector<bool> nonneg;  // per-variable; empty means all variables free
};

namespace detail {

class SimplexTableau {
public:
    SimplexTableau(const LpProblem& p, const SimplexOptions& opt) : opt_(opt) {
        const std::size_t nvar = p.c.size();
        m_ = p.rows.size();
        // Column layout: one column per nonnegative variable, a (+,-) pair per
        // free variable, then slacks, then artificials.
        col_of_var_.resize(nvar);
        neg_col_of_var_.assign(nvar, SIZE_MAX);
        for (std::size_t j = 0; j < nvar; ++j) {
            col_of_var_[j] = ncols_++;
            const bool is_nonneg = j < p.nonneg.size() && p.nonneg[j];
            if (!is_nonneg) neg_col_of_var_[j] = ncols_++;
        }
        slack_col_.assign(m_, SIZE_MAX);
        for (std::size_t i = 0; i < m_; ++i)
            if (p.rows[i].rel != Relation::eq) slack_col_[i] = ncols_++;
        first_artificial_ = ncols_;
        const double sense_sign = p.sense == Sense::minimize ? 1.0 : -1.0;
        cost_.assign(ncols_, 0.0);
        for (std::size_t j = 0; j < nvar; ++j) {
            cost_[col_of_var_[j]] = sense_sign * p.c[j];
            if (neg_col_of_var_[j] != SIZE_MAX) cost_[neg_col_of_var_[j]] = -sense_sign * p.c[j];
        }

        flip_.assign(m_, false);
        rhs_.assign(m_, 0.0);
        rows_.assign(m_, Vec(ncols_, 0.0));
        basis_.assign(m_, SIZE_MAX);
        std::vector<std::size_t> needs_artificial;
        for (std::size_t i = 0; i < m_; ++i) {
            const LpRow& row = p.rows[i];
            if (row.a.size() != nvar) throw InputError("solve_lp: row dimension mismatch");
            if (!all_finite(row.a) || !std::isfinite(row.b))
                throw InputError("solve_lp: non-finite row data");
            double slack_sign = row.rel == Relation::le ? 1.0 : row.rel == Relation::ge ? -1.0 : 0.0;
            double f = 1.0;
            if (row.b < 0) {
                f = -1.0;
                flip_[i] = true;
            }
            rhs_[i] = f * row.b;
            for (std::size_t j = 0; j < nvar; ++j) {
                const double v = f * row.a[j];
                rows_[i][col_of_var_[j]] = v;
                if (neg_col_of_var_[j] != SIZE_MAX) rows_[i][neg_col_of_var_[j]] = -v;
            }
            if (slack_col_[i] != SIZE_MAX) rows_[i][slack_col_[i]] = f * slack_sign;
            if (slack_col_[i] != SIZE_MAX && f * slack_sign > 0) {
                basis_[i] = slack_col_[i];
            } else {
                needs_artificial.push_back(i);
            }
        }
        for (std::size_t i : needs_artificial) {
            const std::size_t col = ncols_++;
            for (Vec& r : rows_) r.push_back(0.0);
            cost_.push_back(0.0);
            rows_[i][col] = 1.0;
            basis_[i] = col;
        }
        matrix_copy_ = rows_;  // original standard-form columns, for dual recovery
    }

    LpStatus run() {
        if (first_artificial_ < ncols_) {
            Vec phase1_cost(ncols_, 0.0);
            for (std::size_t c = first_artificial_; c < ncols_; ++c) phase1_cost[c] = 1.0;
            if (!iterate(phase1_cost, /*phase1=*/true)) throw SolverFailure("simplex: phase 1 stalled");
            if (phase1_objective() > 1e-7) return LpStatus::infeasible;
            drive_out_artificials();
        }
        if (!iterate(cost_, /*phase1=*/false)) return LpStatus::unbounded;
        return LpStatus::optimal;
    }

    Vec primal(std::size_t nvar) const {
        Vec col_val(ncols_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) col_val[basis_[i]] = rhs_[i];
        Vec x(nvar, 0.0);
        for (std::size_t j = 0; j < nvar; ++j) {
            x[j] = col_val[col_of_var_[j]];
            if (neg_col_of_var_[j] != SIZE_MAX) x[j] -= col_val[neg_col_of_var_[j]];
        }
        return x;
    }

    /// Equality-form duals y with B^T y = cost_B, mapped back through row flips.
    Vec equality_duals() const {
        Matrix bt(m_, Vec(m_, 0.0));
        Vec cb(m_, 0.0);
        for (std::size_t i = 0; i < m_; ++i) {
            cb[i] = cost_[basis_[i]];
            for (std::size_t r = 0; r < m_; ++r) bt[i][r] = matrix_copy_[r][basis_[i]];
        }
        auto y = detail::solve_square(std::move(bt), std::move(cb));
        if (!y) throw SolverFailure("simplex: singular basis while recovering duals");
        for (std::size_t i = 0; i < m_; ++i)
            if (flip_[i]) (*y)[i] = -(*y)[i];
        return *y;
    }

private:
    double phase1_objective() const {
        double s = 0;
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] >= first_artificial_) s += rhs_[i];
        return s;
    }

    // Degenerate-but-feasible pivots that remove artificials from the basis
    // after phase 1; rows that cannot be cleared are redundant and inert.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < first_artificial_) continue;
            if (std::fabs(rhs_[i]) <= 1e-7) rhs_[i] = 0.0;
            std::size_t best = SIZE_MAX;
            for (std::size_t c = 0; c < first_artificial_; ++c)
                if (std::fabs(rows_[i][c]) > 1e-8 &&
                    (best == SIZE_MAX || std::fabs(rows_[i][c]) > std::fabs(rows_[i][best])))
                    best = c;
            if (best != SIZE_MAX) pivot(i, best);
        }
    }

    bool iterate(const Vec& cost, bool phase1) {
        Vec reduced(ncols_);
        int pivots = 0, stall = 0;
        bool bland = false;
        double prev_obj = current_objective(cost);
        for (;;) {
            if (pivots++ > opt_.max_pivots) throw SolverFailure("simplex: pivot budget exhausted");
            // reduced costs: c_j - y.A_j with y from the current basis, done
            // incrementally via the tableau (cost row priced out on the basis)
            compute_reduced(cost, reduced);
            std::size_t enter = SIZE_MAX;
            if (!bland) {
                double best = -opt_.eps_pivot;
                for (std::size_t c = 0; c < ncols_; ++c) {
                    if (!phase1 && c >= first_artificial_) continue;
                    if (reduced[c] < best) {
                        best = reduced[c];
                        enter = c;
                    }
                }
            } else {
                for (std::size_t c = 0; c < ncols_; ++c) {
                    if (!phase1 && c >= first_artificial_) continue;
                    if (reduced[c] < -opt_.eps_pivot) {
                        enter = c;
                        break;
                    }
                }
            }
            if (enter == SIZE_MAX) return true;  // optimal for this phase
            std::size_t leave = SIZE_MAX;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m_; ++i) {
                const double coeff = rows_[i][enter];
                if (coeff <= opt_.eps_pivot) continue;
                const double ratio = rhs_[i] / coeff;
                if (ratio < best_ratio - 1e-12 ||
                    (ratio < best_ratio + 1e-12 && leave != SIZE_MAX && basis_[i] < basis_[leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave == SIZE_MAX) {
                if (phase1) throw SolverFailure("simplex: unbounded phase 1");
                return false;  // unbounded
            }
            pivot(leave, enter);
            const double obj = current_objective(cost);
            if (obj < prev_obj - 1e-13 * (1.0 + std::fabs(prev_obj))) {
                stall = 0;
            } else if (++stall > opt_.stall_limit) {
                bland = true;  // anti-cycling fallback
            }
            prev_obj = obj;
        }
    }

    double current_objective(const Vec& cost) const {
        double s = 0;
        for (std::size_t i = 0; i < m_; ++i) s += cost[basis_[i]] * rhs_[i];
        return s;
    }

    void compute_reduced(const Vec& cost, Vec& out) const {
        // y_i implied by: for basic columns reduced cost is 0. Using the
        // tableau rows directly: reduced_j = c_j - sum_i c_basis(i) * T[i][j].
        for (std::size_t c = 0; c < ncols_; ++c) out[c] = cost[c];
        for (std::size_t i = 0; i < m_; ++i) {
            const double cb = cost[basis_[i]];
            if (cb == 0.0) continue;
            const Vec& row = rows_[i];
            for (std::size_t c = 0; c < ncols_; ++c) out[c] -= cb * row[c];
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const double inv = 1.0 / rows_[r][c];
        for (double& v : rows_[r]) v *= inv;
        rhs_[r] *= inv;
        rows_[r][c] = 1.0;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r) continue;
            const double f = rows_[i][c];
            if (f == 0.0) continue;
            const Vec& src = rows_[r];
            Vec& dst = rows_[i];
            for (std::size_t j = 0; j < ncols_; ++j) dst[j] -= f * src[j];
            dst[c] = 0.0;
            rhs_[i] -= f * rhs_[r];
            if (rhs_[i] < 0 && rhs_[i] > -1e-11) rhs_[i] = 0.0;
        }
        basis_[r] = c;
    }

    SimplexOptions opt_;
    std::size_t m_ = 0, ncols_ = 0, first_artificial_ = 0;
    std::vector<std::size_t> col_of_var_, neg_col_of_var_, slack_col_, basis_;
    std::vector<bool> flip_;
    Matrix rows_, matrix_copy_;
    Vec rhs_, cost_;
};

}  // namespace detail

inline LPSolution solve_lp(const LpProblem& p, const SimplexOptions& opt = {}) {
    if (!all_finite(p.c)) throw InputError("solve_lp: non-finite objective");
    if (!p.nonneg.empty() && p.nonneg.size() != p.c.size())
        throw InputError("solve_lp: nonneg mask size mismatch");
    detail::SimplexTableau tab(p, opt);
    LPSolution sol;
    sol.status = tab.run();
    if (sol.status != LpStatus::optimal) {
        if (sol.status == LpStatus::unbounded)
            sol.objective = p.sense == Sense::minimize ? -std::numeric_limits<double>::infinity()
                                                       : std::numeric_limits<double>::infinity();
        return sol;
    }
    sol.x = tab.primal(p.c.size());
    sol.objective = dot(p.c, sol.x);
    const Vec y = tab.equality_duals();
    sol.duals.assign(p.rows.size(), 0.0);
    double dual_obj = 0;
    for (std::size_t i = 0; i < p.rows.size(); ++i) {
        const double rho = p.rows[i].rel == Relation::ge ? -1.0 : 1.0;
        sol.duals[i] = -rho * y[i];
        dual_obj += sol.duals[i] * rho * p.rows[i].b;
    }
    sol.dual_objective = (p.sense == Sense::minimize ? -1.0 : 1.0) * dual_obj;
    return sol;
}

inline LPSolution solve_lp(const Vec& objective, const std::vector<LpRow>& rows, Sense sense,
                           const SimplexOptions& opt = {}) {
    return solve_lp(LpProblem{objective, rows, sense, {}}, opt);
}

}  // namespace radii
