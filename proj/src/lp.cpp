#include "conewb/lp.hpp"

#include "conewb/errors.hpp"

namespace conewb {

namespace {

// Phase-one tableau over standard-form constraints T x = b, x >= 0.
class PhaseOne {
public:
    PhaseOne(std::vector<RatVector> rows, RatVector rhs, std::size_t num_cols)
        : m_(rows.size()), n_(num_cols), tableau_(m_ + 1, RatVector(num_cols + m_ + 1)), basis_(m_) {
        const std::size_t rhs_col = n_ + m_;
        for (std::size_t i = 0; i < m_; ++i) {
            const bool flip = rhs[i].sign() < 0;
            for (std::size_t j = 0; j < n_; ++j) {
                tableau_[i][j] = flip ? -rows[i][j] : rows[i][j];
            }
            tableau_[i][n_ + i] = 1;
            tableau_[i][rhs_col] = flip ? -rhs[i] : rhs[i];
            basis_[i] = n_ + i;
        }
        for (std::size_t j = 0; j < n_; ++j) {
            Rational s;
            for (std::size_t i = 0; i < m_; ++i) {
                s += tableau_[i][j];
            }
            tableau_[m_][j] = -s;
        }
        Rational s;
        for (std::size_t i = 0; i < m_; ++i) {
            s += tableau_[i][rhs_col];
        }
        tableau_[m_][rhs_col] = -s;
    }

    // Returns the standard-form point when the artificial optimum is zero.
    std::optional<RatVector> solve() {
        const std::size_t rhs_col = n_ + m_;
        for (;;) {
            std::size_t entering = rhs_col;
            for (std::size_t j = 0; j < rhs_col; ++j) {
                if (tableau_[m_][j].sign() < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == rhs_col) {
                break;
            }
            std::size_t leaving = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (tableau_[i][entering].sign() <= 0) {
                    continue;
                }
                const Rational ratio = tableau_[i][rhs_col] / tableau_[i][entering];
                if (leaving == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = ratio;
                }
            }
            // The phase-one objective is bounded below by zero, so some row
            // always limits the step.
            if (leaving == m_) {
                throw Error("phase-one simplex: unbounded direction");
            }
            pivot(leaving, entering);
        }
        if (!tableau_[m_][rhs_col].is_zero()) {
            return std::nullopt;
        }
        RatVector x(n_);
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) {
                x[basis_[i]] = tableau_[i][rhs_col];
            }
        }
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t e) {
        const std::size_t width = n_ + m_ + 1;
        const Rational inv = Rational(1) / tableau_[r][e];
        for (std::size_t j = 0; j < width; ++j) {
            if (!tableau_[r][j].is_zero()) {
                tableau_[r][j] *= inv;
            }
        }
        for (std::size_t i = 0; i <= m_; ++i) {
            if (i == r || tableau_[i][e].is_zero()) {
                continue;
            }
            const Rational f = tableau_[i][e];
            for (std::size_t j = 0; j < width; ++j) {
                if (!tableau_[r][j].is_zero()) {
                    tableau_[i][j] -= f * tableau_[r][j];
                }
            }
        }
        basis_[r] = e;
    }

    std::size_t m_;
    std::size_t n_;
    std::vector<RatVector> tableau_;
    std::vector<std::size_t> basis_;
};

} // namespace

std::optional<RatVector> find_feasible_point(const FeasibilityProblem& p) {
    if (p.ge_rows.size() != p.ge_rhs.size() || p.eq_rows.size() != p.eq_rhs.size()) {
        throw DimensionError("find_feasible_point: rows and right-hand sides differ in count");
    }
    if (!p.nonnegative.empty() && p.nonnegative.size() != p.num_vars) {
        throw DimensionError("find_feasible_point: nonnegativity mask has wrong length");
    }
    // Column layout: one column per nonnegative variable, two (x+ and x-)
    // per free variable, then one surplus per inequality.
    std::vector<std::size_t> pos_col(p.num_vars);
    std::vector<std::size_t> neg_col(p.num_vars, static_cast<std::size_t>(-1));
    std::size_t cols = 0;
    for (std::size_t k = 0; k < p.num_vars; ++k) {
        pos_col[k] = cols++;
        const bool nonneg = !p.nonnegative.empty() && p.nonnegative[k];
        if (!nonneg) {
            neg_col[k] = cols++;
        }
    }
    const std::size_t surplus_base = cols;
    cols += p.ge_rows.size();

    std::vector<RatVector> rows;
    RatVector rhs;
    auto emit = [&](const RatVector& a, const Rational& b, std::optional<std::size_t> surplus) {
        if (a.size() != p.num_vars) {
            throw DimensionError("find_feasible_point: constraint row has wrong length");
        }
        RatVector row(cols);
        for (std::size_t k = 0; k < p.num_vars; ++k) {
            row[pos_col[k]] = a[k];
            if (neg_col[k] != static_cast<std::size_t>(-1)) {
                row[neg_col[k]] = -a[k];
            }
        }
        if (surplus) {
            row[*surplus] = -1;
        }
        rows.push_back(std::move(row));
        rhs.push_back(b);
    };
    for (std::size_t i = 0; i < p.ge_rows.size(); ++i) {
        emit(p.ge_rows[i], p.ge_rhs[i], surplus_base + i);
    }
    for (std::size_t i = 0; i < p.eq_rows.size(); ++i) {
        emit(p.eq_rows[i], p.eq_rhs[i], std::nullopt);
    }

    if (rows.empty()) {
        return RatVector(p.num_vars);
    }
    PhaseOne lp(std::move(rows), std::move(rhs), cols);
    const auto z = lp.solve();
    if (!z) {
        return std::nullopt;
    }
    RatVector x(p.num_vars);
    for (std::size_t k = 0; k < p.num_vars; ++k) {
        x[k] = (*z)[pos_col[k]];
        if (neg_col[k] != static_cast<std::size_t>(-1)) {
            x[k] -= (*z)[neg_col[k]];
        }
    }
    return x;
}

bool inequality_implied(std::span<const RatVector> rows, std::span<const Rational> candidate) {
    FeasibilityProblem p;
    p.num_vars = candidate.size();
    for (const auto& r : rows) {
        p.ge_rows.push_back(r);
        p.ge_rhs.push_back(0);
    }
    p.ge_rows.push_back(negate(candidate));
    p.ge_rhs.push_back(1);
    return !find_feasible_point(p).has_value();
}

std::optional<ConeCombination> cone_combination(std::span<const RatVector> generators,
                                                std::span<const RatVector> lineality,
                                                std::span<const Rational> x) {
    const std::size_t dim = x.size();
    const std::size_t g = generators.size();
    const std::size_t l = lineality.size();
    FeasibilityProblem p;
    p.num_vars = g + l;
    p.nonnegative.assign(g + l, false);
    for (std::size_t i = 0; i < g; ++i) {
        p.nonnegative[i] = true;
    }
    for (std::size_t row = 0; row < dim; ++row) {
        RatVector eq(g + l);
        for (std::size_t i = 0; i < g; ++i) {
            eq[i] = generators[i].at(row);
        }
        for (std::size_t j = 0; j < l; ++j) {
            eq[g + j] = lineality[j].at(row);
        }
        p.eq_rows.push_back(std::move(eq));
        p.eq_rhs.push_back(x[row]);
    }
    const auto sol = find_feasible_point(p);
    if (!sol) {
        return std::nullopt;
    }
    ConeCombination out;
    out.generator_coefficients.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(g));
    out.lineality_coefficients.assign(sol->begin() + static_cast<std::ptrdiff_t>(g), sol->end());
    return out;
}

} // namespace conewb
