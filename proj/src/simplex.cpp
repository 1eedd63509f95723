#include "simplex.hpp"

#include "errors.hpp"

namespace freespace {

namespace {

// Dense tableau over the columns of `cols` original variables plus one basic
// slot per row. basis[r] holds the column currently basic in row r. The cost
// row stores reduced costs for a maximisation; RHS sits in the last column.
struct Tableau {
    std::vector<std::vector<Rational>> rows;  // m x (cols + 1)
    std::vector<Rational> cost;               // cols + 1 (last entry = -objective)
    std::vector<int> basis;
    int cols;

    void pivot(int row, int col) {
        auto& pivot_row = rows[static_cast<std::size_t>(row)];
        const Rational inv_pivot = 1 / pivot_row[static_cast<std::size_t>(col)];
        for (auto& entry : pivot_row) entry *= inv_pivot;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == row) continue;
            const Rational factor = rows[r][static_cast<std::size_t>(col)];
            if (factor == 0) continue;
            for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= factor * pivot_row[c];
        }
        const Rational cost_factor = cost[static_cast<std::size_t>(col)];
        if (cost_factor != 0)
            for (std::size_t c = 0; c < cost.size(); ++c) cost[c] -= cost_factor * pivot_row[c];
        basis[static_cast<std::size_t>(row)] = col;
    }

    // Bland's rule: entering = smallest-index improving column, leaving =
    // tightest ratio with ties broken by the smallest basis variable.
    LpStatus run() {
        for (;;) {
            int entering = -1;
            for (int c = 0; c < cols; ++c)
                if (cost[static_cast<std::size_t>(c)] > 0) {
                    entering = c;
                    break;
                }
            if (entering < 0) return LpStatus::Optimal;
            int leaving = -1;
            Rational best_ratio;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                const Rational& coeff = rows[r][static_cast<std::size_t>(entering)];
                if (coeff <= 0) continue;
                Rational ratio = rows[r].back() / coeff;
                if (leaving < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[static_cast<std::size_t>(leaving)])) {
                    leaving = static_cast<int>(r);
                    best_ratio = ratio;
                }
            }
            if (leaving < 0) return LpStatus::Unbounded;
            pivot(leaving, entering);
        }
    }
};

}  // namespace

LpResult lp_maximize_inequalities(const std::vector<std::vector<Rational>>& A,
                                  const std::vector<Rational>& b, const std::vector<Rational>& c) {
    const int m = static_cast<int>(A.size());
    const int n = static_cast<int>(c.size());
    for (const auto& value : b)
        if (value < 0) fail(ErrorCode::Internal, "slack-basis simplex needs b >= 0");
    Tableau t;
    t.cols = n + m;
    t.rows.assign(static_cast<std::size_t>(m),
                  std::vector<Rational>(static_cast<std::size_t>(t.cols) + 1, Rational(0)));
    t.cost.assign(static_cast<std::size_t>(t.cols) + 1, Rational(0));
    t.basis.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        for (int j = 0; j < n; ++j) t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + r)] = 1;
        t.rows[static_cast<std::size_t>(r)].back() = b[static_cast<std::size_t>(r)];
        t.basis[static_cast<std::size_t>(r)] = n + r;
    }
    for (int j = 0; j < n; ++j) t.cost[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j)];

    LpResult result;
    LpStatus status = t.run();
    result.status = status;
    if (status != LpStatus::Optimal) return result;
    result.objective = -t.cost.back();
    result.solution.assign(static_cast<std::size_t>(n), Rational(0));
    for (int r = 0; r < m; ++r)
        if (t.basis[static_cast<std::size_t>(r)] < n)
            result.solution[static_cast<std::size_t>(t.basis[static_cast<std::size_t>(r)])] =
                t.rows[static_cast<std::size_t>(r)].back();
    return result;
}

bool lp_equalities_feasible(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b) {
    const int m = static_cast<int>(A.size());
    const int n = m == 0 ? 0 : static_cast<int>(A.front().size());
    if (m == 0) return true;
    Tableau t;
    t.cols = n + m;  // original variables + one artificial per row
    t.rows.assign(static_cast<std::size_t>(m),
                  std::vector<Rational>(static_cast<std::size_t>(t.cols) + 1, Rational(0)));
    t.cost.assign(static_cast<std::size_t>(t.cols) + 1, Rational(0));
    t.basis.resize(static_cast<std::size_t>(m));
    for (int r = 0; r < m; ++r) {
        const bool flip = b[static_cast<std::size_t>(r)] < 0;
        for (int j = 0; j < n; ++j) {
            Rational value = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
            t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = flip ? -value : value;
        }
        t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(n + r)] = 1;
        t.rows[static_cast<std::size_t>(r)].back() = flip ? -b[static_cast<std::size_t>(r)] : b[static_cast<std::size_t>(r)];
        t.basis[static_cast<std::size_t>(r)] = n + r;
    }
    // maximise -(sum of artificials): price out the artificial basis
    for (int j = 0; j < t.cols; ++j) {
        Rational reduced = j >= n ? Rational(-1) : Rational(0);
        for (int r = 0; r < m; ++r)
            reduced += t.rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
        t.cost[static_cast<std::size_t>(j)] = reduced;
    }
    Rational rhs_total = 0;
    for (int r = 0; r < m; ++r) rhs_total += t.rows[static_cast<std::size_t>(r)].back();
    t.cost.back() = rhs_total;  // so that -cost.back() = objective = -sum(artificials)

    LpStatus status = t.run();
    if (status != LpStatus::Optimal) fail(ErrorCode::Internal, "phase-1 simplex cannot be unbounded");
    return -t.cost.back() == 0;
}

}  // namespace freespace
