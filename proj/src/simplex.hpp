#pragma once

#include <vector>

#include "rational.hpp"

namespace freespace {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational objective;
    std::vector<Rational> solution;  // primal values, original variables only
};

/// max c^T x  subject to  A x <= b, x >= 0, with every b_i >= 0.
/// Dense exact-rational tableau starting from the slack basis; Bland's rule,
/// so termination is unconditional.
LpResult lp_maximize_inequalities(const std::vector<std::vector<Rational>>& A,
                                  const std::vector<Rational>& b, const std::vector<Rational>& c);

/// Feasibility of  A x = b, x >= 0  via a phase-1 simplex (artificials).
bool lp_equalities_feasible(const std::vector<std::vector<Rational>>& A,
                            const std::vector<Rational>& b);

}  // namespace freespace
