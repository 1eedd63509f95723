#pragma once

#include <vector>

#include "free_element.hpp"
#include "min_cost_flow.hpp"

namespace freespace {

struct DualNorm {
    Rational value;
    LipFunction witness;  // 1-Lipschitz, base-shifted, attains <witness,mu> = value
};

struct PrimalNorm {
    Rational value;
    TransportPlan plan;
};

/// KR norm by duality: exact optimum of max <f,mu> over |f(u)-f(v)| <= d(u,v),
/// f(base) = 0, solved with the in-repo rational simplex.
DualNorm kr_norm_dual(const FreeElement& mu);

/// KR norm as optimal transport: min-cost flow with divergence mu on the
/// complete graph. Independent algorithm family from the dual simplex.
PrimalNorm kr_norm_primal(const FreeElement& mu);

/// Exact KR norm of m1 - m2 via the primal solver.
Rational molecule_distance(const MetricSpace& space, Molecule m1, Molecule m2);

/// Ordered molecules m_uv with pair(f, m_uv) > 1 - alpha.
/// Requires lip_norm(f) <= 1 and 0 < alpha <= 1.
std::vector<Molecule> slice_molecules(const LipFunction& f, const Rational& alpha);

/// Max pairwise KR distance over the slice: over all molecules in the slice
/// when restrict_to_molecules, otherwise over the extreme molecules (ball
/// vertices, from the oracle) lying in the slice. Empty slices give 0.
Rational slice_diameter(const LipFunction& f, const Rational& alpha, bool restrict_to_molecules);

}  // namespace freespace
