#include "kr_norm.hpp"

#include "errors.hpp"
#include "extremal.hpp"
#include "simplex.hpp"

namespace freespace {

DualNorm kr_norm_dual(const FreeElement& mu) {
    const MetricSpace& space = mu.space();
    const int n = space.point_count();
    if (n < 2) {
        if (!mu.is_zero()) fail(ErrorCode::EmptySpace, "nonzero element on a single-point space");
        return {Rational(0), LipFunction(space, {Rational(0)})};
    }
    // variables: f(i) = pos_i - neg_i for non-base i; constraints f(u)-f(v) <= d(u,v)
    const int vars = 2 * (n - 1);
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    A.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1));
    auto pos = [](int i) { return 2 * (i - 1); };
    auto neg = [](int i) { return 2 * (i - 1) + 1; };
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v) continue;
            std::vector<Rational> row(static_cast<std::size_t>(vars), Rational(0));
            if (u != 0) {
                row[static_cast<std::size_t>(pos(u))] += 1;
                row[static_cast<std::size_t>(neg(u))] -= 1;
            }
            if (v != 0) {
                row[static_cast<std::size_t>(pos(v))] -= 1;
                row[static_cast<std::size_t>(neg(v))] += 1;
            }
            A.push_back(std::move(row));
            b.push_back(space.distance(u, v));
        }
    std::vector<Rational> c(static_cast<std::size_t>(vars), Rational(0));
    for (const auto& [index, value] : mu.coeffs()) {
        c[static_cast<std::size_t>(pos(index))] += value;
        c[static_cast<std::size_t>(neg(index))] -= value;
    }
    LpResult lp = lp_maximize_inequalities(A, b, c);
    if (lp.status != LpStatus::Optimal)
        fail(ErrorCode::Internal, "the dual norm program is bounded and feasible by construction");
    std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i < n; ++i)
        values[static_cast<std::size_t>(i)] =
            lp.solution[static_cast<std::size_t>(pos(i))] - lp.solution[static_cast<std::size_t>(neg(i))];
    return {lp.objective, LipFunction(space, std::move(values))};
}

PrimalNorm kr_norm_primal(const FreeElement& mu) {
    const MetricSpace& space = mu.space();
    std::vector<Rational> divergence(static_cast<std::size_t>(space.point_count()), Rational(0));
    for (const auto& [index, value] : mu.coeffs()) divergence[static_cast<std::size_t>(index)] = value;
    divergence[0] = mu.base_coefficient();
    TransportPlan plan = min_cost_transport(space, divergence);
    return {plan.cost, std::move(plan)};
}

Rational molecule_distance(const MetricSpace& space, Molecule m1, Molecule m2) {
    FreeElement difference =
        FreeElement::molecule(space, m1.x, m1.y) - FreeElement::molecule(space, m2.x, m2.y);
    return kr_norm_primal(difference).value;
}

std::vector<Molecule> slice_molecules(const LipFunction& f, const Rational& alpha) {
    if (alpha <= 0 || alpha > 1) fail(ErrorCode::InvalidArgument, "slice width must lie in (0,1]");
    if (lip_norm(f).norm > 1) fail(ErrorCode::InvalidArgument, "slice functional must be 1-Lipschitz");
    const MetricSpace& space = f.space();
    std::vector<Molecule> slice;
    const Rational threshold = 1 - alpha;
    for (int u = 0; u < space.point_count(); ++u)
        for (int v = 0; v < space.point_count(); ++v) {
            if (u == v) continue;
            if (pair_molecule(f, u, v) > threshold) slice.push_back({u, v});
        }
    return slice;
}

Rational slice_diameter(const LipFunction& f, const Rational& alpha, bool restrict_to_molecules) {
    const MetricSpace& space = f.space();
    std::vector<Molecule> candidates = slice_molecules(f, alpha);
    if (!restrict_to_molecules) {
        std::vector<Molecule> vertices = oracle_extreme_points(space);
        const Rational threshold = 1 - alpha;
        std::vector<Molecule> in_slice;
        for (const Molecule& m : vertices)
            if (pair_molecule(f, m.x, m.y) > threshold) in_slice.push_back(m);
        candidates = std::move(in_slice);
    }
    Rational best = 0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            best = std::max(best, molecule_distance(space, candidates[i], candidates[j]));
    return best;
}

}  // namespace freespace
