#include "attainment.hpp"

#include <random>

#include "errors.hpp"
#include "extremal.hpp"

namespace freespace {

AttainmentReport strongly_attains(const LipFunction& f) {
    const MetricSpace& space = f.space();
    LipNormResult norm = lip_norm(f);
    if (norm.norm == 0) fail(ErrorCode::DegenerateInput, "the zero function attains nothing");
    AttainmentReport report;
    report.lip_norm = norm.norm;
    for (int u = 0; u < space.point_count(); ++u)
        for (int v = u + 1; v < space.point_count(); ++v) {
            if (abs(f.value(u) - f.value(v)) != norm.norm * space.distance(u, v)) continue;
            report.attaining_pairs.emplace_back(u, v);
            if (!report.trivial_segment_pair && metric_segment(space, u, v).size() == 2)
                report.trivial_segment_pair = {u, v};
        }
    if (report.attaining_pairs.empty())
        fail(ErrorCode::Internal, "a nonzero function on a finite space attains its norm");
    return report;
}

NormAttainmentResult verify_na_equals_sna(const MetricSpace& space, int sample_count,
                                          std::uint64_t seed) {
    if (space.point_count() < 2) fail(ErrorCode::EmptySpace, "need at least two points");
    NormAttainmentResult result;
    result.seed = seed;
    std::vector<Molecule> vertices = oracle_extreme_points(space);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> numerator(-9, 9);
    std::uniform_int_distribution<int> denominator(1, 4);
    for (int s = 0; s < sample_count; ++s) {
        std::vector<Rational> values;
        values.reserve(static_cast<std::size_t>(space.point_count()));
        values.emplace_back(0);
        bool nonzero = false;
        for (int i = 1; i < space.point_count(); ++i) {
            Rational v(numerator(rng), denominator(rng));
            v.canonicalize();
            nonzero |= v != 0;
            values.push_back(std::move(v));
        }
        if (!nonzero) {
            --s;  // reject the zero function and redraw
            continue;
        }
        LipFunction f(space, std::move(values));
        const Rational norm = lip_norm(f).norm;
        // the functional norm over the ball is attained at a vertex; V is
        // norming, so some extreme molecule pairs to +-norm
        std::optional<Molecule> found;
        for (const Molecule& m : vertices)
            if (abs(pair_molecule(f, m.x, m.y)) == norm) {
                found = m;
                break;
            }
        if (!found) {
            result.all_passed = false;
            result.counterexample = s;
            return result;
        }
        // strong attainment at the vertex pair, exact
        if (abs(f.value(found->x) - f.value(found->y)) !=
            norm * space.distance(found->x, found->y)) {
            result.all_passed = false;
            result.counterexample = s;
            return result;
        }
        result.samples.push_back({f, norm, *found});
    }
    return result;
}

}  // namespace freespace
