#include "lip_function.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"

namespace freespace {

LipFunction::LipFunction(const MetricSpace& space, std::vector<Rational> values)
    : space_(&space), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != space.point_count())
        fail(ErrorCode::InvalidArgument, "function must be defined on every point of the space");
}

LipFunction LipFunction::base_shifted() const {
    std::vector<Rational> shifted = values_;
    const Rational base = shifted.front();
    for (auto& v : shifted) v -= base;
    return LipFunction(*space_, std::move(shifted));
}

LipFunction LipFunction::operator+(const LipFunction& other) const {
    if (space_ != other.space_) fail(ErrorCode::SpaceMismatch, "functions live on different spaces");
    std::vector<Rational> sum = values_;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.values_[i];
    return LipFunction(*space_, std::move(sum));
}

LipFunction LipFunction::operator-(const LipFunction& other) const {
    if (space_ != other.space_) fail(ErrorCode::SpaceMismatch, "functions live on different spaces");
    std::vector<Rational> diff = values_;
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= other.values_[i];
    return LipFunction(*space_, std::move(diff));
}

LipFunction LipFunction::scaled(const Rational& factor) const {
    std::vector<Rational> scaled = values_;
    for (auto& v : scaled) v *= factor;
    return LipFunction(*space_, std::move(scaled));
}

LipNormResult lip_norm(const LipFunction& f) {
    const MetricSpace& space = f.space();
    if (space.point_count() < 2) fail(ErrorCode::EmptySpace, "lip_norm needs at least two points");
    LipNormResult result{Rational(0), std::nullopt};
    for (int u = 0; u < space.point_count(); ++u)
        for (int v = u + 1; v < space.point_count(); ++v) {
            Rational ratio = abs(f.value(u) - f.value(v)) / space.distance(u, v);
            if (ratio > result.norm) {
                result.norm = ratio;
                result.argmax = {u, v};
            }
        }
    return result;
}

LipFunction build_f_xy(const MetricSpace& space, int x, int y) {
    if (x == y) fail(ErrorCode::InvalidArgument, "f_xy needs two distinct points");
    const Rational half = space.distance(x, y) / 2;
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(space.point_count()));
    for (int t = 0; t < space.point_count(); ++t) {
        Rational dy = space.distance(t, y);
        Rational dx = space.distance(t, x);
        values.push_back(half * (dy - dx) / (dy + dx));
    }
    return LipFunction(space, std::move(values)).base_shifted();
}

Rational partial_lip_constant(const MetricSpace& space, const PartialFunction& partial) {
    Rational constant = 0;
    for (std::size_t a = 0; a < partial.domain.size(); ++a)
        for (std::size_t b = a + 1; b < partial.domain.size(); ++b) {
            Rational ratio = abs(partial.values[a] - partial.values[b]) /
                             space.distance(partial.domain[a], partial.domain[b]);
            constant = std::max(constant, ratio);
        }
    return constant;
}

LipFunction mcshane_extend(const MetricSpace& space, const PartialFunction& partial,
                           const std::optional<Rational>& constant) {
    if (partial.domain.empty()) fail(ErrorCode::InvalidArgument, "McShane extension needs a nonempty domain");
    if (partial.domain.size() != partial.values.size())
        fail(ErrorCode::InvalidArgument, "partial function domain/value size mismatch");
    std::set<int> seen(partial.domain.begin(), partial.domain.end());
    if (seen.size() != partial.domain.size())
        fail(ErrorCode::InvalidArgument, "partial function domain has repeated points");
    for (int s : partial.domain)
        if (s < 0 || s >= space.point_count())
            fail(ErrorCode::InvalidArgument, "partial function domain point out of range");
    const Rational own = partial_lip_constant(space, partial);
    Rational lip = constant.value_or(own);
    if (lip < own)
        fail(ErrorCode::InvalidArgument, "requested extension constant is below the partial's constant");
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(space.point_count()));
    for (int t = 0; t < space.point_count(); ++t) {
        std::optional<Rational> best;
        for (std::size_t k = 0; k < partial.domain.size(); ++k) {
            Rational candidate = partial.values[k] + lip * space.distance(t, partial.domain[k]);
            if (!best || candidate < *best) best = candidate;
        }
        values.push_back(*best);
    }
    return LipFunction(space, std::move(values));
}

LipFunction build_fdent(const MetricSpace& space, int x, int y, const Rational& eps,
                        const Rational& tau) {
    if (x == y) fail(ErrorCode::InvalidArgument, "fdent needs two distinct points");
    if (eps <= 0 || eps >= Rational(1, 4)) fail(ErrorCode::InvalidArgument, "fdent needs 0 < eps < 1/4");
    if (tau <= 0 || tau >= 1) fail(ErrorCode::InvalidArgument, "fdent needs 0 < tau < 1");
    // work in the rescaled metric d' = d/d(x,y), where d'(x,y) = 1
    const Rational scale = space.distance(x, y);
    const Rational radius = eps * scale;
    PartialFunction partial;
    const Rational gain = 1 / (1 + 4 * eps * tau);
    for (int t = 0; t < space.point_count(); ++t) {
        const bool near_x = space.distance(t, x) <= radius;
        const bool near_y = space.distance(t, y) <= radius;
        if (near_x && near_y)
            fail(ErrorCode::InvalidArgument, "fdent needs disjoint balls around x and y");
        if (!near_x && !near_y) continue;
        Rational dy_scaled = space.distance(t, y) / scale;
        Rational value = near_x ? Rational(gain * (tau + (1 - tau) * dy_scaled))
                                : Rational(gain * (1 - tau) * dy_scaled);
        partial.domain.push_back(t);
        partial.values.push_back(value);
    }
    // Extending the d'-valued partial in the original metric at its own
    // d-constant L'/scale and multiplying by scale afterwards equals the
    // McShane extension taken in d'; the final d-norm is the partial's
    // d'-constant, which the case analysis keeps <= 1.
    return mcshane_extend(space, partial).scaled(scale).base_shifted();
}

LipFunction build_g(const MetricSpace& space, int x, int y, int z, const Rational& eps) {
    if (x == y) fail(ErrorCode::InvalidArgument, "g needs two distinct points");
    if (z == x || z == y) fail(ErrorCode::InvalidArgument, "the bump point must avoid x and y");
    if (eps < 0) fail(ErrorCode::InvalidArgument, "the bump height must be non-negative");
    if ((1 - eps) * (space.distance(x, z) + space.distance(z, y)) < space.distance(x, y))
        fail(ErrorCode::InvalidArgument,
             "bump height too large: need (1-eps)(d(x,z)+d(z,y)) >= d(x,y)");
    LipFunction g = build_f_xy(space, x, y);
    std::vector<Rational> values = g.values();
    values[static_cast<std::size_t>(z)] += eps;
    return LipFunction(space, std::move(values)).base_shifted();
}

}  // namespace freespace
