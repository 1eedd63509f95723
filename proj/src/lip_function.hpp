#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metric_space.hpp"

namespace freespace {

/// Real-valued function on the points of a space. The normal form vanishes at
/// the base point; constructors that build the paper's special functions shift
/// to it. Shifting never changes pairings with zero-sum elements.
class LipFunction {
public:
    LipFunction(const MetricSpace& space, std::vector<Rational> values);

    const MetricSpace& space() const { return *space_; }
    int point_count() const { return static_cast<int>(values_.size()); }
    const Rational& value(int i) const { return values_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& values() const { return values_; }

    LipFunction base_shifted() const;
    bool vanishes_at_base() const { return values_.front() == 0; }

    LipFunction operator+(const LipFunction& other) const;
    LipFunction operator-(const LipFunction& other) const;
    LipFunction scaled(const Rational& factor) const;

private:
    const MetricSpace* space_;
    std::vector<Rational> values_;
};

struct LipNormResult {
    Rational norm;
    std::optional<std::pair<int, int>> argmax;  // smallest (u,v), u < v; none for f == const
};

/// Best Lipschitz constant max |f(u)-f(v)|/d(u,v); ties broken by the smallest
/// index pair. Throws EmptySpace on single-point spaces.
LipNormResult lip_norm(const LipFunction& f);

/// The function f_xy(t) = (d(x,y)/2) * (d(t,y)-d(t,x)) / (d(t,y)+d(t,x)),
/// base-shifted. Throws InvalidArgument when x == y.
LipFunction build_f_xy(const MetricSpace& space, int x, int y);

/// Partially defined function used by the McShane extension.
struct PartialFunction {
    std::vector<int> domain;          // point indices, distinct
    std::vector<Rational> values;     // parallel to domain
};

/// Lipschitz constant of the partial function on its domain (0 when |S| < 2).
Rational partial_lip_constant(const MetricSpace& space, const PartialFunction& partial);

/// McShane extension F(t) = min_{s in S} partial(s) + L*d(t,s) at the
/// partial's own constant L (or the supplied constant, which must dominate
/// it). Agrees with the partial on S and has lip_norm exactly L. Not
/// base-shifted; call base_shifted() on the result when the normal form is
/// needed.
LipFunction mcshane_extend(const MetricSpace& space, const PartialFunction& partial,
                           const std::optional<Rational>& constant = std::nullopt);

/// The slice-carving function of the denting characterisation: the piecewise
/// formula on B(x,eps) and B(y,eps) (after rescaling so that d(x,y) = 1),
/// extended by McShane and base-shifted. Requires 0 < eps < 1/4, 0 < tau < 1
/// and the two balls disjoint.
LipFunction build_fdent(const MetricSpace& space, int x, int y, const Rational& eps,
                        const Rational& tau);

/// f_xy + eps * indicator({z}), base-shifted. Requires z distinct from x and y
/// and (1-eps)(d(x,z)+d(z,y)) >= d(x,y), which makes the result 1-Lipschitz.
LipFunction build_g(const MetricSpace& space, int x, int y, int z, const Rational& eps);

}  // namespace freespace
