#pragma once

#include <map>
#include <utility>

#include "lip_function.hpp"
#include "metric_space.hpp"

namespace freespace {

/// Finitely supported zero-sum element of the free space over a finite
/// pointed metric space: mu = sum coeffs(x) * delta(x) with delta(base) = 0.
/// Only nonzero coefficients on non-base points are stored; the base carries
/// the balancing coefficient -sum implicitly (zero-sum normal form).
class FreeElement {
public:
    explicit FreeElement(const MetricSpace& space) : space_(&space) {}
    FreeElement(const MetricSpace& space, std::map<int, Rational> coeffs);

    static FreeElement molecule(const MetricSpace& space, int x, int y);
    static FreeElement point_mass(const MetricSpace& space, int x);  // delta(x)

    const MetricSpace& space() const { return *space_; }
    const std::map<int, Rational>& coeffs() const { return coeffs_; }
    Rational coeff(int i) const;
    Rational base_coefficient() const;
    bool is_zero() const { return coeffs_.empty(); }

    FreeElement operator+(const FreeElement& other) const;
    FreeElement operator-(const FreeElement& other) const;
    FreeElement scaled(const Rational& factor) const;
    bool operator==(const FreeElement& other) const;

private:
    const MetricSpace* space_;
    std::map<int, Rational> coeffs_;  // non-base index -> nonzero coefficient
};

/// Ordered molecule m_xy = (delta(x) - delta(y)) / d(x,y).
struct Molecule {
    int x;
    int y;
};

/// <f, mu> = sum_x mu(x) f(x). Bilinear; base term vanishes for base-shifted f.
Rational pair(const LipFunction& f, const FreeElement& mu);

/// Pairing with a molecule without materialising the element.
Rational pair_molecule(const LipFunction& f, int x, int y);

}  // namespace freespace
