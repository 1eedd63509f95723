#include "free_element.hpp"

#include "errors.hpp"

namespace freespace {

FreeElement::FreeElement(const MetricSpace& space, std::map<int, Rational> coeffs) : space_(&space) {
    for (auto& [index, value] : coeffs) {
        if (index < 0 || index >= space.point_count())
            fail(ErrorCode::InvalidArgument, "coefficient index out of range");
        if (index == 0) continue;  // base coefficient is implicit
        if (value != 0) coeffs_.emplace(index, value);
    }
}

FreeElement FreeElement::molecule(const MetricSpace& space, int x, int y) {
    if (x == y) fail(ErrorCode::InvalidArgument, "a molecule needs two distinct points");
    if (space.point_count() < 2) fail(ErrorCode::EmptySpace, "no molecules on a single-point space");
    const Rational inv_d = 1 / space.distance(x, y);
    std::map<int, Rational> coeffs;
    coeffs[x] += inv_d;
    coeffs[y] -= inv_d;
    return FreeElement(space, std::move(coeffs));
}

FreeElement FreeElement::point_mass(const MetricSpace& space, int x) {
    std::map<int, Rational> coeffs;
    coeffs[x] = 1;
    return FreeElement(space, std::move(coeffs));
}

Rational FreeElement::coeff(int i) const {
    if (i == 0) return base_coefficient();
    auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational FreeElement::base_coefficient() const {
    Rational total = 0;
    for (const auto& [index, value] : coeffs_) total += value;
    return -total;
}

FreeElement FreeElement::operator+(const FreeElement& other) const {
    if (space_ != other.space_) fail(ErrorCode::SpaceMismatch, "elements live on different spaces");
    std::map<int, Rational> coeffs = coeffs_;
    for (const auto& [index, value] : other.coeffs_) coeffs[index] += value;
    return FreeElement(*space_, std::move(coeffs));
}

FreeElement FreeElement::operator-(const FreeElement& other) const {
    return *this + other.scaled(Rational(-1));
}

FreeElement FreeElement::scaled(const Rational& factor) const {
    std::map<int, Rational> coeffs;
    for (const auto& [index, value] : coeffs_) coeffs[index] = value * factor;
    return FreeElement(*space_, std::move(coeffs));
}

bool FreeElement::operator==(const FreeElement& other) const {
    return space_ == other.space_ && coeffs_ == other.coeffs_;
}

Rational pair(const LipFunction& f, const FreeElement& mu) {
    if (&f.space() != &mu.space()) fail(ErrorCode::SpaceMismatch, "function and element live on different spaces");
    Rational total = 0;
    for (const auto& [index, value] : mu.coeffs()) total += value * f.value(index);
    total += mu.base_coefficient() * f.value(0);
    return total;
}

Rational pair_molecule(const LipFunction& f, int x, int y) {
    return (f.value(x) - f.value(y)) / f.space().distance(x, y);
}

}  // namespace freespace
