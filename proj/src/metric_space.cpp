#include "metric_space.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "errors.hpp"

namespace freespace {

std::string Violation::describe(const MetricSpace& space) const {
    auto name = [&](int idx) { return space.label(idx); };
    switch (kind) {
        case Kind::NonzeroDiagonal:
            return "d(" + name(i) + "," + name(i) + ") = " + rational_str(lhs) + " != 0";
        case Kind::Asymmetric:
            return "d(" + name(i) + "," + name(j) + ") = " + rational_str(lhs) + " != d(" + name(j) +
                   "," + name(i) + ") = " + rational_str(rhs);
        case Kind::NonpositiveOffDiagonal:
            return "d(" + name(i) + "," + name(j) + ") = " + rational_str(lhs) + " <= 0";
        case Kind::Triangle:
            return "triangle violation (" + name(i) + "," + name(j) + "," + name(k) + "): d(" +
                   name(i) + "," + name(k) + ") = " + rational_str(lhs) + " > " + rational_str(rhs);
    }
    return "unknown violation";
}

MetricSpace::MetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist)
    : labels_(std::move(labels)), dist_(std::move(dist)) {
    if (labels_.empty()) fail(ErrorCode::InvalidArgument, "a space needs at least the base point");
    if (dist_.size() != labels_.size())
        fail(ErrorCode::InvalidArgument, "distance matrix size does not match point count");
    for (const auto& row : dist_)
        if (row.size() != labels_.size())
            fail(ErrorCode::InvalidArgument, "distance matrix is not square");
    std::set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) fail(ErrorCode::InvalidArgument, "empty point label");
        if (!seen.insert(l).second) fail(ErrorCode::InvalidArgument, "duplicate point label: " + l);
    }
}

std::optional<int> MetricSpace::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return std::nullopt;
}

Rational MetricSpace::diameter() const {
    Rational best = 0;
    for (int i = 0; i < point_count(); ++i)
        for (int j = i + 1; j < point_count(); ++j) best = std::max(best, distance(i, j));
    return best;
}

std::vector<Violation> validate(const MetricSpace& space) {
    std::vector<Violation> out;
    const int n = space.point_count();
    for (int i = 0; i < n; ++i) {
        if (space.distance(i, i) != 0)
            out.push_back({Violation::Kind::NonzeroDiagonal, i, i, -1, space.distance(i, i), Rational(0)});
        for (int j = i + 1; j < n; ++j) {
            if (space.distance(i, j) != space.distance(j, i))
                out.push_back({Violation::Kind::Asymmetric, i, j, -1, space.distance(i, j), space.distance(j, i)});
            if (space.distance(i, j) <= 0)
                out.push_back({Violation::Kind::NonpositiveOffDiagonal, i, j, -1, space.distance(i, j), Rational(0)});
        }
    }
    for (int i = 0; i < n; ++i)
        for (int k = i + 1; k < n; ++k)
            for (int j = 0; j < n; ++j) {
                if (j == i || j == k) continue;
                Rational through = space.distance(i, j) + space.distance(j, k);
                if (space.distance(i, k) > through)
                    out.push_back({Violation::Kind::Triangle, i, j, k, space.distance(i, k), through});
            }
    return out;
}

void require_valid(const MetricSpace& space) {
    auto violations = validate(space);
    if (violations.empty()) return;
    fail(ErrorCode::InvalidSpace, "invalid metric space: " + violations.front().describe(space));
}

std::vector<int> metric_segment(const MetricSpace& space, int x, int y) {
    if (x == y) fail(ErrorCode::InvalidArgument, "segment endpoints must differ");
    std::vector<int> segment;
    const Rational& dxy = space.distance(x, y);
    for (int z = 0; z < space.point_count(); ++z)
        if (space.distance(x, z) + space.distance(z, y) == dxy) segment.push_back(z);
    return segment;
}

Rational segment_excess(const MetricSpace& space, int x, int y, int z) {
    return space.distance(x, z) + space.distance(z, y) - space.distance(x, y);
}

Rational min_distance(const MetricSpace& space, int x, int y, int z) {
    return std::min(space.distance(x, z), space.distance(y, z));
}

namespace {

// d^(a/b) as an exact rational when num^a and den^a are perfect b-th powers.
std::optional<Rational> exact_power(const Rational& d, unsigned long a, unsigned long b) {
    mpz_class num_pow, den_pow, num_root, den_root;
    mpz_pow_ui(num_pow.get_mpz_t(), d.get_num().get_mpz_t(), a);
    mpz_pow_ui(den_pow.get_mpz_t(), d.get_den().get_mpz_t(), a);
    if (!mpz_root(num_root.get_mpz_t(), num_pow.get_mpz_t(), b)) return std::nullopt;
    if (!mpz_root(den_root.get_mpz_t(), den_pow.get_mpz_t(), b)) return std::nullopt;
    Rational result(num_root, den_root);
    result.canonicalize();
    return result;
}

}  // namespace

MetricSpace snowflake(const MetricSpace& space, const Rational& p, bool force_float) {
    if (p <= 0 || p >= 1) fail(ErrorCode::InvalidArgument, "snowflake exponent must lie in (0,1)");
    const int n = space.point_count();
    const unsigned long a = static_cast<unsigned long>(p.get_num().get_ui());
    const unsigned long b = static_cast<unsigned long>(p.get_den().get_ui());
    bool exact = true;
    std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n),
                                            std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::optional<Rational> value;
            if (!force_float) value = exact_power(space.distance(i, j), a, b);
            if (!value) {
                exact = false;
                double approx = std::pow(to_double(space.distance(i, j)), to_double(p));
                value = rational_from_double_exact(approx);
            }
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = *value;
            dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = *value;
        }
    MetricSpace result(space.labels(), std::move(dist));
    if (!exact || !space.exact_construction()) result.mark_inexact();
    // concavity keeps d^p a metric; the dyadic rounding is far below the
    // margin for sane inputs, and this guards the pathological rest
    require_valid(result);
    return result;
}

}  // namespace freespace
