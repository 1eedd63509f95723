#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace freespace {

struct GallerySpec {
    std::string name;  // ag | tree_omega | star | nondual | two_row
    int depth = 0;     // number of family points beyond the base
};

struct Violation {
    enum class Kind { NonzeroDiagonal, Asymmetric, NonpositiveOffDiagonal, Triangle };
    Kind kind;
    int i = -1, j = -1, k = -1;  // offending indices; k used for triangles
    Rational lhs, rhs;
    std::string describe(const class MetricSpace& space) const;
};

/// Pointed finite metric space with an exact rational distance matrix.
/// Point 0 is always the base point. Immutable after construction.
class MetricSpace {
public:
    /// Builds a space without checking the metric axioms (see validate()).
    /// Structural requirements (square symmetric matrix, unique labels) are enforced.
    MetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> dist);

    int point_count() const { return static_cast<int>(labels_.size()); }
    const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::optional<int> index_of(const std::string& label) const;
    const Rational& distance(int i, int j) const { return dist_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    const std::optional<GallerySpec>& gallery() const { return gallery_; }
    bool is_gallery() const { return gallery_.has_value(); }

    /// False when some distance was produced by a floating-point computation
    /// (snowflake of a non-representable power) and stored as its dyadic value.
    bool exact_construction() const { return exact_construction_; }

    Rational diameter() const;

    void set_gallery(GallerySpec spec) { gallery_ = std::move(spec); }
    void mark_inexact() { exact_construction_ = false; }

private:
    std::vector<std::string> labels_;
    std::vector<std::vector<Rational>> dist_;
    std::optional<GallerySpec> gallery_;
    bool exact_construction_ = true;
};

/// Empty iff all metric invariants hold; violations are data, not errors.
std::vector<Violation> validate(const MetricSpace& space);

/// Throws InvalidSpace when validate() is nonempty.
void require_valid(const MetricSpace& space);

/// The metric segment [x,y] = {z : d(x,z)+d(z,y) = d(x,y)}, exact equality.
/// Always contains x and y. Throws InvalidArgument when x == y.
std::vector<int> metric_segment(const MetricSpace& space, int x, int y);

/// d(x,z)+d(z,y) - d(x,y), the segment excess of z over the pair (x,y).
Rational segment_excess(const MetricSpace& space, int x, int y, int z);

/// min(d(x,z), d(y,z)).
Rational min_distance(const MetricSpace& space, int x, int y, int z);

/// Same points with distances d^p, 0 < p < 1. Powers that are exactly rational
/// are kept exact; otherwise the IEEE double approximation is stored as a
/// dyadic rational and the space is marked inexact. force_float skips the
/// exact path (CLI arithmetic mode "float").
MetricSpace snowflake(const MetricSpace& space, const Rational& p, bool force_float = false);

}  // namespace freespace
