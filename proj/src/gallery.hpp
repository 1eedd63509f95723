#pragma once

#include <optional>
#include <string>
#include <utility>

#include "metric_space.hpp"

namespace freespace {

/// Builds one of the gallery spaces on the base point plus the first `depth`
/// family points. Throws UnknownGallery / InvalidArgument (depth < 3).
/// Families: ag, tree_omega, star, nondual, two_row.
MetricSpace make_gallery(const std::string& name, int depth);

/// Role of a truncation point inside its gallery family.
struct GalleryRole {
    enum class Kind { Base, X1, XInf, HubA, HubB, Integer, RowA, RowB };
    Kind kind = Kind::Base;
    long index = 0;  // family integer / row index where applicable
};

GalleryRole gallery_role(const GallerySpec& spec, int point_index);

/// Closed-form tail knowledge for one unordered pair (x,y) of a gallery space:
/// what the family points beyond the truncation look like relative to (x,y).
/// Every certificate is validated against the truncation matrix at
/// construction; a mismatch throws Internal.
class TailCertificate {
public:
    TailCertificate(const MetricSpace& space, int x, int y);

    int x() const { return x_; }
    int y() const { return y_; }
    std::string tag() const;

    /// Lower bound on inf{ d(x,z)+d(z,y)-d(x,y) : z beyond the truncation,
    /// min(d(x,z),d(y,z)) >= eps }. nullopt when no tail point qualifies.
    /// Non-negative and monotone non-decreasing in eps.
    std::optional<Rational> excess_lower_bound(const Rational& eps) const;

    /// Every tail point has strictly positive excess.
    bool tail_excess_positive() const;

    /// For every eps > 0 the tail infimum above is strictly positive
    /// (either finitely many tail points qualify or the excess has a
    /// uniform positive lower bound).
    bool positive_gap_all_eps() const;

    /// T with min(d(x,z),d(y,z))/excess(z) <= T for every tail z; any integer
    /// level k > T refutes property (Z) on the tail. nullopt when (Z) holds.
    std::optional<Rational> z_fail_threshold() const;

    /// (Z)-witness schedule: family integer index m(n) whose point witnesses
    /// level n, valid for every n >= 1. nullopt when no schedule is shipped.
    std::optional<long> z_witness_index(long n) const;

    /// eps at which infinitely many tail points keep min-distance >= eps while
    /// their excess tends to 0 (refutes the denting condition at that eps).
    std::optional<Rational> denting_refutation_eps() const;

    /// Closed-form {excess, min-distance} prediction for an in-truncation
    /// point z of the tail type; nullopt for points the certificate does not
    /// model (those are handled by direct matrix scans).
    std::optional<std::pair<Rational, Rational>> predict(int z) const;

private:
    enum class Kind {
        Ag01,
        AgHubInt,
        AgIntInt,
        TreeInfBase,
        TreeInfInt,
        TreeBaseInt,
        TreeIntInt,
        StarBaseInt,
        StarIntInt,
        NdHubHub,
        NdHubInt,
        NdIntInt,
        TrSame,
        TrCross,
    };

    void validate_against_truncation() const;

    const MetricSpace* space_;
    GallerySpec spec_;
    Kind kind_;
    int x_, y_;
    long lo_ = 0, hi_ = 0;  // sorted integer indices of the pair, when applicable
};

/// Certificate for the unordered pair (x,y); nullopt for non-gallery spaces.
std::optional<TailCertificate> tail_certificate(const MetricSpace& space, int x, int y);

}  // namespace freespace
