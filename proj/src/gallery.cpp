#include "gallery.hpp"

#include <algorithm>

#include "errors.hpp"

namespace freespace {

namespace {

Rational inv(long m) { return Rational(1, m); }

// ag: c0 vectors x_1 = 2e_1, x_n = e_1 + (1+1/n)e_n under the sup norm.
Rational ag_distance(long i, long j) {
    if (i > j) std::swap(i, j);
    if (i == 0) return j == 1 ? Rational(2) : 1 + inv(j);
    if (i == 1) return 1 + inv(j);
    return 1 + inv(std::min(i, j));
}

// tree_omega: path distance in the real tree; index 0 is the root (0,0),
// index 1 is x_inf = (1,0), index m >= 2 is x_m = (1-1/m, 1/m^2).
Rational tree_distance(long i, long j) {
    if (i > j) std::swap(i, j);
    auto spine = [](long m) -> Rational { return 1 - inv(m); };      // branch point of x_m
    auto twig = [](long m) -> Rational { return inv(m) * inv(m); };  // branch height
    if (i == 0) return j == 1 ? Rational(1) : Rational(spine(j) + twig(j));
    if (i == 1) return inv(j) + twig(j);
    return Rational(abs(Rational(spine(i) - spine(j)))) + twig(i) + twig(j);
}

Rational star_distance(long i, long j) {
    if (i == j) return 0;
    return (i == 0 || j == 0) ? Rational(1) : Rational(2);
}

// nondual: hubs 0,a,b pairwise at 2; d(hub, n) = 1+1/n; d(n,m) = 1.
Rational nondual_distance(long i, long j) {
    if (i > j) std::swap(i, j);
    if (j <= 2) return 2;                       // both hubs
    if (i <= 2) return 1 + inv(j - 2);          // hub to integer point
    return 1;
}

// two_row: {0,1} x N with cross-row distance 2 and in-row distance 1.
// Point 0 is (0,1); family position p >= 1 is (1,(p+1)/2) for odd p and
// (0,p/2+1) for even p.
bool two_row_is_row_a(long i) { return i == 0 || i % 2 == 0; }

Rational two_row_distance(long i, long j) {
    return two_row_is_row_a(i) == two_row_is_row_a(j) ? Rational(1) : Rational(2);
}

std::string two_row_label(long i) {
    if (i == 0) return "0";
    long n = i % 2 == 1 ? (i + 1) / 2 : i / 2 + 1;
    return (two_row_is_row_a(i) ? "a" : "b") + std::to_string(n);
}

}  // namespace

MetricSpace make_gallery(const std::string& name, int depth) {
    if (depth < 3) fail(ErrorCode::InvalidArgument, "gallery depth must be >= 3");
    Rational (*dist)(long, long) = nullptr;
    std::vector<std::string> labels;
    labels.push_back("0");
    if (name == "ag") {
        dist = ag_distance;
        for (int i = 1; i <= depth; ++i) labels.push_back("x" + std::to_string(i));
    } else if (name == "tree_omega") {
        dist = tree_distance;
        labels.push_back("xinf");
        for (int i = 2; i <= depth; ++i) labels.push_back("x" + std::to_string(i));
    } else if (name == "star") {
        dist = star_distance;
        for (int i = 1; i <= depth; ++i) labels.push_back(std::to_string(i));
    } else if (name == "nondual") {
        dist = nondual_distance;
        labels.push_back("a");
        labels.push_back("b");
        for (int i = 3; i <= depth; ++i) labels.push_back(std::to_string(i - 2));
    } else if (name == "two_row") {
        dist = two_row_distance;
        for (int i = 1; i <= depth; ++i) labels.push_back(two_row_label(i));
    } else {
        fail(ErrorCode::UnknownGallery, "unknown gallery: " + name);
    }
    const int n = depth + 1;
    std::vector<std::vector<Rational>> matrix(static_cast<std::size_t>(n),
                                              std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = dist(i, j);
    MetricSpace space(std::move(labels), std::move(matrix));
    space.set_gallery({name, depth});
    require_valid(space);
    // spot-validate the shipped closed forms against this truncation; the
    // certificate constructor throws on any disagreement
    const int last = space.point_count() - 1;
    for (auto [x, y] : {std::pair<int, int>{0, 1}, {0, last}, {1, last}, {last - 1, last}})
        if (x != y) TailCertificate cert(space, x, y);
    return space;
}

GalleryRole gallery_role(const GallerySpec& spec, int point_index) {
    using K = GalleryRole::Kind;
    const long i = point_index;
    if (spec.name == "ag") {
        if (i == 0) return {K::Base, 0};
        if (i == 1) return {K::X1, 1};
        return {K::Integer, i};
    }
    if (spec.name == "tree_omega") {
        if (i == 0) return {K::Base, 0};
        if (i == 1) return {K::XInf, 0};
        return {K::Integer, i};
    }
    if (spec.name == "star") {
        if (i == 0) return {K::Base, 0};
        return {K::Integer, i};
    }
    if (spec.name == "nondual") {
        if (i == 0) return {K::Base, 0};
        if (i == 1) return {K::HubA, 0};
        if (i == 2) return {K::HubB, 0};
        return {K::Integer, i - 2};
    }
    if (spec.name == "two_row") {
        if (two_row_is_row_a(i)) return {K::RowA, i == 0 ? 1 : i / 2 + 1};
        return {K::RowB, (i + 1) / 2};
    }
    fail(ErrorCode::UnknownGallery, "unknown gallery: " + spec.name);
}

namespace {

bool is_hub(GalleryRole::Kind k) {
    return k == GalleryRole::Kind::Base || k == GalleryRole::Kind::HubA ||
           k == GalleryRole::Kind::HubB;
}

// Largest j >= 2 with (j+1)/j^2 >= eps (the tree min-distance profile);
// nullopt when even j = 2 fails.
std::optional<long> tree_qualifying_max(const Rational& eps) {
    auto ok = [&](long j) { return Rational(j + 1) >= eps * j * j; };
    if (!ok(2)) return std::nullopt;
    long lo = 2, hi = 4;
    while (ok(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 40)) fail(ErrorCode::Internal, "tree qualifying bound ran away");
    }
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (ok(mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

}  // namespace

TailCertificate::TailCertificate(const MetricSpace& space, int x, int y) : space_(&space), x_(x), y_(y) {
    if (!space.is_gallery()) fail(ErrorCode::InvalidArgument, "tail certificates require a gallery space");
    if (x == y) fail(ErrorCode::InvalidArgument, "certificate endpoints must differ");
    spec_ = *space.gallery();
    using K = GalleryRole::Kind;
    GalleryRole rx = gallery_role(spec_, x);
    GalleryRole ry = gallery_role(spec_, y);
    auto both = [&](K a, K b) {
        return (rx.kind == a && ry.kind == b) || (rx.kind == b && ry.kind == a);
    };
    auto int_index_of = [&](K other) { return rx.kind == other ? ry.index : rx.index; };
    if (spec_.name == "ag") {
        if (both(K::Base, K::X1)) kind_ = Kind::Ag01;
        else if (rx.kind == K::Integer && ry.kind == K::Integer) {
            kind_ = Kind::AgIntInt;
            lo_ = std::min(rx.index, ry.index);
            hi_ = std::max(rx.index, ry.index);
        } else {
            kind_ = Kind::AgHubInt;
            lo_ = hi_ = int_index_of(rx.kind == K::Integer ? ry.kind : rx.kind);
        }
    } else if (spec_.name == "tree_omega") {
        if (both(K::XInf, K::Base)) kind_ = Kind::TreeInfBase;
        else if (both(K::XInf, K::Integer)) {
            kind_ = Kind::TreeInfInt;
            lo_ = hi_ = int_index_of(K::XInf);
        } else if (both(K::Base, K::Integer)) {
            kind_ = Kind::TreeBaseInt;
            lo_ = hi_ = int_index_of(K::Base);
        } else {
            kind_ = Kind::TreeIntInt;
            lo_ = std::min(rx.index, ry.index);
            hi_ = std::max(rx.index, ry.index);
        }
    } else if (spec_.name == "star") {
        if (both(K::Base, K::Integer)) kind_ = Kind::StarBaseInt;
        else kind_ = Kind::StarIntInt;
    } else if (spec_.name == "nondual") {
        if (is_hub(rx.kind) && is_hub(ry.kind)) kind_ = Kind::NdHubHub;
        else if (rx.kind == K::Integer && ry.kind == K::Integer) kind_ = Kind::NdIntInt;
        else {
            kind_ = Kind::NdHubInt;
            lo_ = hi_ = rx.kind == K::Integer ? rx.index : ry.index;
        }
    } else if (spec_.name == "two_row") {
        bool same = two_row_is_row_a(x) == two_row_is_row_a(y);
        kind_ = same ? Kind::TrSame : Kind::TrCross;
    } else {
        fail(ErrorCode::UnknownGallery, "unknown gallery: " + spec_.name);
    }
    validate_against_truncation();
}

std::string TailCertificate::tag() const {
    return "gallery:" + spec_.name + ":" + space_->label(x_) + "|" + space_->label(y_);
}

std::optional<std::pair<Rational, Rational>> TailCertificate::predict(int z) const {
    if (z == x_ || z == y_) return std::nullopt;
    GalleryRole rz = gallery_role(spec_, z);
    using K = GalleryRole::Kind;
    const long j = rz.index;
    switch (kind_) {
        case Kind::Ag01:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{2 * inv(j), 1 + inv(j)}};
        case Kind::AgHubInt: {
            if (rz.kind != K::Integer) return std::nullopt;
            Rational excess = j > lo_ ? Rational(1 + inv(j)) : Rational(1 + 2 * inv(j) - inv(lo_));
            return {{excess, 1 + inv(j)}};
        }
        case Kind::AgIntInt: {
            if (rz.kind != K::Integer) return std::nullopt;
            Rational excess, mind;
            if (j > hi_) {
                excess = 1 + inv(hi_);
                mind = 1 + inv(hi_);
            } else if (j > lo_) {
                excess = 1 + inv(j);
                mind = 1 + inv(j);
            } else {
                excess = 1 + 2 * inv(j) - inv(lo_);
                mind = 1 + inv(j);
            }
            return {{excess, mind}};
        }
        case Kind::TreeInfBase:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{2 * inv(j) * inv(j), inv(j) + inv(j) * inv(j)}};
        case Kind::TreeInfInt: {
            if (rz.kind != K::Integer) return std::nullopt;
            const long n = lo_;
            Rational jj = inv(j) * inv(j);
            Rational excess = j > n ? Rational(2 * jj) : Rational(2 * inv(j) + 2 * jj - 2 * inv(n));
            Rational d_inf = inv(j) + jj;
            Rational d_n = abs(inv(n) - inv(j)) + inv(n) * inv(n) + jj;
            return {{excess, std::min(d_inf, d_n)}};
        }
        case Kind::TreeBaseInt: {
            if (rz.kind != K::Integer) return std::nullopt;
            const long n = lo_;
            Rational jj = inv(j) * inv(j);
            Rational excess = j > n ? Rational(2 * inv(n) - 2 * inv(j) + 2 * jj) : Rational(2 * jj);
            Rational d_base = 1 - inv(j) + jj;
            Rational d_n = abs(inv(n) - inv(j)) + inv(n) * inv(n) + jj;
            return {{excess, std::min(d_base, d_n)}};
        }
        case Kind::TreeIntInt: {
            if (rz.kind != K::Integer) return std::nullopt;
            Rational jj = inv(j) * inv(j);
            Rational excess;
            if (j > hi_) excess = 2 * inv(hi_) - 2 * inv(j) + 2 * jj;
            else if (j > lo_) excess = 2 * jj;
            else excess = 2 * inv(j) - 2 * inv(lo_) + 2 * jj;
            Rational d_lo = abs(inv(lo_) - inv(j)) + inv(lo_) * inv(lo_) + jj;
            Rational d_hi = abs(inv(hi_) - inv(j)) + inv(hi_) * inv(hi_) + jj;
            return {{excess, std::min(d_lo, d_hi)}};
        }
        case Kind::StarBaseInt:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{Rational(2), Rational(1)}};
        case Kind::StarIntInt:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{Rational(2), Rational(2)}};
        case Kind::NdHubHub:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{2 * inv(j), 1 + inv(j)}};
        case Kind::NdHubInt:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{1 + inv(j) - inv(lo_), Rational(1)}};
        case Kind::NdIntInt:
            if (rz.kind != K::Integer) return std::nullopt;
            return {{Rational(1), Rational(1)}};
        case Kind::TrSame: {
            bool same = two_row_is_row_a(z) == two_row_is_row_a(x_);
            return {{same ? Rational(1) : Rational(3), same ? Rational(1) : Rational(2)}};
        }
        case Kind::TrCross:
            return {{Rational(1), Rational(1)}};
    }
    return std::nullopt;
}

std::optional<Rational> TailCertificate::excess_lower_bound(const Rational& eps) const {
    // smallest family integer index beyond the truncation
    const long m0 = spec_.name == "nondual" ? spec_.depth - 1 : spec_.depth + 1;
    switch (kind_) {
        case Kind::Ag01:
        case Kind::NdHubHub: {
            // excess 2/m with min-distance 1+1/m.
            if (eps <= 1) return Rational(0);
            mpz_class max_j = rational_floor(Rational(1) / (eps - 1));
            if (max_j < m0) return std::nullopt;
            return Rational(2) / Rational(max_j);
        }
        case Kind::AgHubInt:
            if (eps > 1 + inv(m0)) return std::nullopt;
            return Rational(1);
        case Kind::AgIntInt:
            if (eps > 1 + inv(hi_)) return std::nullopt;
            return 1 + inv(hi_);
        case Kind::TreeInfBase:
        case Kind::TreeInfInt: {
            if (eps <= 0) return Rational(0);
            auto max_j = tree_qualifying_max(eps);
            if (!max_j || *max_j < m0) return std::nullopt;
            return 2 * inv(*max_j) * inv(*max_j);
        }
        case Kind::TreeBaseInt:
            return 2 * inv(lo_) - 2 * inv(m0) + 2 * inv(m0) * inv(m0);
        case Kind::TreeIntInt:
            return 2 * inv(hi_) - 2 * inv(m0) + 2 * inv(m0) * inv(m0);
        case Kind::StarBaseInt:
            if (eps > 1) return std::nullopt;
            return Rational(2);
        case Kind::StarIntInt:
            if (eps > 2) return std::nullopt;
            return Rational(2);
        case Kind::NdHubInt:
            if (eps > 1) return std::nullopt;
            return lo_ == 1 ? Rational(0) : 1 - inv(lo_);
        case Kind::NdIntInt:
            if (eps > 1) return std::nullopt;
            return Rational(1);
        case Kind::TrSame:
            if (eps > 2) return std::nullopt;
            if (eps > 1) return Rational(3);
            return Rational(1);
        case Kind::TrCross:
            if (eps > 1) return std::nullopt;
            return Rational(1);
    }
    return std::nullopt;
}

bool TailCertificate::tail_excess_positive() const {
    return true;  // every shipped family keeps tail points strictly outside the segment
}

bool TailCertificate::positive_gap_all_eps() const {
    switch (kind_) {
        case Kind::Ag01:
        case Kind::NdHubHub:
            return false;
        case Kind::NdHubInt:
            return lo_ >= 2;
        default:
            return true;
    }
}

std::optional<Rational> TailCertificate::z_fail_threshold() const {
    switch (kind_) {
        case Kind::AgHubInt:
        case Kind::AgIntInt:
        case Kind::TreeIntInt:
        case Kind::StarIntInt:
        case Kind::NdIntInt:
        case Kind::TrSame:
        case Kind::TrCross:
            return Rational(1);
        case Kind::StarBaseInt:
            return Rational(1, 2);
        case Kind::TreeBaseInt: {
            const long n = lo_;
            Rational excess_inf = 2 * inv(n) - 2 * inv(n + 1) + 2 * inv(n + 1) * inv(n + 1);
            Rational mindist_sup = inv(n) + inv(n) * inv(n);
            return mindist_sup / excess_inf;
        }
        case Kind::NdHubInt:
            if (lo_ >= 2) return Rational(lo_, lo_ - 1);
            return std::nullopt;
        default:
            return std::nullopt;  // (Z) holds for these pairs; see z_witness_index
    }
}

std::optional<long> TailCertificate::z_witness_index(long n) const {
    switch (kind_) {
        case Kind::Ag01:
            return std::max(2 * n, 2L);
        case Kind::TreeInfBase:
            return std::max(2 * n - 1, 2L);
        case Kind::TreeInfInt:
            return std::max({2 * n - 1, 2 * lo_, 2L});
        case Kind::NdHubHub:
            return std::max(2 * n - 1, 1L);
        case Kind::NdHubInt:
            if (lo_ == 1) return std::max(n, 2L);
            return std::nullopt;
        default:
            return std::nullopt;
    }
}

std::optional<Rational> TailCertificate::denting_refutation_eps() const {
    switch (kind_) {
        case Kind::Ag01:
        case Kind::NdHubHub:
            return Rational(1);
        case Kind::NdHubInt:
            return lo_ == 1 ? std::optional<Rational>(Rational(1)) : std::nullopt;
        default:
            return std::nullopt;
    }
}

void TailCertificate::validate_against_truncation() const {
    const Rational dxy = space_->distance(x_, y_);
    for (int z = 0; z < space_->point_count(); ++z) {
        if (z == x_ || z == y_) continue;
        auto predicted = predict(z);
        if (!predicted) continue;
        Rational excess = segment_excess(*space_, x_, y_, z);
        Rational mind = min_distance(*space_, x_, y_, z);
        if (excess != predicted->first || mind != predicted->second)
            fail(ErrorCode::Internal,
                 "tail certificate " + tag() + " disagrees with the truncation at " + space_->label(z));
    }
    // bound sanity: non-negative and monotone along a descending grid
    const Rational grid[] = {Rational(2), Rational(1), Rational(1, 2), Rational(1, 4),
                             Rational(1, 8), Rational(1, 16)};
    std::optional<Rational> previous;  // bound at the next larger eps
    for (const Rational& eps : grid) {
        auto bound = excess_lower_bound(eps);
        if (bound && *bound < 0)
            fail(ErrorCode::Internal, "certificate " + tag() + " produced a negative bound");
        if (bound && previous && *bound > *previous)
            fail(ErrorCode::Internal, "certificate " + tag() + " bound not monotone in eps");
        if (bound) previous = bound;
    }
    // schedule witnesses inside the truncation must verify the (Z) inequality
    for (long n = 1; n <= 8; ++n) {
        auto sched = z_witness_index(n);
        if (!sched) break;
        int z = -1;
        for (int i = 0; i < space_->point_count(); ++i) {
            if (i == x_ || i == y_) continue;
            GalleryRole r = gallery_role(spec_, i);
            if (r.kind == GalleryRole::Kind::Integer && r.index == *sched) {
                z = i;
                break;
            }
        }
        if (z < 0) continue;  // beyond the truncation
        Rational lhs = space_->distance(x_, z) + space_->distance(y_, z);
        Rational rhs = dxy + inv(n) * min_distance(*space_, x_, y_, z);
        if (lhs > rhs)
            fail(ErrorCode::Internal, "certificate " + tag() + " schedule fails at level " + std::to_string(n));
    }
}

std::optional<TailCertificate> tail_certificate(const MetricSpace& space, int x, int y) {
    if (!space.is_gallery()) return std::nullopt;
    return TailCertificate(space, x, y);
}

}  // namespace freespace
