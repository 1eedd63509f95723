#include "extremal.hpp"

#include <algorithm>
#include <map>

#include "errors.hpp"
#include "lip_function.hpp"
#include "parallel.hpp"
#include "simplex.hpp"

namespace freespace {

std::vector<Rational> default_eps_grid() {
    return {Rational(1), Rational(1, 2), Rational(1, 4), Rational(1, 8), Rational(1, 16)};
}

namespace {

// smallest-index z strictly inside the segment [x,y], if any
std::optional<int> segment_interior_point(const MetricSpace& space, int x, int y) {
    for (int z : metric_segment(space, x, y))
        if (z != x && z != y) return z;
    return std::nullopt;
}

EvidenceItem excess_item(const MetricSpace& space, int x, int y, int z, const char* kind,
                         const char* op) {
    EvidenceItem item;
    item.kind = kind;
    item.witness = space.label(z);
    item.lhs = space.distance(x, z) + space.distance(z, y);
    item.rhs = space.distance(x, y);
    item.op = op;
    return item;
}

long z_fail_level_for_truncation(const MetricSpace& space, int x, int y) {
    // smallest level at which no truncation point witnesses property (Z);
    // callers guarantee every excess is strictly positive
    long level = 1;
    for (int z = 0; z < space.point_count(); ++z) {
        if (z == x || z == y) continue;
        Rational excess = segment_excess(space, x, y, z);
        if (excess <= 0) fail(ErrorCode::Internal, "(Z)-failure level needs positive excesses");
        mpz_class floor_ratio = rational_floor(min_distance(space, x, y, z) / excess);
        if (!floor_ratio.fits_slong_p()) fail(ErrorCode::Internal, "(Z)-failure level overflow");
        level = std::max(level, floor_ratio.get_si() + 1);
    }
    return level;
}

std::optional<int> point_with_integer_index(const MetricSpace& space, long index) {
    const GallerySpec& spec = *space.gallery();
    for (int i = 0; i < space.point_count(); ++i) {
        GalleryRole role = gallery_role(spec, i);
        if (role.kind == GalleryRole::Kind::Integer && role.index == index) return i;
    }
    return std::nullopt;
}

}  // namespace

Verdict is_extreme(const MetricSpace& space, int x, int y) {
    if (x == y) fail(ErrorCode::InvalidArgument, "molecule endpoints must differ");
    Verdict verdict;
    if (auto interior = segment_interior_point(space, x, y)) {
        verdict.status = Status::Refuted;
        verdict.evidence.push_back(excess_item(space, x, y, *interior, "segment_member", "eq"));
        verdict.note = "the segment [x,y] contains " + space.label(*interior);
        return verdict;
    }
    std::vector<EvidenceItem> rows;
    for (int z = 0; z < space.point_count(); ++z) {
        if (z == x || z == y) continue;
        rows.push_back(excess_item(space, x, y, z, "segment_excess", "gt"));
    }
    if (!space.is_gallery()) {
        verdict.status = Status::Proven;
        verdict.evidence = std::move(rows);
        verdict.note = "the segment [x,y] is trivial";
        return verdict;
    }
    auto cert = tail_certificate(space, x, y);
    if (cert && cert->tail_excess_positive()) {
        verdict.status = Status::Proven;
        verdict.evidence = std::move(rows);
        verdict.certificate = cert->tag();
        verdict.note = "trivial segment on the truncation; the certificate keeps tail excess positive";
        return verdict;
    }
    verdict.status = Status::Inconclusive;
    verdict.search_depth = space.gallery()->depth;
    verdict.note = "trivial segment on the truncation but no applicable tail certificate";
    return verdict;
}

namespace {

Verdict denting_refuted_by_interior(const MetricSpace& space, int x, int y, int interior) {
    Verdict verdict;
    verdict.status = Status::Refuted;
    EvidenceItem item = excess_item(space, x, y, interior, "denting_witness", "eq");
    item.eps = min_distance(space, x, y, interior);
    verdict.evidence.push_back(std::move(item));
    verdict.note = "zero-excess witness: the condition fails for every eps <= its min-distance";
    return verdict;
}

// delta(eps) table row over the truncation, optionally capped by a tail bound.
EvidenceItem delta_row(const MetricSpace& space, int x, int y, const Rational& eps,
                       const std::optional<Rational>& tail_excess_bound) {
    const Rational dxy = space.distance(x, y);
    std::optional<Rational> min_sum;
    std::optional<int> argmin;
    for (int z = 0; z < space.point_count(); ++z) {
        if (z == x || z == y) continue;
        if (min_distance(space, x, y, z) < eps) continue;
        Rational sum = space.distance(x, z) + space.distance(z, y);
        if (!min_sum || sum < *min_sum) {
            min_sum = sum;
            argmin = z;
        }
    }
    bool tail_decides = false;
    if (tail_excess_bound) {
        Rational tail_sum = dxy + *tail_excess_bound;
        if (!min_sum || tail_sum < *min_sum) {
            min_sum = tail_sum;
            tail_decides = true;
        }
    }
    EvidenceItem item;
    item.eps = eps;
    if (!min_sum) {
        item.kind = "denting_vacuous";
        item.witness = "";
        item.lhs = dxy;
        item.rhs = dxy;
        item.op = "ge";
        item.delta = Rational(1, 2);  // no qualifying z: any delta works at this eps
        return item;
    }
    item.kind = tail_decides ? "denting_delta_tail" : "denting_delta";
    item.witness = tail_decides ? "" : space.label(*argmin);
    item.lhs = *min_sum;
    item.rhs = dxy;
    item.op = "gt";
    item.delta = 1 - dxy / *min_sum;
    return item;
}

}  // namespace

Verdict is_denting(const MetricSpace& space, int x, int y, const std::vector<Rational>& eps_grid) {
    if (x == y) fail(ErrorCode::InvalidArgument, "molecule endpoints must differ");
    Verdict verdict;
    if (auto interior = segment_interior_point(space, x, y))
        return denting_refuted_by_interior(space, x, y, *interior);

    if (!space.is_gallery()) {
        verdict.status = Status::Proven;
        for (const Rational& eps : eps_grid)
            verdict.evidence.push_back(delta_row(space, x, y, eps, std::nullopt));
        verdict.note = "finite space with trivial segment: positive excess gap at every eps";
        return verdict;
    }

    auto cert = tail_certificate(space, x, y);
    if (!cert) {
        verdict.status = Status::Inconclusive;
        verdict.search_depth = space.gallery()->depth;
        return verdict;
    }
    if (cert->positive_gap_all_eps()) {
        verdict.status = Status::Proven;
        for (const Rational& eps : eps_grid)
            verdict.evidence.push_back(delta_row(space, x, y, eps, cert->excess_lower_bound(eps)));
        verdict.certificate = cert->tag();
        verdict.note = "positive excess gap at every eps, tail covered by the certificate";
        return verdict;
    }
    if (auto eps0 = cert->denting_refutation_eps()) {
        verdict.status = Status::Refuted;
        const GallerySpec& spec = *space.gallery();
        std::vector<int> witnesses;
        for (int z = 0; z < space.point_count(); ++z) {
            if (z == x || z == y) continue;
            if (gallery_role(spec, z).kind != GalleryRole::Kind::Integer) continue;
            if (min_distance(space, x, y, z) >= *eps0) witnesses.push_back(z);
        }
        // keep the deep end of the truncation, where the excess trend shows
        const std::size_t keep = 8;
        if (witnesses.size() > keep) witnesses.erase(witnesses.begin(), witnesses.end() - static_cast<long>(keep));
        for (int z : witnesses) {
            EvidenceItem item = excess_item(space, x, y, z, "denting_witness", "gt");
            item.eps = *eps0;
            verdict.evidence.push_back(std::move(item));
        }
        verdict.certificate = cert->tag();
        verdict.note =
            "witnesses keep min-distance >= eps while the certificate drives their excess to 0";
        return verdict;
    }
    verdict.status = Status::Inconclusive;
    verdict.search_depth = space.gallery()->depth;
    return verdict;
}

Verdict has_property_z(const MetricSpace& space, int x, int y, long depth) {
    if (x == y) fail(ErrorCode::InvalidArgument, "molecule endpoints must differ");
    if (depth < 1) fail(ErrorCode::InvalidArgument, "depth must be positive");
    Verdict verdict;
    const Rational dxy = space.distance(x, y);

    auto witness_row = [&](long n, int z) {
        EvidenceItem item;
        item.kind = "z_witness";
        item.witness = space.label(z);
        item.level = n;
        item.lhs = space.distance(x, z) + space.distance(y, z);
        item.rhs = dxy + min_distance(space, x, y, z) / n;
        item.op = "le";
        return item;
    };
    // first witness by increasing index, per the deterministic search order
    auto scan_level = [&](long n) -> std::optional<int> {
        for (int z = 0; z < space.point_count(); ++z) {
            if (z == x || z == y) continue;
            if (space.distance(x, z) + space.distance(y, z) <=
                dxy + min_distance(space, x, y, z) / n)
                return z;
        }
        return std::nullopt;
    };

    const bool interior = segment_interior_point(space, x, y).has_value();
    if (!space.is_gallery()) {
        if (interior) {
            verdict.status = Status::Proven;
            for (long n = 1; n <= depth; ++n) {
                auto z = scan_level(n);
                if (!z) fail(ErrorCode::Internal, "an interior segment point always witnesses (Z)");
                verdict.evidence.push_back(witness_row(n, *z));
            }
            verdict.note = "a zero-excess point witnesses every level";
            return verdict;
        }
        verdict.status = Status::Refuted;
        const long level = z_fail_level_for_truncation(space, x, y);
        for (int z = 0; z < space.point_count(); ++z) {
            if (z == x || z == y) continue;
            EvidenceItem item;
            item.kind = "z_fail";
            item.witness = space.label(z);
            item.level = level;
            item.lhs = space.distance(x, z) + space.distance(y, z);
            item.rhs = dxy + min_distance(space, x, y, z) / level;
            item.op = "gt";
            verdict.evidence.push_back(std::move(item));
        }
        verdict.note = "no witness exists at level " + std::to_string(level) +
                       ": every excess clears (1/n) min-distance";
        return verdict;
    }

    if (interior) {
        verdict.status = Status::Proven;
        for (long n = 1; n <= depth; ++n) {
            auto z = scan_level(n);
            if (!z) fail(ErrorCode::Internal, "an interior segment point always witnesses (Z)");
            verdict.evidence.push_back(witness_row(n, *z));
        }
        verdict.note = "a zero-excess truncation point witnesses every level";
        return verdict;
    }
    auto cert = tail_certificate(space, x, y);
    if (cert && cert->z_witness_index(1)) {
        verdict.status = Status::Proven;
        for (long n = 1; n <= depth; ++n) {
            auto index = cert->z_witness_index(n);
            if (!index) break;
            auto z = point_with_integer_index(space, *index);
            if (!z) break;  // the schedule continues beyond the truncation
            EvidenceItem item = witness_row(n, *z);
            if (!evidence_relation_holds(item))
                fail(ErrorCode::Internal, "certificate schedule witness fails its inequality");
            verdict.evidence.push_back(std::move(item));
        }
        verdict.certificate = cert->tag();
        verdict.note = "certificate witness schedule extends the listed levels to every n";
        return verdict;
    }
    if (cert && cert->z_fail_threshold()) {
        verdict.status = Status::Refuted;
        long tail_level = rational_floor(*cert->z_fail_threshold()).get_si() + 1;
        long level = std::max(tail_level, z_fail_level_for_truncation(space, x, y));
        for (int z = 0; z < space.point_count(); ++z) {
            if (z == x || z == y) continue;
            EvidenceItem item;
            item.kind = "z_fail";
            item.witness = space.label(z);
            item.level = level;
            item.lhs = space.distance(x, z) + space.distance(y, z);
            item.rhs = dxy + min_distance(space, x, y, z) / level;
            item.op = "gt";
            verdict.evidence.push_back(std::move(item));
        }
        verdict.certificate = cert->tag();
        verdict.note = "no witness at level " + std::to_string(level) +
                       "; the certificate extends the failure to the tail";
        return verdict;
    }
    verdict.status = Status::Inconclusive;
    verdict.search_depth = depth;
    return verdict;
}

Verdict is_strongly_exposed(const MetricSpace& space, int x, int y, long depth) {
    Verdict z = has_property_z(space, x, y, depth);
    Verdict verdict;
    verdict.evidence = std::move(z.evidence);
    verdict.certificate = z.certificate;
    verdict.search_depth = z.search_depth;
    switch (z.status) {
        case Status::Proven:
            verdict.status = Status::Refuted;
            verdict.note = "the pair has property (Z): " + z.note;
            break;
        case Status::Refuted:
            verdict.status = Status::Proven;
            verdict.note = "the pair fails property (Z): " + z.note;
            break;
        case Status::Inconclusive:
            verdict.status = Status::Inconclusive;
            verdict.note = z.note;
            break;
    }
    return verdict;
}

Verdict is_exposed_by_fxy(const MetricSpace& space, int x, int y) {
    if (x == y) fail(ErrorCode::InvalidArgument, "molecule endpoints must differ");
    Verdict verdict;
    if (space.is_gallery()) {
        verdict.status = Status::Inconclusive;
        verdict.search_depth = space.gallery()->depth;
        verdict.note = "uniqueness of the maximizer is not decidable from a truncation";
        return verdict;
    }
    LipFunction f = build_f_xy(space, x, y);
    std::vector<Molecule> maximizers;
    std::optional<Rational> second_best;
    std::optional<Molecule> second_best_molecule;
    for (int u = 0; u < space.point_count(); ++u)
        for (int v = 0; v < space.point_count(); ++v) {
            if (u == v) continue;
            Rational value = pair_molecule(f, u, v);
            if (value == 1) {
                maximizers.push_back({u, v});
            } else if (!second_best || value > *second_best) {
                second_best = value;
                second_best_molecule = Molecule{u, v};
            }
        }
    bool self_found = false;
    for (const Molecule& m : maximizers) self_found |= (m.x == x && m.y == y);
    if (!self_found) fail(ErrorCode::Internal, "f_xy must pair to 1 with its own molecule");
    if (maximizers.size() == 1) {
        verdict.status = Status::Proven;
        if (second_best_molecule) {
            EvidenceItem item;
            item.kind = "exposure_unique";
            item.witness = space.label(second_best_molecule->x) + "|" + space.label(second_best_molecule->y);
            item.lhs = *second_best;
            item.rhs = 1;
            item.op = "lt";
            verdict.evidence.push_back(std::move(item));
        }
        verdict.note = "m_xy is the unique molecule with pairing 1 against f_xy";
        return verdict;
    }
    verdict.status = Status::Refuted;
    for (const Molecule& m : maximizers) {
        if (m.x == x && m.y == y) continue;
        EvidenceItem item;
        item.kind = "exposure_tie";
        item.witness = space.label(m.x) + "|" + space.label(m.y);
        item.lhs = 1;
        item.rhs = 1;
        item.op = "eq";
        verdict.evidence.push_back(std::move(item));
    }
    verdict.note = "other molecules also attain pairing 1 against f_xy";
    return verdict;
}

std::vector<Molecule> oracle_extreme_points(const MetricSpace& space, int cap) {
    const int n = space.point_count();
    if (n > cap)
        fail(ErrorCode::TooLarge, "oracle cap " + std::to_string(cap) + " exceeded by " +
                                      std::to_string(n) + " points");
    if (n < 2) fail(ErrorCode::EmptySpace, "no molecules on a single-point space");
    std::vector<Molecule> molecules;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) molecules.push_back({u, v});

    auto coordinates = [&](const Molecule& m) {
        std::vector<Rational> vec(static_cast<std::size_t>(n - 1), Rational(0));
        FreeElement element = FreeElement::molecule(space, m.x, m.y);
        for (const auto& [index, value] : element.coeffs()) vec[static_cast<std::size_t>(index - 1)] = value;
        return vec;
    };

    std::vector<char> vertex(molecules.size(), 0);
    parallel_for(static_cast<int>(molecules.size()), [&](int idx) {
        const Molecule& m = molecules[static_cast<std::size_t>(idx)];
        std::vector<std::vector<Rational>> A(static_cast<std::size_t>(n),
                                             std::vector<Rational>());
        std::vector<Rational> b = coordinates(m);
        b.push_back(1);  // convex combination row
        // columns: every other molecule; rows: n-1 coordinates + the mass row
        std::vector<std::vector<Rational>> columns;
        for (const Molecule& other : molecules) {
            if (other.x == m.x && other.y == m.y) continue;
            columns.push_back(coordinates(other));
        }
        for (int r = 0; r < n; ++r) {
            A[static_cast<std::size_t>(r)].resize(columns.size());
            for (std::size_t cidx = 0; cidx < columns.size(); ++cidx)
                A[static_cast<std::size_t>(r)][cidx] =
                    r < n - 1 ? columns[cidx][static_cast<std::size_t>(r)] : Rational(1);
        }
        vertex[static_cast<std::size_t>(idx)] = lp_equalities_feasible(A, b) ? 0 : 1;
    });
    std::vector<Molecule> result;
    for (std::size_t i = 0; i < molecules.size(); ++i)
        if (vertex[i]) result.push_back(molecules[i]);
    return result;
}

ClassificationRow classify_pair(const MetricSpace& space, int x, int y, const ClassifyOptions& options) {
    ClassificationRow row;
    row.molecule = {x, y};
    row.extreme = is_extreme(space, x, y);
    row.exposed_by_fxy = is_exposed_by_fxy(space, x, y);
    row.denting = is_denting(space, x, y, options.eps_grid);
    row.strongly_exposed = is_strongly_exposed(space, x, y, options.depth);

    auto proven = [](const Verdict& v) { return v.status == Status::Proven; };
    auto refuted = [](const Verdict& v) { return v.status == Status::Refuted; };
    if ((proven(row.strongly_exposed) && !proven(row.denting)) ||
        (proven(row.denting) && !proven(row.extreme)) ||
        (refuted(row.extreme) && !refuted(row.denting)) ||
        (refuted(row.denting) && !refuted(row.strongly_exposed)))
        fail(ErrorCode::Internal, "verdict chain violated for pair " + space.label(x) + "," + space.label(y));
    return row;
}

std::vector<ClassificationRow> classify_all(const MetricSpace& space, const ClassifyOptions& options) {
    const int n = space.point_count();
    if (n < 2) fail(ErrorCode::EmptySpace, "no molecules on a single-point space");
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (x != y) pairs.emplace_back(x, y);
    std::vector<ClassificationRow> rows(pairs.size());
    parallel_for(static_cast<int>(pairs.size()), [&](int idx) {
        rows[static_cast<std::size_t>(idx)] =
            classify_pair(space, pairs[static_cast<std::size_t>(idx)].first,
                          pairs[static_cast<std::size_t>(idx)].second, options);
    });
    if (!space.is_gallery() && n <= options.oracle_cap) {
        std::vector<Molecule> vertices = oracle_extreme_points(space, options.oracle_cap);
        auto is_vertex = [&](const Molecule& m) {
            for (const Molecule& v : vertices)
                if (v.x == m.x && v.y == m.y) return true;
            return false;
        };
        for (auto& row : rows) {
            bool oracle_says = is_vertex(row.molecule);
            row.oracle_extreme = oracle_says;
            if (oracle_says != (row.extreme.status == Status::Proven))
                fail(ErrorCode::Internal, "oracle disagrees with the metric extremality rule at " +
                                              space.label(row.molecule.x) + "," +
                                              space.label(row.molecule.y));
        }
    }
    return rows;
}

}  // namespace freespace
