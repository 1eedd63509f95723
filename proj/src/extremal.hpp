#pragma once

#include <vector>

#include "gallery.hpp"
#include "verdict.hpp"

namespace freespace {

std::vector<Rational> default_eps_grid();  // {1, 1/2, 1/4, 1/8, 1/16}

struct ClassifyOptions {
    long depth = 20;  // property (Z) witness levels
    std::vector<Rational> eps_grid = default_eps_grid();
    int oracle_cap = 10;
};

/// Extremality by the metric rule: m_xy is extreme iff [x,y] = {x,y}. On
/// gallery spaces the truncation scan is combined with the tail certificate.
Verdict is_extreme(const MetricSpace& space, int x, int y);

/// Denting point test via the eps-delta condition: for each eps a delta with
/// (1-delta)(d(x,z)+d(z,y)) < d(x,y)  =>  min(d(x,z),d(y,z)) < eps.
/// Finite spaces reduce to segment triviality with a delta(eps) table as
/// evidence; gallery spaces combine the truncation with the certificate.
Verdict is_denting(const MetricSpace& space, int x, int y, const std::vector<Rational>& eps_grid);

/// Property (Z): for every n some z outside {x,y} has
/// d(x,z)+d(y,z) <= d(x,y) + (1/n) min(d(x,z),d(y,z)).
Verdict has_property_z(const MetricSpace& space, int x, int y, long depth);

/// Strongly exposed iff property (Z) fails; the (Z) evidence passes through.
Verdict is_strongly_exposed(const MetricSpace& space, int x, int y, long depth);

/// Whether m_xy is the unique pairing-1 maximizer of f_xy over all molecules.
/// Finite spaces only; gallery spaces report Inconclusive.
Verdict is_exposed_by_fxy(const MetricSpace& space, int x, int y);

/// Ground truth: the vertex set of conv(V) by exact LP membership tests,
/// one per molecule ("is m in the hull of the others"). Throws TooLarge
/// beyond the cap.
std::vector<Molecule> oracle_extreme_points(const MetricSpace& space, int cap = 10);

ClassificationRow classify_pair(const MetricSpace& space, int x, int y, const ClassifyOptions& options);

/// One row per ordered molecule. Finite spaces within the oracle cap carry
/// the oracle column, and the oracle must equal the set of extreme-Proven
/// rows; the implication chain strongly_exposed => denting => extreme is
/// asserted on every row.
std::vector<ClassificationRow> classify_all(const MetricSpace& space, const ClassifyOptions& options);

}  // namespace freespace
