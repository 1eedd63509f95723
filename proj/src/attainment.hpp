#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "free_element.hpp"

namespace freespace {

struct AttainmentReport {
    Rational lip_norm;
    std::vector<std::pair<int, int>> attaining_pairs;  // |f(x)-f(y)| = norm * d(x,y), x < y
    std::optional<std::pair<int, int>> trivial_segment_pair;
};

/// Exhaustive exact scan for the pairs where f attains its Lipschitz norm.
/// Throws DegenerateInput when f == 0 (after base shift) and EmptySpace on a
/// single point.
AttainmentReport strongly_attains(const LipFunction& f);

struct NormAttainmentSample {
    LipFunction function;
    Rational norm;
    Molecule vertex_molecule;  // oracle vertex attaining |<f,m>| = norm
};

struct NormAttainmentResult {
    bool all_passed = true;
    std::uint64_t seed = 0;
    std::vector<NormAttainmentSample> samples;
    std::optional<int> counterexample;  // sample index; must stay empty
};

/// Samples random rational functions and verifies that each attains its
/// functional norm at an oracle-vertex molecule, which then strongly attains
/// by definition. Finite spaces within the oracle cap only.
NormAttainmentResult verify_na_equals_sna(const MetricSpace& space, int sample_count,
                                          std::uint64_t seed);

}  // namespace freespace
