#pragma once

#include <vector>

#include "metric_space.hpp"

namespace freespace {

struct FlowArc {
    int from;
    int to;
    Rational amount;  // > 0
};

struct TransportPlan {
    Rational cost;
    std::vector<FlowArc> arcs;
};

/// Exact minimum-cost flow on the complete digraph over the space's points:
/// arc (u,v) costs d(u,v) and is uncapacitated; `divergence` (which must sum
/// to zero) prescribes the net outflow of every point. Successive shortest
/// paths; every flow amount stays on the integer lattice scaled by the common
/// denominator of the supplies, so each augmentation makes fixed progress.
/// The returned plan is certified optimal by a no-negative-cycle check.
TransportPlan min_cost_transport(const MetricSpace& space, const std::vector<Rational>& divergence);

}  // namespace freespace
