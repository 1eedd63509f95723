#include "min_cost_flow.hpp"

#include <algorithm>
#include <optional>

#include "errors.hpp"

namespace freespace {

namespace {

// Residual arc choice for (u,v): cancelling opposite flow (cost -d) beats
// pushing forward (cost +d), and only the cancel arc is capacitated.
struct Residual {
    Rational cost;
    bool cancel;
    Rational capacity;  // meaningful when cancel
};

class TransportSolver {
public:
    TransportSolver(const MetricSpace& space, std::vector<Rational> excess)
        : space_(space), n_(space.point_count()), excess_(std::move(excess)) {
        flow_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), Rational(0));
    }

    TransportPlan solve() {
        for (int guard = 0;; ++guard) {
            if (guard > 200000) fail(ErrorCode::Internal, "transport solver did not converge");
            int source = -1;
            for (int i = 0; i < n_; ++i)
                if (excess_[static_cast<std::size_t>(i)] > 0) {
                    source = i;
                    break;
                }
            if (source < 0) break;
            augment_from(source);
        }
        TransportPlan plan;
        plan.cost = 0;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v) {
                const Rational& f = flow(u, v);
                if (f > 0) {
                    plan.cost += f * space_.distance(u, v);
                    plan.arcs.push_back({u, v, f});
                }
            }
        verify_optimal();
        return plan;
    }

private:
    Rational& flow(int u, int v) { return flow_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }
    const Rational& flow(int u, int v) const { return flow_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)]; }

    Residual residual(int u, int v) const {
        const Rational& opposite = flow(v, u);
        if (opposite > 0) return {-space_.distance(u, v), true, opposite};
        return {space_.distance(u, v), false, Rational(0)};
    }

    // Bellman-Ford from `source` over the residual graph; augments along a
    // shortest path to the nearest deficit point by the path bottleneck.
    void augment_from(int source) {
        std::vector<std::optional<Rational>> dist(static_cast<std::size_t>(n_));
        std::vector<int> parent(static_cast<std::size_t>(n_), -1);
        dist[static_cast<std::size_t>(source)] = Rational(0);
        for (int round = 0; round < n_; ++round) {
            bool changed = false;
            for (int u = 0; u < n_; ++u) {
                if (!dist[static_cast<std::size_t>(u)]) continue;
                for (int v = 0; v < n_; ++v) {
                    if (u == v) continue;
                    Residual arc = residual(u, v);
                    Rational candidate = *dist[static_cast<std::size_t>(u)] + arc.cost;
                    if (!dist[static_cast<std::size_t>(v)] || candidate < *dist[static_cast<std::size_t>(v)]) {
                        dist[static_cast<std::size_t>(v)] = candidate;
                        parent[static_cast<std::size_t>(v)] = u;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
        }
        int sink = -1;
        for (int v = 0; v < n_; ++v) {
            if (excess_[static_cast<std::size_t>(v)] >= 0 || !dist[static_cast<std::size_t>(v)]) continue;
            if (sink < 0 || *dist[static_cast<std::size_t>(v)] < *dist[static_cast<std::size_t>(sink)]) sink = v;
        }
        if (sink < 0) fail(ErrorCode::Internal, "unbalanced transport problem");

        Rational bottleneck =
            std::min(excess_[static_cast<std::size_t>(source)],
                     Rational(-excess_[static_cast<std::size_t>(sink)]));
        for (int v = sink; v != source; v = parent[static_cast<std::size_t>(v)]) {
            Residual arc = residual(parent[static_cast<std::size_t>(v)], v);
            if (arc.cancel) bottleneck = std::min(bottleneck, arc.capacity);
        }
        for (int v = sink; v != source; v = parent[static_cast<std::size_t>(v)]) {
            const int u = parent[static_cast<std::size_t>(v)];
            Rational remaining = bottleneck;
            Rational& opposite = flow(v, u);
            if (opposite > 0) {
                Rational cancelled = std::min(opposite, remaining);
                opposite -= cancelled;
                remaining -= cancelled;
            }
            if (remaining > 0) flow(u, v) += remaining;
        }
        excess_[static_cast<std::size_t>(source)] -= bottleneck;
        excess_[static_cast<std::size_t>(sink)] += bottleneck;
    }

    // A feasible flow is optimal iff the residual graph has no negative cycle.
    void verify_optimal() const {
        std::vector<Rational> dist(static_cast<std::size_t>(n_), Rational(0));
        for (int round = 0; round < n_; ++round) {
            bool changed = false;
            for (int u = 0; u < n_; ++u)
                for (int v = 0; v < n_; ++v) {
                    if (u == v) continue;
                    Residual arc = residual(u, v);
                    Rational candidate = dist[static_cast<std::size_t>(u)] + arc.cost;
                    if (candidate < dist[static_cast<std::size_t>(v)]) {
                        dist[static_cast<std::size_t>(v)] = candidate;
                        changed = true;
                    }
                }
            if (!changed) return;
        }
        fail(ErrorCode::Internal, "transport plan failed the optimality certificate");
    }

    const MetricSpace& space_;
    int n_;
    std::vector<Rational> excess_;
    std::vector<Rational> flow_;
};

}  // namespace

TransportPlan min_cost_transport(const MetricSpace& space, const std::vector<Rational>& divergence) {
    if (static_cast<int>(divergence.size()) != space.point_count())
        fail(ErrorCode::InvalidArgument, "divergence must cover every point");
    Rational total = 0;
    for (const auto& value : divergence) total += value;
    if (total != 0) fail(ErrorCode::InvalidArgument, "divergence must sum to zero");
    TransportSolver solver(space, divergence);
    return solver.solve();
}

}  // namespace freespace
