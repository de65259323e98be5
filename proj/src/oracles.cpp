#include "bireal/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace bireal {

namespace {

// Dinic's algorithm on an explicit residual network.
class FlowNetwork {
public:
    explicit FlowNetwork(std::size_t nodes) : head_(nodes, kNone) {}

    // returns the arc index
    std::size_t add_arc(std::size_t from, std::size_t to, degree_t capacity) {
        const std::size_t id = arcs_.size();
        arcs_.push_back({to, capacity, head_[from]});
        head_[from] = id;
        arcs_.push_back({from, 0, head_[to]});
        head_[to] = id + 1;
        return id;
    }

    degree_t residual(std::size_t arc) const { return arcs_[arc].capacity; }

    degree_t max_flow(std::size_t source, std::size_t sink) {
        degree_t total = 0;
        while (build_levels(source, sink)) {
            cursor_ = head_;
            while (degree_t pushed = augment(source, sink, kInfinity)) {
                total += pushed;
            }
        }
        return total;
    }

    static constexpr degree_t kInfinity = std::numeric_limits<degree_t>::max() / 4;

private:
    static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

    struct Arc {
        std::size_t to;
        degree_t capacity;
        std::size_t next;
    };

    bool build_levels(std::size_t source, std::size_t sink) {
        level_.assign(head_.size(), -1);
        level_[source] = 0;
        std::queue<std::size_t> queue;
        queue.push(source);
        while (!queue.empty()) {
            const std::size_t x = queue.front();
            queue.pop();
            for (std::size_t a = head_[x]; a != kNone; a = arcs_[a].next) {
                if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[x] + 1;
                    queue.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    degree_t augment(std::size_t x, std::size_t sink, degree_t limit) {
        if (x == sink) {
            return limit;
        }
        for (std::size_t& a = cursor_[x]; a != kNone; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.capacity > 0 && level_[arc.to] == level_[x] + 1) {
                if (degree_t pushed = augment(arc.to, sink, std::min(limit, arc.capacity))) {
                    arc.capacity -= pushed;
                    arcs_[a ^ 1].capacity += pushed;
                    return pushed;
                }
            }
        }
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<std::size_t> head_;
    std::vector<std::size_t> cursor_;
    std::vector<int> level_;
};

}

std::optional<BipartiteGraph> flow_realize(const IntervalInstance& raw) {
    const IntervalInstance inst = clamp_bounds(raw);
    const std::size_t n1 = inst.n1;
    const std::size_t n2 = inst.n2;
    const std::size_t source = 0;
    const std::size_t sink = n1 + n2 + 1;
    const std::size_t super_source = sink + 1;
    const std::size_t super_sink = sink + 2;
    const auto row_node = [](std::size_t i) { return 1 + i; };
    const auto col_node = [n1](std::size_t j) { return 1 + n1 + j; };

    FlowNetwork net(sink + 3);
    std::vector<degree_t> excess(sink + 1, 0);
    const auto add_bounded = [&](std::size_t from, std::size_t to, degree_t low, degree_t up) {
        if (low > up) {
            // a lower bound above the partner part size: infeasible arc
            return false;
        }
        net.add_arc(from, to, up - low);
        excess[to] += low;
        excess[from] -= low;
        return true;
    };

    for (std::size_t i = 0; i < n1; ++i) {
        if (!add_bounded(source, row_node(i), inst.r_low[i], inst.r_up[i])) {
            return std::nullopt;
        }
    }
    std::vector<std::size_t> pair_arc(n1 * n2);
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            pair_arc[i * n2 + j] = net.add_arc(row_node(i), col_node(j), 1);
        }
    }
    for (std::size_t j = 0; j < n2; ++j) {
        if (!add_bounded(col_node(j), sink, inst.c_low[j], inst.c_up[j])) {
            return std::nullopt;
        }
    }
    net.add_arc(sink, source, FlowNetwork::kInfinity);

    degree_t required = 0;
    for (std::size_t x = 0; x <= sink; ++x) {
        if (excess[x] > 0) {
            net.add_arc(super_source, x, excess[x]);
            required += excess[x];
        } else if (excess[x] < 0) {
            net.add_arc(x, super_sink, -excess[x]);
        }
    }
    if (net.max_flow(super_source, super_sink) != required) {
        return std::nullopt;
    }

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
            if (net.residual(pair_arc[i * n2 + j]) == 0) {
                edges.emplace_back(i, j);
            }
        }
    }
    return BipartiteGraph::from_edges(n1, n2, edges);
}

BruteForceSummary brute_force_realizations(const IntervalInstance& raw) {
    const IntervalInstance inst = clamp_bounds(raw);
    const std::size_t n1 = inst.n1;
    const std::size_t n2 = inst.n2;
    const std::size_t pairs = n1 * n2;
    if (pairs > kBruteForceMaxPairs) {
        throw std::invalid_argument("instance too large for exhaustive enumeration");
    }

    std::vector<degree_t> row_deg(n1, 0);
    std::vector<degree_t> col_deg(n2, 0);
    std::size_t edges = 0;
    BruteForceSummary summary;
    const auto record = [&] {
        for (std::size_t i = 0; i < n1; ++i) {
            if (row_deg[i] < inst.r_low[i] || row_deg[i] > inst.r_up[i]) {
                return;
            }
        }
        for (std::size_t j = 0; j < n2; ++j) {
            if (col_deg[j] < inst.c_low[j] || col_deg[j] > inst.c_up[j]) {
                return;
            }
        }
        if (!summary.exists) {
            summary = {true, edges, edges};
        } else {
            summary.min_edges = std::min(summary.min_edges, edges);
            summary.max_edges = std::max(summary.max_edges, edges);
        }
    };

    // Gray-code walk over all 2^pairs edge sets: one edge flips per step
    std::uint32_t present = 0;
    record();
    const std::uint32_t count = std::uint32_t{1} << pairs;
    for (std::uint32_t step = 1; step < count; ++step) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(step));
        const std::size_t i = bit / n2;
        const std::size_t j = bit % n2;
        present ^= std::uint32_t{1} << bit;
        const degree_t delta = (present >> bit) & 1U ? 1 : -1;
        row_deg[i] += delta;
        col_deg[j] += delta;
        edges = delta > 0 ? edges + 1 : edges - 1;
        record();
    }
    return summary;
}

}
