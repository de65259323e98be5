#include "bireal/realizer.hpp"

#include <string>
#include <vector>

#include "bireal/ryser.hpp"

namespace bireal {

namespace {

std::string describe(const DominanceViolation& v) {
    return std::string("bounds are not realizable: prefix ") + std::to_string(v.prefix) +
           " of the " + (v.side == Side::Rows ? "row" : "column") +
           " lower bounds sums to " + std::to_string(v.lower_sum) + " > " +
           std::to_string(v.upper_sum);
}

std::vector<degree_t> relabel(const DegreeVector& values, const std::vector<std::size_t>& target) {
    std::vector<degree_t> out(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        out[target[k]] = values[k];
    }
    return out;
}

void require_realizable(const SortedInstance& sorted) {
    if (auto violation = find_violation(sorted)) {
        throw NotRealizable(*violation);
    }
}

}

NotRealizable::NotRealizable(DominanceViolation certificate)
    : std::runtime_error(describe(certificate)), certificate_(certificate) {}

RealizationReport realize_edge_minimal(const IntervalInstance& raw, OpCounter* counter) {
    const SortedInstance sorted = validate_and_normalize(raw);
    require_realizable(sorted);

    PhaseOneResult one = phase_one(sorted, {}, counter);
    PhaseTwoResult two = phase_two(sorted.r_low(), sorted.r_up(), one.c, {}, counter);
    const BipartiteGraph in_sorted_order = ryser_realize(two.r, one.c, counter);

    // relabel once, back to the caller's vertex order
    std::vector<std::size_t> rows(two.row_order.size());
    std::vector<std::size_t> cols(one.column_order.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        rows[k] = sorted.row_perm().inverse[two.row_order[k]];
    }
    for (std::size_t k = 0; k < cols.size(); ++k) {
        cols[k] = sorted.col_perm().inverse[one.column_order[k]];
    }
    std::vector<Edge> edges;
    edges.reserve(in_sorted_order.edge_count());
    for (std::size_t u = 0; u < in_sorted_order.n1(); ++u) {
        for (std::size_t v : in_sorted_order.neighbors(u)) {
            edges.emplace_back(rows[u], cols[v]);
        }
    }
    if (counter) {
        counter->setup += rows.size() + cols.size();
        counter->edge_moves += edges.size();
    }

    RealizationReport report;
    report.graph = BipartiteGraph::from_edges(raw.n1, raw.n2, edges);
    report.delta1 = one.delta1;
    report.delta2 = two.delta2;
    report.final_r = DegreeVector(relabel(two.r, rows));
    report.final_c = DegreeVector(relabel(one.c, cols));
    return report;
}

RealizationReport realize_edge_maximal(const IntervalInstance& raw) {
    // report failures against the caller's bounds, not the complementary ones
    require_realizable(validate_and_normalize(raw));

    const IntervalInstance flipped = complementary_instance(clamp_bounds(raw));
    RealizationReport report = realize_edge_minimal(flipped);
    report.graph = complement(report.graph);
    auto [du, dv] = degrees(report.graph);
    report.final_r = std::move(du);
    report.final_c = std::move(dv);
    return report;
}

}
