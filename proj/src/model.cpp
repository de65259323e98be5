#include "bireal/model.hpp"

#include <algorithm>
#include <string>

namespace bireal {

namespace {

void check_side(const std::vector<degree_t>& low, const std::vector<degree_t>& up, std::size_t n,
                const char* name) {
    const std::string side(name);
    if (low.size() != n || up.size() != n) {
        throw InvalidInstance(side + " bounds must have length " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (low[i] < 0 || up[i] < 0) {
            throw InvalidInstance(side + " bound at position " + std::to_string(i + 1) +
                                  " is negative");
        }
        if (low[i] > up[i]) {
            throw InvalidInstance(side + " interval at position " + std::to_string(i + 1) +
                                  " is inverted (" + std::to_string(low[i]) + " > " +
                                  std::to_string(up[i]) + ")");
        }
    }
}

std::vector<degree_t> clamped(const std::vector<degree_t>& up, std::size_t limit) {
    std::vector<degree_t> out(up);
    for (degree_t& x : out) {
        x = std::min(x, static_cast<degree_t>(limit));
    }
    return out;
}

}

SortedInstance SortedInstance::transposed() const {
    SortedInstance t;
    t.n1_ = n2_;
    t.n2_ = n1_;
    t.r_low_ = c_low_;
    t.r_up_ = c_up_;
    t.c_low_ = r_low_;
    t.c_up_ = r_up_;
    t.row_perm_ = col_perm_;
    t.col_perm_ = row_perm_;
    return t;
}

IntervalInstance SortedInstance::instance() const {
    return {n1_, n2_, r_low_.values(), r_up_.values(), c_low_.values(), c_up_.values()};
}

IntervalInstance clamp_bounds(const IntervalInstance& raw) {
    check_side(raw.r_low, raw.r_up, raw.n1, "row");
    check_side(raw.c_low, raw.c_up, raw.n2, "column");
    IntervalInstance out = raw;
    out.r_up = clamped(raw.r_up, raw.n2);
    out.c_up = clamped(raw.c_up, raw.n1);
    return out;
}

SortedInstance validate_and_normalize(const IntervalInstance& raw) {
    IntervalInstance inst = clamp_bounds(raw);
    auto rows = sort_pairs_descending(DegreeVector(std::move(inst.r_low)),
                                      DegreeVector(std::move(inst.r_up)));
    auto cols = sort_pairs_descending(DegreeVector(std::move(inst.c_low)),
                                      DegreeVector(std::move(inst.c_up)));
    SortedInstance s;
    s.n1_ = raw.n1;
    s.n2_ = raw.n2;
    s.r_low_ = std::move(rows.low);
    s.r_up_ = std::move(rows.up);
    s.row_perm_ = std::move(rows.permutation);
    s.c_low_ = std::move(cols.low);
    s.c_up_ = std::move(cols.up);
    s.col_perm_ = std::move(cols.permutation);
    return s;
}

BipartiteGraph::BipartiteGraph(std::size_t n1, std::size_t n2) : n2_(n2), adjacency_(n1) {}

BipartiteGraph BipartiteGraph::from_edges(std::size_t n1, std::size_t n2,
                                          std::span<const Edge> edges) {
    // bucket by v, then redistribute to rows in v order: rows come out sorted
    std::vector<std::size_t> col_start(n2 + 1, 0);
    for (const auto& [u, v] : edges) {
        if (u >= n1 || v >= n2) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        ++col_start[v + 1];
    }
    for (std::size_t v = 0; v < n2; ++v) {
        col_start[v + 1] += col_start[v];
    }
    std::vector<std::size_t> by_col(edges.size());
    for (const auto& [u, v] : edges) {
        by_col[col_start[v]++] = u;
    }

    BipartiteGraph g(n1, n2);
    std::size_t k = 0;
    for (std::size_t v = 0; v < n2; ++v) {
        for (; k < col_start[v]; ++k) {
            auto& row = g.adjacency_[by_col[k]];
            if (!row.empty() && row.back() == v) {
                throw std::invalid_argument("duplicate edge (" + std::to_string(by_col[k] + 1) +
                                            ", " + std::to_string(v + 1) + ")");
            }
            row.push_back(v);
        }
    }
    g.edge_count_ = edges.size();
    return g;
}

bool BipartiteGraph::has_edge(std::size_t u, std::size_t v) const {
    const auto& row = adjacency_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> BipartiteGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < adjacency_.size(); ++u) {
        for (std::size_t v : adjacency_[u]) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::pair<DegreeVector, DegreeVector> degrees(const BipartiteGraph& g) {
    std::vector<degree_t> du(g.n1(), 0);
    std::vector<degree_t> dv(g.n2(), 0);
    for (std::size_t u = 0; u < g.n1(); ++u) {
        du[u] = static_cast<degree_t>(g.neighbors(u).size());
        for (std::size_t v : g.neighbors(u)) {
            ++dv[v];
        }
    }
    return {DegreeVector(std::move(du)), DegreeVector(std::move(dv))};
}

bool verify_realization(const BipartiteGraph& g, const IntervalInstance& inst) {
    if (g.n1() != inst.n1 || g.n2() != inst.n2 || inst.r_low.size() != inst.n1 ||
        inst.r_up.size() != inst.n1 || inst.c_low.size() != inst.n2 ||
        inst.c_up.size() != inst.n2) {
        throw std::invalid_argument("graph and instance sizes disagree");
    }
    const auto [du, dv] = degrees(g);
    for (std::size_t i = 0; i < inst.n1; ++i) {
        if (du[i] < inst.r_low[i] || du[i] > inst.r_up[i]) {
            return false;
        }
    }
    for (std::size_t j = 0; j < inst.n2; ++j) {
        if (dv[j] < inst.c_low[j] || dv[j] > inst.c_up[j]) {
            return false;
        }
    }
    return true;
}

BipartiteGraph complement(const BipartiteGraph& g) {
    std::vector<Edge> out;
    out.reserve(g.n1() * g.n2() - g.edge_count());
    for (std::size_t u = 0; u < g.n1(); ++u) {
        auto row = g.neighbors(u);
        std::size_t k = 0;
        for (std::size_t v = 0; v < g.n2(); ++v) {
            if (k < row.size() && row[k] == v) {
                ++k;
            } else {
                out.emplace_back(u, v);
            }
        }
    }
    return BipartiteGraph::from_edges(g.n1(), g.n2(), out);
}

IntervalInstance complementary_instance(const IntervalInstance& inst) {
    check_side(inst.r_low, inst.r_up, inst.n1, "row");
    check_side(inst.c_low, inst.c_up, inst.n2, "column");
    const auto flip = [](const std::vector<degree_t>& bound, std::size_t n) {
        std::vector<degree_t> out(bound.size());
        for (std::size_t i = 0; i < bound.size(); ++i) {
            out[i] = static_cast<degree_t>(n) - bound[i];
            if (out[i] < 0) {
                throw InvalidInstance("complement needs bounds within the opposite part size");
            }
        }
        return out;
    };
    IntervalInstance out;
    out.n1 = inst.n1;
    out.n2 = inst.n2;
    out.r_low = flip(inst.r_up, inst.n2);
    out.r_up = flip(inst.r_low, inst.n2);
    out.c_low = flip(inst.c_up, inst.n1);
    out.c_up = flip(inst.c_low, inst.n1);
    return out;
}

}
