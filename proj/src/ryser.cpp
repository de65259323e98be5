#include "bireal/ryser.hpp"

#include <stdexcept>
#include <utility>

#include "bireal/realizability.hpp"

namespace bireal {

namespace {

// Columns ordered by residual capacity, non-increasing, with the last
// position of every capacity group.
class ResidualBuckets {
public:
    ResidualBuckets(const DegreeVector& c, std::size_t max_capacity)
        : order_(c.size()), residual_(c.size()), group_end_(max_capacity + 1, 0) {
        // stable counting sort, descending by capacity
        std::vector<std::size_t> start(max_capacity + 2, 0);
        for (degree_t x : c) {
            ++start[max_capacity - static_cast<std::size_t>(x) + 1];
        }
        for (std::size_t k = 1; k < start.size(); ++k) {
            start[k] += start[k - 1];
        }
        for (std::size_t j = 0; j < c.size(); ++j) {
            const std::size_t p = start[max_capacity - static_cast<std::size_t>(c[j])]++;
            order_[p] = j;
            residual_[p] = c[j];
        }
        for (std::size_t p = 0; p < residual_.size(); ++p) {
            group_end_[static_cast<std::size_t>(residual_[p])] = p;
        }
    }

    std::size_t column_at(std::size_t p) const { return order_[p]; }
    degree_t residual_at(std::size_t p) const { return residual_[p]; }

    // Lowers the capacity of the column at position p by one and returns it.
    // Positions left of p with the same capacity must not be lowered later
    // in the same round than p (callers walk positions right to left).
    std::size_t take(std::size_t p) {
        const degree_t v = residual_[p];
        const std::size_t e = group_end_[static_cast<std::size_t>(v)];
        const std::size_t column = order_[p];
        std::swap(order_[p], order_[e]);
        residual_[e] = v - 1;
        if (e > 0 && residual_[e - 1] == v) {
            group_end_[static_cast<std::size_t>(v)] = e - 1;
        }
        // e is the new end of group v-1 unless that group already extends past e
        if (e + 1 == residual_.size() || residual_[e + 1] != v - 1) {
            group_end_[static_cast<std::size_t>(v - 1)] = e;
        }
        return column;
    }

private:
    std::vector<std::size_t> order_;
    std::vector<degree_t> residual_;
    std::vector<std::size_t> group_end_;
};

}

BipartiteGraph ryser_realize(const DegreeVector& r, const DegreeVector& c, OpCounter* counter) {
    if (!is_bigraphical(r, c)) {
        throw std::invalid_argument("degree pair is not bi-graphical");
    }
    const std::size_t n1 = r.size();
    const std::size_t n2 = c.size();
    // bi-graphical implies every column capacity is at most n1
    ResidualBuckets buckets(c, n1);
    if (counter) {
        counter->setup += 2 * n2 + n1 + 2;
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(r.total()));
    for (std::size_t u = 0; u < n1; ++u) {
        const auto want = static_cast<std::size_t>(r[u]);
        for (std::size_t p = want; p-- > 0;) {
            if (buckets.residual_at(p) <= 0) {
                throw std::logic_error("ran out of column capacity");
            }
            edges.emplace_back(u, buckets.take(p));
        }
        if (counter) {
            counter->edge_moves += want + 1;
        }
    }
    return BipartiteGraph::from_edges(n1, n2, edges);
}

}
