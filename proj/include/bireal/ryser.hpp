#ifndef bireal_ryser_hpp
#define bireal_ryser_hpp

#include "bireal/interval_solver.hpp"
#include "bireal/model.hpp"
#include "bireal/vectors.hpp"

namespace bireal {

/// Builds a simple bipartite graph with row degrees r and column degrees c.
///
/// Rows are processed in order; row i is joined to the r[i] columns of
/// largest remaining capacity. Columns are kept in one array ordered by
/// remaining capacity (non-increasing), so taking the largest r[i] is a
/// prefix, and each unit decrement moves a column to the end of its
/// capacity group in O(1). Ties among equal capacities go to the column
/// currently placed first, which at the start is the lowest index.
///
/// Throws std::invalid_argument unless is_bigraphical(r, c).
/// Work is O(|r| + |c| + sum(r)) and the output is deterministic.
BipartiteGraph ryser_realize(const DegreeVector& r, const DegreeVector& c,
                             OpCounter* counter = nullptr);

}

#endif /* bireal_ryser_hpp */
