#ifndef bireal_interval_solver_hpp
#define bireal_interval_solver_hpp

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "bireal/model.hpp"
#include "bireal/vectors.hpp"

namespace bireal {

/// Elementary-operation tallies, used to check the linear-time bound.
struct OpCounter {
    std::uint64_t setup = 0;         // table and array initialisation slots
    std::uint64_t cursor_moves = 0;  // decrements of the right-most cursor
    std::uint64_t increments = 0;    // outer iterations of either phase
    std::uint64_t edge_moves = 0;    // residual updates while building the graph

    std::uint64_t total() const { return setup + cursor_moves + increments + edge_moves; }
};

/// For each degree value v, the left-most position holding v in a
/// non-increasing vector. An increment at position j from v to v+1 only
/// touches the entries for v and v+1.
class LeftmostIndex {
public:
    LeftmostIndex(std::span<const degree_t> values, degree_t max_value);

    /// Meaningful only for values present in the tracked vector.
    std::size_t position_of(degree_t value) const { return first_[static_cast<std::size_t>(value)]; }

    /// `values` is the vector after values[j] was raised by one.
    void record_increment(std::span<const degree_t> values, std::size_t j);

private:
    std::vector<std::size_t> first_;
};

/// State after one outer iteration. Positions are 0-based.
struct PhaseStep {
    std::size_t iteration = 0;  // 1-based
    std::size_t cursor = 0;     // right-most position with value < upper bound
    std::size_t target = 0;     // left-most position with the cursor's value
    std::span<const degree_t> values;
    std::span<const degree_t> upper;
    const LeftmostIndex* index = nullptr;
};

using StepObserver = std::function<void(const PhaseStep&)>;

struct PhaseOneResult {
    DegreeVector c;              // column degrees, non-increasing
    DegreeVector c_up_permuted;  // upper bounds after the swaps
    std::vector<std::size_t> column_order;  // sorted column index now at each position
    degree_t delta1 = 0;
};

struct PhaseTwoResult {
    DegreeVector r;  // row degrees, non-increasing
    std::vector<std::size_t> row_order;  // sorted row index now at each position
    degree_t delta2 = 0;
};

/// Number of unit increments the lower column bounds need before the row
/// lower bounds are dominated by their conjugate; never negative.
degree_t compute_delta1(const DegreeVector& r_low, const DegreeVector& c_low, std::size_t n1);

/// Raises the column lower bounds of a realizable instance to a degree
/// vector c such that (r_low, r_up, c, c) is realizable, using exactly
/// delta1 increments.
PhaseOneResult phase_one(const SortedInstance& inst, const StepObserver& observer = {},
                         OpCounter* counter = nullptr);

degree_t compute_delta2(const DegreeVector& c, const DegreeVector& r_low);

/// Raises r_low towards r_up until (r, c) is bi-graphical. Requires
/// (r_low, r_up, c, c) realizable with r_low and c non-increasing.
PhaseTwoResult phase_two(const DegreeVector& r_low, const DegreeVector& r_up,
                         const DegreeVector& c, const StepObserver& observer = {},
                         OpCounter* counter = nullptr);

}

#endif /* bireal_interval_solver_hpp */
