#ifndef bireal_realizability_hpp
#define bireal_realizability_hpp

#include <cstddef>
#include <optional>

#include "bireal/model.hpp"
#include "bireal/vectors.hpp"

namespace bireal {

enum class Side {
    Rows,     // r_low is not dominated by conjugate(c_up)
    Columns,  // c_low is not dominated by conjugate(r_up)
};

/// The smallest prefix at which a dominance condition of a sorted instance
/// fails: lower_sum > upper_sum over the first `prefix` entries (1-based).
struct DominanceViolation {
    Side side = Side::Rows;
    std::size_t prefix = 0;
    degree_t lower_sum = 0;
    degree_t upper_sum = 0;

    friend bool operator==(const DominanceViolation&, const DominanceViolation&) = default;
};

/// Exact degree pair test. r must be non-increasing (std::invalid_argument
/// otherwise); c may be in any order. O(|r| + |c|).
bool is_bigraphical(const DegreeVector& r, const DegreeVector& c);

/// Interval realizability of a normalized instance. O(n1 + n2).
bool is_realizable(const SortedInstance& inst);

/// nullopt iff inst is realizable; rows are checked before columns.
std::optional<DominanceViolation> find_violation(const SortedInstance& inst);

}

#endif /* bireal_realizability_hpp */
