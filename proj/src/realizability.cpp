#include "bireal/realizability.hpp"

#include <stdexcept>

namespace bireal {

namespace {

std::optional<DominanceViolation> first_violation(const DegreeVector& lower,
                                                  const DegreeVector& upper, Side side) {
    degree_t lower_sum = 0;
    degree_t upper_sum = 0;
    for (std::size_t k = 0; k < lower.size(); ++k) {
        lower_sum += lower[k];
        upper_sum += upper[k];
        if (lower_sum > upper_sum) {
            return DominanceViolation{side, k + 1, lower_sum, upper_sum};
        }
    }
    return std::nullopt;
}

}

bool is_bigraphical(const DegreeVector& r, const DegreeVector& c) {
    if (!is_non_increasing(r)) {
        throw std::invalid_argument("is_bigraphical requires a non-increasing row vector");
    }
    if (r.total() != c.total()) {
        return false;
    }
    return dominates(r, conjugate(c, r.size()));
}

std::optional<DominanceViolation> find_violation(const SortedInstance& inst) {
    if (auto v = first_violation(inst.r_low(), conjugate(inst.c_up(), inst.n1()), Side::Rows)) {
        return v;
    }
    return first_violation(inst.c_low(), conjugate(inst.r_up(), inst.n2()), Side::Columns);
}

bool is_realizable(const SortedInstance& inst) {
    return !find_violation(inst).has_value();
}

}
