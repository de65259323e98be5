#include "bireal/interval_solver.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace bireal {

LeftmostIndex::LeftmostIndex(std::span<const degree_t> values, degree_t max_value)
    : first_(static_cast<std::size_t>(max_value) + 2, 0) {
    for (std::size_t k = values.size(); k-- > 0;) {
        first_[static_cast<std::size_t>(values[k])] = k;
    }
}

void LeftmostIndex::record_increment(std::span<const degree_t> values, std::size_t j) {
    const auto raised = static_cast<std::size_t>(values[j]);
    // j was the left-most position of raised-1, so its right neighbour is the
    // new left-most one if it still holds that value
    if (j + 1 < values.size() && values[j + 1] == values[j] - 1) {
        first_[raised - 1] = j + 1;
    }
    if (j == 0 || values[j - 1] != values[j]) {
        first_[raised] = j;
    }
}

namespace {

struct Raised {
    std::vector<degree_t> values;
    std::vector<degree_t> upper;
    std::vector<std::size_t> order;
};

// Starting from `low`, performs `steps` iterations of: move the cursor left
// past saturated positions, swap the cursor's upper bound with the upper
// bound of the left-most position sharing the cursor's value, raise that
// position by one. Swapping upper bounds of two equal values exchanges the
// two vertices, which `order` records.
Raised raise_lower_bounds(const DegreeVector& low, const DegreeVector& up, degree_t steps,
                          const StepObserver& observer, OpCounter* counter) {
    if (low.size() != up.size()) {
        throw std::invalid_argument("bound vectors must have equal length");
    }
    if (!is_non_increasing(low)) {
        throw std::invalid_argument("lower bounds must be non-increasing");
    }
    for (std::size_t k = 0; k < low.size(); ++k) {
        if (low[k] > up[k]) {
            throw std::logic_error("lower bound exceeds upper bound; instance is not realizable");
        }
    }

    Raised state{low.values(), up.values(), std::vector<std::size_t>(low.size())};
    std::iota(state.order.begin(), state.order.end(), std::size_t{0});
    auto& values = state.values;
    auto& upper = state.upper;
    const degree_t max_value = up.max_entry();
    LeftmostIndex index(values, max_value);
    if (counter) {
        counter->setup += 2 * values.size() + static_cast<std::uint64_t>(max_value) + 2;
    }

    if (steps > 0 && values.empty()) {
        throw std::logic_error("no position left to raise; instance is not realizable");
    }
    std::size_t cursor = values.empty() ? 0 : values.size() - 1;
    for (degree_t k = 1; k <= steps; ++k) {
        while (values[cursor] == upper[cursor]) {
            if (cursor == 0) {
                throw std::logic_error("no position left to raise; instance is not realizable");
            }
            --cursor;
            if (counter) {
                ++counter->cursor_moves;
            }
        }
        const std::size_t target = index.position_of(values[cursor]);
        std::swap(upper[cursor], upper[target]);
        std::swap(state.order[cursor], state.order[target]);
        ++values[target];
        index.record_increment(values, target);
        if (counter) {
            ++counter->increments;
        }
        if (observer) {
            observer(PhaseStep{static_cast<std::size_t>(k), cursor, target, values, upper, &index});
        }
    }
    return state;
}

}

degree_t compute_delta1(const DegreeVector& r_low, const DegreeVector& c_low, std::size_t n1) {
    if (r_low.size() != n1) {
        throw std::invalid_argument("r_low must have length n1");
    }
    if (!is_non_increasing(r_low)) {
        throw std::invalid_argument("r_low must be non-increasing");
    }
    const DegreeVector conj = conjugate(c_low, n1);
    degree_t deficit = 0;
    degree_t row_sum = 0;
    degree_t conj_sum = 0;
    for (std::size_t j = 0; j < n1; ++j) {
        row_sum += r_low[j];
        conj_sum += conj[j];
        deficit = std::max(deficit, row_sum - conj_sum);
    }
    return deficit;
}

PhaseOneResult phase_one(const SortedInstance& inst, const StepObserver& observer,
                         OpCounter* counter) {
    const degree_t delta1 = compute_delta1(inst.r_low(), inst.c_low(), inst.n1());
    Raised raised = raise_lower_bounds(inst.c_low(), inst.c_up(), delta1, observer, counter);
    return {DegreeVector(std::move(raised.values)), DegreeVector(std::move(raised.upper)),
            std::move(raised.order), delta1};
}

degree_t compute_delta2(const DegreeVector& c, const DegreeVector& r_low) {
    const degree_t gap = c.total() - r_low.total();
    if (gap < 0) {
        throw std::logic_error("column degrees sum below the row lower bounds");
    }
    return gap;
}

PhaseTwoResult phase_two(const DegreeVector& r_low, const DegreeVector& r_up,
                         const DegreeVector& c, const StepObserver& observer,
                         OpCounter* counter) {
    const degree_t delta2 = compute_delta2(c, r_low);
    Raised raised = raise_lower_bounds(r_low, r_up, delta2, observer, counter);
    return {DegreeVector(std::move(raised.values)), std::move(raised.order), delta2};
}

}
