#include <doctest.h>

#include <algorithm>
#include <random>

#include "bireal/interval_solver.hpp"
#include "bireal/realizability.hpp"
#include "test_support.hpp"

using namespace bireal;
using namespace bireal::testing;

namespace {

std::vector<degree_t> copy_of(std::span<const degree_t> s) { return {s.begin(), s.end()}; }

bool realizable_with(const SortedInstance& base, std::span<const degree_t> c_low,
                     std::span<const degree_t> c_up) {
    IntervalInstance inst = base.instance();
    inst.c_low = copy_of(c_low);
    inst.c_up = copy_of(c_up);
    return is_realizable(validate_and_normalize(inst));
}

std::size_t leftmost_by_scan(std::span<const degree_t> values, degree_t v) {
    return static_cast<std::size_t>(std::find(values.begin(), values.end(), v) - values.begin());
}

}

TEST_SUITE_BEGIN("interval_solver");

TEST_CASE("compute_delta1") {
    CHECK(compute_delta1({4, 1, 0}, {2, 2, 0, 0, 0}, 3) == 2);
    CHECK(compute_delta1({1, 0}, {1, 0, 0}, 2) == 0);
    CHECK(compute_delta1({0, 0, 0}, {0, 0}, 3) == 0);
    // negative raw deficit is clamped
    CHECK(compute_delta1({1}, {1, 1, 1}, 1) == 0);
    CHECK_THROWS_AS(compute_delta1({0, 1}, {1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(compute_delta1({1}, {1}, 2), std::invalid_argument);
}

TEST_CASE("phase one on the worked example") {
    const SortedInstance inst = validate_and_normalize(worked_example());
    std::vector<std::pair<std::vector<degree_t>, std::vector<degree_t>>> states;
    std::vector<std::pair<std::size_t, std::size_t>> moves;
    const PhaseOneResult one = phase_one(inst, [&](const PhaseStep& step) {
        states.emplace_back(copy_of(step.values), copy_of(step.upper));
        moves.emplace_back(step.cursor, step.target);
    });

    CHECK(one.delta1 == 2);
    REQUIRE(states.size() == 2);
    CHECK(states[0].first == std::vector<degree_t>{2, 2, 1, 0, 0});
    CHECK(states[0].second == std::vector<degree_t>{2, 3, 2, 2, 1});
    CHECK(states[1].first == std::vector<degree_t>{2, 2, 1, 1, 0});
    CHECK(states[1].second == std::vector<degree_t>{2, 3, 2, 1, 2});
    // 1-based (i, j) = (5, 3) then (5, 4)
    CHECK(moves == std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {4, 3}});
    CHECK(one.c == DegreeVector{2, 2, 1, 1, 0});
    CHECK(one.c_up_permuted == DegreeVector{2, 3, 2, 1, 2});
    CHECK(one.column_order == std::vector<std::size_t>{0, 1, 4, 2, 3});
}

TEST_CASE("phase one without work") {
    const SortedInstance inst = validate_and_normalize({2, 3, {1, 0}, {2, 2}, {2, 1, 0}, {2, 2, 1}});
    const PhaseOneResult one = phase_one(inst);
    CHECK(one.delta1 == 0);
    CHECK(one.c == inst.c_low());
    CHECK(one.c_up_permuted == inst.c_up());
}

TEST_CASE("compute_delta2") {
    CHECK(compute_delta2({2, 2, 1, 1, 0}, {4, 1, 0}) == 1);
    CHECK(compute_delta2({1, 1}, {2, 0}) == 0);
    CHECK_THROWS_AS(compute_delta2({1}, {2}), std::logic_error);
}

TEST_CASE("phase two") {
    SUBCASE("worked example") {
        std::vector<std::size_t> targets;
        const PhaseTwoResult two = phase_two({4, 1, 0}, {4, 2, 3}, {2, 2, 1, 1, 0},
                                             [&](const PhaseStep& step) {
                                                 // the degenerate swap of position 3 with itself
                                                 CHECK(step.cursor == 2);
                                                 targets.push_back(step.target);
                                                 CHECK(copy_of(step.upper) == std::vector<degree_t>{4, 2, 3});
                                             });
        CHECK(two.delta2 == 1);
        CHECK(two.r == DegreeVector{4, 1, 1});
        CHECK(targets == std::vector<std::size_t>{2});
        CHECK(two.row_order == std::vector<std::size_t>{0, 1, 2});
    }
    SUBCASE("no work") {
        const PhaseTwoResult two = phase_two({2, 1}, {3, 3}, {1, 1, 1});
        CHECK(two.delta2 == 0);
        CHECK(two.r == DegreeVector{2, 1});
    }
    SUBCASE("every unit goes to the lowest rows in turn") {
        const PhaseTwoResult two = phase_two({0, 0}, {1, 1}, {2});
        CHECK(two.delta2 == 2);
        CHECK(two.r == DegreeVector{1, 1});
    }
    SUBCASE("precondition failures") {
        CHECK_THROWS_AS(phase_two({0, 0}, {0, 0}, {1}), std::logic_error);
        CHECK_THROWS_AS(phase_two({0, 1}, {1, 1}, {2}), std::invalid_argument);
    }
}

TEST_CASE("LeftmostIndex tracks increments") {
    std::vector<degree_t> values{3, 3, 2, 2, 2, 0, 0};
    LeftmostIndex index(values, 4);
    CHECK(index.position_of(3) == 0);
    CHECK(index.position_of(2) == 2);
    CHECK(index.position_of(0) == 5);
    ++values[2];
    index.record_increment(values, 2);
    CHECK(index.position_of(3) == 0);
    CHECK(index.position_of(2) == 3);
    ++values[5];
    index.record_increment(values, 5);
    CHECK(index.position_of(1) == 5);
    CHECK(index.position_of(0) == 6);
    ++values[0];
    index.record_increment(values, 0);
    CHECK(index.position_of(4) == 0);
    CHECK(index.position_of(3) == 1);
}

TEST_CASE("phase invariants on random realizable instances") {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const SortedInstance inst = validate_and_normalize(random_instance(rng, 7, 6));
        if (!is_realizable(inst)) {
            continue;
        }
        ++checked;
        std::size_t last_cursor = inst.n2();
        bool invariants_hold = true;
        OpCounter counter;
        const PhaseOneResult one = phase_one(
            inst,
            [&](const PhaseStep& step) {
                // non-increasing, bounded by the swapped uppers, still realizable
                invariants_hold = invariants_hold && is_non_increasing(step.values);
                for (std::size_t k = 0; k < step.values.size(); ++k) {
                    invariants_hold = invariants_hold && step.values[k] <= step.upper[k];
                }
                invariants_hold = invariants_hold && realizable_with(inst, step.values, step.upper);
                // monotone cursor
                invariants_hold = invariants_hold && step.cursor <= last_cursor;
                last_cursor = step.cursor;
                // table agrees with a scan for every value present
                for (degree_t v : step.values) {
                    invariants_hold = invariants_hold &&
                                      step.index->position_of(v) == leftmost_by_scan(step.values, v);
                }
            },
            &counter);
        CHECK(invariants_hold);
        CHECK(counter.cursor_moves < std::max<std::size_t>(inst.n2(), 1));
        CHECK(counter.increments == static_cast<std::uint64_t>(one.delta1));

        CHECK(one.c.total() == inst.c_low().total() + one.delta1);
        CHECK(is_non_increasing(one.c));
        CHECK(realizable_with(inst, one.c.entries(), one.c.entries()));
        for (std::size_t k = 0; k < one.c.size(); ++k) {
            CHECK(inst.c_low()[k] <= one.c[k]);
            CHECK(one.c[k] <= one.c_up_permuted[k]);
        }
        // each position carries the upper bound of the vertex now there
        for (std::size_t k = 0; k < one.c.size(); ++k) {
            CHECK(one.c_up_permuted[k] == inst.c_up()[one.column_order[k]]);
            CHECK(inst.c_low()[one.column_order[k]] <= one.c[k]);
        }

        const PhaseTwoResult two = phase_two(inst.r_low(), inst.r_up(), one.c);
        CHECK(is_bigraphical(two.r, one.c));
        CHECK(two.r.total() == one.c.total());
        CHECK(two.r.total() == inst.r_low().total() + two.delta2);
        for (std::size_t k = 0; k < two.r.size(); ++k) {
            CHECK(inst.r_low()[k] <= two.r[k]);
        }
    }
    CHECK(checked > 200);
}

TEST_SUITE_END();
