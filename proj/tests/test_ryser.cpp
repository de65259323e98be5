#include <doctest.h>

#include <algorithm>
#include <random>

#include "bireal/realizability.hpp"
#include "bireal/ryser.hpp"
#include "test_support.hpp"

using namespace bireal;
using namespace bireal::testing;

TEST_SUITE_BEGIN("ryser");

TEST_CASE("ryser_realize examples") {
    const BipartiteGraph g = ryser_realize({4, 1, 1}, {2, 2, 1, 1, 0});
    CHECK(g.edge_count() == 6);
    const auto [r, c] = degrees(g);
    CHECK(r == DegreeVector{4, 1, 1});
    CHECK(c == DegreeVector{2, 2, 1, 1, 0});

    CHECK(ryser_realize({0, 0}, {0}).edge_count() == 0);
    CHECK(ryser_realize({2, 2}, {2, 2}) == complement(BipartiteGraph(2, 2)));
    CHECK(ryser_realize({}, {}).edge_count() == 0);
}

TEST_CASE("ryser_realize rejects pairs that are not bi-graphical") {
    CHECK_THROWS_AS(ryser_realize({2}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ryser_realize({1, 2}, {2, 1}), std::invalid_argument);
}

TEST_CASE("ties go to the first column in capacity order") {
    // all columns equal: row 1 takes columns 1 and 2
    const BipartiteGraph g = ryser_realize({2, 1}, {1, 1, 1});
    CHECK(g.edges() == std::vector<Edge>{{0, 0}, {0, 1}, {1, 2}});
}

TEST_CASE("ryser_realize on random bi-graphical pairs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 400; ++trial) {
        const std::size_t n1 = 1 + rng() % 12;
        const std::size_t n2 = 1 + rng() % 12;
        const BipartiteGraph planted = random_graph(rng, n1, n2, 0.3 + 0.4 * (trial % 2));
        auto [r, c] = degrees(planted);
        std::vector<degree_t> rs = r.values();
        std::sort(rs.rbegin(), rs.rend());
        const DegreeVector rsorted(rs);

        OpCounter counter;
        const BipartiteGraph g = ryser_realize(rsorted, c, &counter);
        const auto [gr, gc] = degrees(g);
        CHECK(gr == rsorted);
        CHECK(gc == c);
        CHECK(ryser_realize(rsorted, c) == g);
        // setup plus one unit per edge and per row, with slack
        CHECK(counter.total() <= 4 * (n1 + n2 + g.edge_count() + 1));
    }
}

TEST_SUITE_END();
