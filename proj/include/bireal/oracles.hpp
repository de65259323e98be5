#ifndef bireal_oracles_hpp
#define bireal_oracles_hpp

#include <cstddef>
#include <optional>

#include "bireal/model.hpp"

namespace bireal {

/// Reference realizer through a flow network with lower bounds:
/// s -> u_i in [r_low_i, r_up_i], u_i -> v_j in [0, 1], v_j -> t in
/// [c_low_j, c_up_j]. The lower bounds are removed by the usual
/// excess/deficit transformation and a feasible circulation is found with a
/// max-flow computation. Returns nullopt when no realization exists.
/// Throws InvalidInstance on invalid bounds. Cost is polynomial, not linear.
std::optional<BipartiteGraph> flow_realize(const IntervalInstance& inst);

struct BruteForceSummary {
    bool exists = false;
    std::size_t min_edges = 0;  // meaningful only if exists
    std::size_t max_edges = 0;
};

inline constexpr std::size_t kBruteForceMaxPairs = 20;

/// Tries every subset of U x V. Throws std::invalid_argument when
/// n1 * n2 > kBruteForceMaxPairs.
BruteForceSummary brute_force_realizations(const IntervalInstance& inst);

}

#endif /* bireal_oracles_hpp */
