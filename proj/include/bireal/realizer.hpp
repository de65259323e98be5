#ifndef bireal_realizer_hpp
#define bireal_realizer_hpp

#include <stdexcept>

#include "bireal/interval_solver.hpp"
#include "bireal/model.hpp"
#include "bireal/realizability.hpp"

namespace bireal {

/// Thrown when no bipartite graph satisfies the bounds. The certificate
/// refers to the sorted order of the lower bounds.
class NotRealizable : public std::runtime_error {
public:
    explicit NotRealizable(DominanceViolation certificate);
    const DominanceViolation& certificate() const { return certificate_; }

private:
    DominanceViolation certificate_;
};

struct RealizationReport {
    BipartiteGraph graph;  // original vertex order
    degree_t delta1 = 0;
    degree_t delta2 = 0;
    DegreeVector final_r;  // degrees of the graph, original order
    DegreeVector final_c;
};

/// A realization with the fewest possible edges, namely sum(c_low) + delta1.
/// Throws InvalidInstance or NotRealizable.
RealizationReport realize_edge_minimal(const IntervalInstance& raw, OpCounter* counter = nullptr);

/// A realization with the most possible edges: the complement of an
/// edge-minimal realization of the complementary bounds. delta1 and delta2
/// are those of the complementary run.
RealizationReport realize_edge_maximal(const IntervalInstance& raw);

}

#endif /* bireal_realizer_hpp */
