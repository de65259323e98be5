#ifndef bireal_model_hpp
#define bireal_model_hpp

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bireal/vectors.hpp"

namespace bireal {

class InvalidInstance : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Degree intervals [r_low[i], r_up[i]] for the vertices of U and
/// [c_low[j], c_up[j]] for the vertices of V, as given by the user.
/// Entries may be invalid until passed through validate_and_normalize.
struct IntervalInstance {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::vector<degree_t> r_low;
    std::vector<degree_t> r_up;
    std::vector<degree_t> c_low;
    std::vector<degree_t> c_up;

    friend bool operator==(const IntervalInstance&, const IntervalInstance&) = default;
};

/// An instance with both lower-bound vectors non-increasing and every upper
/// bound clamped to the size of the opposite part. Only produced by
/// validate_and_normalize (and transposed()).
///
/// A lower bound may exceed its clamped upper bound when it exceeds the
/// partner part size; such instances are never realizable.
class SortedInstance {
public:
    std::size_t n1() const { return n1_; }
    std::size_t n2() const { return n2_; }
    const DegreeVector& r_low() const { return r_low_; }
    const DegreeVector& r_up() const { return r_up_; }
    const DegreeVector& c_low() const { return c_low_; }
    const DegreeVector& c_up() const { return c_up_; }
    const SortPermutation& row_perm() const { return row_perm_; }
    const SortPermutation& col_perm() const { return col_perm_; }

    // swaps the roles of U and V
    SortedInstance transposed() const;
    // bounds in sorted order, as a plain instance
    IntervalInstance instance() const;

private:
    friend SortedInstance validate_and_normalize(const IntervalInstance& raw);
    SortedInstance() = default;

    std::size_t n1_ = 0;
    std::size_t n2_ = 0;
    DegreeVector r_low_, r_up_, c_low_, c_up_;
    SortPermutation row_perm_, col_perm_;
};

/// Rejects negative entries, inverted intervals and length mismatches
/// (InvalidInstance); clamps upper bounds; sorts both bound pairs by lower
/// bound, descending and stable.
SortedInstance validate_and_normalize(const IntervalInstance& raw);

/// Validated copy of raw in original order with upper bounds clamped to the
/// opposite part size.
IntervalInstance clamp_bounds(const IntervalInstance& raw);

using Edge = std::pair<std::size_t, std::size_t>;  // (u, v), 0-based

/// Simple bipartite graph on U = {0..n1-1}, V = {0..n2-1} stored as sorted
/// adjacency lists of U.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    BipartiteGraph(std::size_t n1, std::size_t n2);

    /// Linear-time construction from an unordered edge list. Throws
    /// std::invalid_argument on out-of-range endpoints or duplicate edges.
    static BipartiteGraph from_edges(std::size_t n1, std::size_t n2, std::span<const Edge> edges);

    std::size_t n1() const { return adjacency_.size(); }
    std::size_t n2() const { return n2_; }
    std::size_t edge_count() const { return edge_count_; }
    std::span<const std::size_t> neighbors(std::size_t u) const { return adjacency_[u]; }
    bool has_edge(std::size_t u, std::size_t v) const;

    // lexicographic (u, then v)
    std::vector<Edge> edges() const;

    friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

private:
    std::size_t n2_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// (degrees over U, degrees over V)
std::pair<DegreeVector, DegreeVector> degrees(const BipartiteGraph& g);

/// True iff every degree of g lies in its interval. Throws
/// std::invalid_argument when part sizes disagree.
bool verify_realization(const BipartiteGraph& g, const IntervalInstance& inst);

/// Edge set (U x V) minus E(g).
BipartiteGraph complement(const BipartiteGraph& g);

/// Bounds whose realizations are exactly the complements of inst's
/// realizations. Requires a clamped instance with every lower bound at most
/// the opposite part size; throws InvalidInstance otherwise.
IntervalInstance complementary_instance(const IntervalInstance& inst);

}

#endif /* bireal_model_hpp */
