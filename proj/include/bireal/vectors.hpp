#ifndef bireal_vectors_hpp
#define bireal_vectors_hpp

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace bireal {

using degree_t = std::int64_t;

/// A vector of vertex degrees (or degree bounds). Entries are never negative.
class DegreeVector {
public:
    DegreeVector() = default;
    // throws std::invalid_argument if any entry is negative
    explicit DegreeVector(std::vector<degree_t> entries);
    DegreeVector(std::initializer_list<degree_t> entries);

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    degree_t operator[](std::size_t i) const { return entries_[i]; }
    std::span<const degree_t> entries() const { return entries_; }
    const std::vector<degree_t>& values() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    degree_t total() const;
    degree_t max_entry() const;

    friend bool operator==(const DegreeVector&, const DegreeVector&) = default;

private:
    std::vector<degree_t> entries_;
};

/// sums[k] is the sum of the first k+1 entries.
using PartialSums = std::vector<degree_t>;

/// Relates positions before and after a reordering. Indices are 0-based.
struct SortPermutation {
    std::vector<std::size_t> forward;  // original index -> sorted index
    std::vector<std::size_t> inverse;  // sorted index -> original index

    static SortPermutation identity(std::size_t n);
    std::size_t size() const { return forward.size(); }

    // values[sorted index] -> values[original index]
    template <class T>
    std::vector<T> to_original(std::span<const T> sorted) const {
        std::vector<T> out(sorted.size());
        for (std::size_t s = 0; s < sorted.size(); ++s) {
            out[inverse[s]] = sorted[s];
        }
        return out;
    }
};

/// Conjugate vector: entry i (1-based) counts the entries of c that are >= i.
/// Runs in O(c.size() + target_length).
DegreeVector conjugate(const DegreeVector& c, std::size_t target_length);

PartialSums partial_sums(std::span<const degree_t> v);
inline PartialSums partial_sums(const DegreeVector& v) { return partial_sums(v.entries()); }

/// True iff every prefix sum of a is at most the matching prefix sum of b.
/// Throws std::invalid_argument on a length mismatch.
bool dominates(const DegreeVector& a, const DegreeVector& b);

bool is_non_increasing(std::span<const degree_t> v);
inline bool is_non_increasing(const DegreeVector& v) { return is_non_increasing(v.entries()); }

struct SortedPairs {
    DegreeVector low;
    DegreeVector up;
    SortPermutation permutation;
};

/// Stable counting sort of (low[i], up[i]) pairs, descending by low.
/// O(n + max(low)).
SortedPairs sort_pairs_descending(const DegreeVector& low, const DegreeVector& up);

}

#endif /* bireal_vectors_hpp */
