#include "bireal/vectors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bireal {

DegreeVector::DegreeVector(std::vector<degree_t> entries) : entries_(std::move(entries)) {
    for (degree_t x : entries_) {
        if (x < 0) {
            throw std::invalid_argument("degree vector entries must be nonnegative");
        }
    }
}

DegreeVector::DegreeVector(std::initializer_list<degree_t> entries)
    : DegreeVector(std::vector<degree_t>(entries)) {}

degree_t DegreeVector::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), degree_t{0});
}

degree_t DegreeVector::max_entry() const {
    return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

SortPermutation SortPermutation::identity(std::size_t n) {
    SortPermutation p;
    p.forward.resize(n);
    std::iota(p.forward.begin(), p.forward.end(), std::size_t{0});
    p.inverse = p.forward;
    return p;
}

DegreeVector conjugate(const DegreeVector& c, std::size_t target_length) {
    // histogram of entry values, capped at target_length
    std::vector<degree_t> counts(target_length + 1, 0);
    for (degree_t x : c) {
        ++counts[std::min<std::size_t>(static_cast<std::size_t>(x), target_length)];
    }
    // conj[i-1] = #{x >= i} = suffix sum of counts from i
    std::vector<degree_t> conj(target_length, 0);
    degree_t running = 0;
    for (std::size_t i = target_length; i >= 1; --i) {
        running += counts[i];
        conj[i - 1] = running;
    }
    return DegreeVector(std::move(conj));
}

PartialSums partial_sums(std::span<const degree_t> v) {
    PartialSums sums(v.size());
    std::partial_sum(v.begin(), v.end(), sums.begin());
    return sums;
}

bool dominates(const DegreeVector& a, const DegreeVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("dominance requires vectors of equal length");
    }
    degree_t sa = 0;
    degree_t sb = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        if (sa > sb) {
            return false;
        }
    }
    return true;
}

bool is_non_increasing(std::span<const degree_t> v) {
    return std::adjacent_find(v.begin(), v.end(), std::less<>{}) == v.end();
}

SortedPairs sort_pairs_descending(const DegreeVector& low, const DegreeVector& up) {
    if (low.size() != up.size()) {
        throw std::invalid_argument("bound vectors must have equal length");
    }
    const std::size_t n = low.size();
    const auto max_value = static_cast<std::size_t>(low.max_entry());

    // start[v] = first output slot for key v, keys laid out from max_value down to 0
    std::vector<std::size_t> start(max_value + 2, 0);
    for (degree_t x : low) {
        ++start[max_value - static_cast<std::size_t>(x) + 1];
    }
    for (std::size_t k = 1; k < start.size(); ++k) {
        start[k] += start[k - 1];
    }

    SortPermutation perm;
    perm.forward.resize(n);
    perm.inverse.resize(n);
    std::vector<degree_t> low_sorted(n);
    std::vector<degree_t> up_sorted(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t slot = start[max_value - static_cast<std::size_t>(low[i])]++;
        perm.forward[i] = slot;
        perm.inverse[slot] = i;
        low_sorted[slot] = low[i];
        up_sorted[slot] = up[i];
    }
    return {DegreeVector(std::move(low_sorted)), DegreeVector(std::move(up_sorted)),
            std::move(perm)};
}

}
