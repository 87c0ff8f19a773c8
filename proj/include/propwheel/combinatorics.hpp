#ifndef PROPWHEEL_COMBINATORICS_HPP
#define PROPWHEEL_COMBINATORICS_HPP

#include <cstdint>
#include <vector>

namespace propwheel {

std::int64_t binomial(int n, int k);

// |Surj(q -> l)|: surjections from a q-set onto an l-set.
std::int64_t surjection_count(int q, int l);

// Stirling numbers of the second kind S(q, j).
std::int64_t stirling2(int q, int j);

// Bell numbers B(n).
std::int64_t bell(int n);

// Number of partitions of m into exactly n positive parts.
std::int64_t partitions_into_parts(int m, int n);

// All partitions of n as weakly decreasing vectors of positive parts, in
// reverse lexicographic order starting from {n}. partitions_of(0) = {{}}.
std::vector<std::vector<int>> partitions_of(int n);

// All size-k subsets of {1..n}, each ascending, in lexicographic order.
std::vector<std::vector<int>> subsets_of_size(int n, int k);

// All subsets of {1..n} ordered by bitmask value (so {} first, then {1},
// {2}, {1,2}, {3}, ...). Elements ascending within each subset.
std::vector<std::vector<int>> subsets_by_mask(int n);

// All set partitions of the given ascending ground set into non-empty
// blocks; blocks ordered by their minima, block entries ascending.
// Enumerated via restricted-growth strings in lexicographic order.
std::vector<std::vector<std::vector<int>>> set_partitions(const std::vector<int>& ground);

// All surjections {1..q} ->> {1..l} as image vectors, lexicographic.
std::vector<std::vector<int>> surjections(int q, int l);

}  // namespace propwheel

#endif
