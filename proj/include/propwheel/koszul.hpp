#ifndef PROPWHEEL_KOSZUL_HPP
#define PROPWHEEL_KOSZUL_HPP

#include <vector>

#include "propwheel/permutation.hpp"

namespace propwheel {

// Degrees of a list of homogeneous factors, in tensor order.
using GradedWord = std::vector<int>;

// Sign accumulated by permuting homogeneous factors of the given degrees into
// the order prescribed by p: the factor at position i moves to position p(i).
// Product of (-1)^{d_a d_b} over all pairs whose relative order p inverts.
int koszul_sign(const Permutation& p, const GradedWord& degrees);

// Sign of moving the single factor at position `from` to position `to`
// (1-based) while every other factor keeps its relative order.
int koszul_move_sign(const GradedWord& degrees, int from, int to);

}  // namespace propwheel

#endif
