#ifndef PROPWHEEL_WHEELED_PROP_HPP
#define PROPWHEEL_WHEELED_PROP_HPP

#include "propwheel/diagram.hpp"
#include "propwheel/permutation.hpp"

namespace propwheel {

// Right action of sigma on the inputs: blocks are relabelled through
// sigma^{-1}; each block contributes the signature of its restricted,
// reindexed permutation, wheel factors re-sort by minimum with the Koszul
// sign over cohomological degrees.
Element act_inputs(const Permutation& sigma, const Element& e);

// Left action of tau on the outputs: the corolla of output i becomes the
// corolla of output tau(i); sign is the Koszul sign of the factor
// rearrangement over degrees |fiber|-1.
Element act_outputs(const Permutation& tau, const Element& e);

// Disjoint union: b's inputs are shifted by a's input arity, b's outputs by
// a's output arity; the interleaving of factor blocks contributes Koszul
// signs.
Element horizontal(const Element& a, const Element& b);

// Contraction of input i with output j. Three cases by the block containing
// i: (i) the fiber of j itself turns into a wheel (zero if the fiber is a
// singleton), (ii) another fiber absorbs the fiber of j by operadic
// grafting, (iii) a wheel absorbs it by the right-module action. Labels
// above i and outputs above j close ranks.
Element contract(int i, int j, const Element& e);

// vertical(g, f) = g after f, for g with as many inputs as f has outputs:
// horizontal composition followed by contracting each g-input against the
// matching f-output.
Element vertical(const Element& g, const Element& f);

// Iterated product generator mu_n on inputs {1..n}; mu(1) is the identity
// corolla. Throws for n < 1.
Element mu(int n);

// Identity of biarity (n, n): fiber {i} wired to output i.
Element identity_element(int n);

// Single wheel on {1..n}. Throws for n < 1.
Element wheel_generator(int n);

// h_1 = mu(2), h_{p+1} = vertical(mu(2), horizontal(h_p, identity(1))).
Element class_h(int p);

// hbar_p = contract(1, 1, h_p).
Element class_hbar(int p);

}  // namespace propwheel

#endif
