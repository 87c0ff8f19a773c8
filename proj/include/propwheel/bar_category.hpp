#ifndef PROPWHEEL_BAR_CATEGORY_HPP
#define PROPWHEEL_BAR_CATEGORY_HPP

#include <functional>
#include <map>
#include <vector>

#include "propwheel/rational.hpp"

namespace propwheel {

// Natural map between tensor powers of the reduced group-algebra functor,
// determined by a surjection {1..inputs} ->> {1..outputs} with a linear
// order on each fiber: output b is the ordered product of its fiber. These
// maps span everything needed for bar differentials and comparison liftings.
struct FoldMap {
    // fibers[b-1] = ordered list of the inputs multiplied into output b.
    std::vector<std::vector<int>> fibers;

    int outputs() const { return static_cast<int>(fibers.size()); }
    int inputs() const;
    void validate() const;

    static FoldMap identity(int n);
    // Merges adjacent inputs (i, i+1) of n+1 letters into output i.
    static FoldMap fold(int n_out, int i);
    // Singleton fibers: input images[b... ] -- relabel by a bijection,
    // fiber of output b is {preimage of b}.
    static FoldMap relabel(const std::vector<int>& images);

    bool operator<(const FoldMap& o) const { return fibers < o.fibers; }
    bool operator==(const FoldMap& o) const { return fibers == o.fibers; }
};

// outer(inner(x)): fiber of c is the concatenation of inner fibers along
// outer's fiber order.
FoldMap compose_maps(const FoldMap& outer, const FoldMap& inner);

using MapSum = std::map<FoldMap, Rat>;

MapSum compose_sums(const MapSum& outer, const MapSum& inner);
void add_to(MapSum& target, const FoldMap& m, const Rat& c);

// Pullback of the cochain basis vector indexed by gamma (a target-slot to
// letter assignment) along h: emits every gamma' with h(gamma'(t)) =
// gamma(t) for all t that uses all of h's inputs. Fiber order is invisible
// after abelianization.
void expand_pullback(const FoldMap& h, const std::vector<int>& gamma,
                     const std::function<void(const std::vector<int>&)>& emit);

// Letter offsets of the resolution factors for a summand (k_1..k_f): factor
// t owns letters offset[t-1]+1 .. offset[t-1]+k_t+1.
std::vector<int> summand_offsets(const std::vector<int>& comp);

// Number of letters of a summand: sum(k_t) + factors.
int summand_letters(const std::vector<int>& comp);

// Component of the total-complex bar differential leaving the summand
// `comp` (of level sum(comp)) through factor t: the alternating sum of
// adjacent folds inside factor t's letter block, with the Koszul prefix
// (-1)^{k_1+..+k_{t-1}}. Maps summand_letters(comp) letters onto one fewer.
MapSum resolution_differential_component(const std::vector<int>& comp, int t);

// All compositions of k into `parts` non-negative parts, lexicographic.
std::vector<std::vector<int>> compositions(int k, int parts);

}  // namespace propwheel

#endif
