#ifndef PROPWHEEL_BAR_COMPLEX_HPP
#define PROPWHEEL_BAR_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "propwheel/bar_category.hpp"
#include "propwheel/matrix.hpp"
#include "propwheel/permutation.hpp"

namespace propwheel {

// Hom complex computed from the normalized bar resolutions of a tensor
// product of l + j group-like factors, mapping into the multilinear part of
// q tensor slots. The last j resolution factors can be antisymmetrized
// (source exterior power), and the q target slots can be antisymmetrized
// (target exterior power).
struct ComplexSpec {
    int q = 0;
    int l = 0;
    int j = 0;
    bool lambda_target = false;
};

// Basis of one cochain level: pairs (summand composition, slot assignment).
// The composition lists the resolution degree of each factor; the slot
// assignment sends each of the q target slots to one of the letters and
// must be onto (multilinear part).
struct CochainLevel {
    std::vector<std::vector<int>> comps;
    std::vector<std::vector<int>> gammas;
    std::map<std::vector<int>, int> comp_index;
    std::map<std::vector<int>, int> gamma_index;

    int dim() const { return static_cast<int>(comps.size() * gammas.size()); }
    int index(int comp_i, int gamma_i) const {
        return comp_i * static_cast<int>(gammas.size()) + gamma_i;
    }
};

class BarComplex {
  public:
    explicit BarComplex(const ComplexSpec& spec, int max_level_dim = 10000);

    const ComplexSpec& spec() const { return spec_; }
    int factors() const { return spec_.l + spec_.j; }
    // Highest level carrying cochains (q - factors); -1 for the empty complex.
    int top() const;
    int levels() const { return static_cast<int>(levels_.size()); }
    const CochainLevel& level(int k) const { return levels_.at(static_cast<size_t>(k)); }
    // Differential level k -> level k+1 (pullback along the alternating-fold
    // boundary of the resolution).
    const QMatrix& differential(int k) const { return d_.at(static_cast<size_t>(k)); }

    // Target slots permuted: the cochain indexed by gamma goes to the one
    // indexed by gamma o sigma^{-1}. Entries 0/1.
    QMatrix slot_action(const Permutation& sigma, int k) const;
    // Resolution factors permuted by pi (a permutation of all l + j
    // factors): compositions and letter blocks move along, with the Koszul
    // sign of the factor rearrangement in the homological degrees.
    QMatrix factor_action(const Permutation& pi, int k) const;

    // Signed average over permutations of the last j factors.
    QMatrix source_idempotent(int k) const;
    // Signed average over permutations of the q target slots.
    QMatrix target_idempotent(int k) const;
    // Product of the two (they commute); identity when neither applies.
    QMatrix idempotent(int k) const;

  private:
    ComplexSpec spec_;
    std::vector<CochainLevel> levels_;
    std::vector<QMatrix> d_;
};

// Levelwise matrices of a finite cochain complex, with exact cohomology.
struct ChainComplexQ {
    std::vector<int> dims;
    std::vector<QMatrix> d;  // d[k]: dims[k] -> dims[k+1]; size dims.size()-1

    // Nonzero cohomology dimensions by degree.
    std::map<int, std::int64_t> cohomology_dims() const;
};

struct CohomologySpace {
    int degree = 0;
    int dim = 0;
    QMatrix reps;          // ambient dim x dim, representative cocycles
    QMatrix rep_boundary;  // [reps | boundary basis]

    // Coordinates of cocycle columns in the representative basis, reducing
    // modulo boundaries. Throws when a column is not in the span.
    QMatrix coordinates(const QMatrix& cocycles) const;
};

CohomologySpace cohomology_at(const ChainComplexQ& c, int degree);

// Image subcomplex of the levelwise idempotents of a BarComplex, with the
// change of basis kept so operators commuting with the idempotent can be
// transported.
struct RestrictedComplex {
    ChainComplexQ cx;
    std::vector<QMatrix> basis;  // ambient dim x restricted dim per level

    QMatrix restrict_operator(int k, const QMatrix& ambient_op) const;
};

RestrictedComplex restrict_bar_complex(const BarComplex& b);

}  // namespace propwheel

#endif
