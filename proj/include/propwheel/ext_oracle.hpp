#ifndef PROPWHEEL_EXT_ORACLE_HPP
#define PROPWHEEL_EXT_ORACLE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "propwheel/bar_complex.hpp"
#include "propwheel/matrix.hpp"
#include "propwheel/permutation.hpp"

namespace propwheel {

// Nonzero Ext dimensions from the l-fold tensor power to the q-fold tensor
// power, computed by rank counting in the bar cochain complex.
std::map<int, std::int64_t> ext_dimensions(int l, int q, int max_level_dim = 10000);

// Source replaced by the j-th exterior power.
std::map<int, std::int64_t> ext_lambda_dimensions(int j, int q, int max_level_dim = 10000);

// Exterior powers on both sides.
std::map<int, std::int64_t> ext_lambda_lambda(int n, int m, int max_level_dim = 10000);

// Distinguished cocycle basis of the top cohomology of the (l -> q)
// complex: one class per surjection f of the q slots onto the l factors,
// given by the product of the one-factor top cocycles along the fibers of
// f. Construction throws if the candidates fail to be a basis.
struct TopClassBasis {
    int l = 0;
    int q = 0;
    BarComplex complex;
    CohomologySpace h;                  // reps are the z-cocycles, basis order
    std::vector<std::vector<int>> fs;   // surjections f, same order as reps
};
TopClassBasis top_class_basis(int l, int q);

// Column of the product cocycle attached to one surjection f of the q
// slots onto the l factors, at the top level of the given (l -> q)
// complex: the summand puts factor t in degree |fiber(t)| - 1 and the slot
// assignment sends the r-th smallest slot of fiber(t) to the r-th letter
// of block t.
QMatrix z_cocycle_column(const BarComplex& b, const std::vector<int>& f);

enum class ActionSide { inputs, outputs };

// Matrix of the permutation action on the top cohomology in the basis of
// top_class_basis(l, q). inputs: p permutes the q target slots; outputs: p
// permutes the l resolution factors. Entry (r, c) is the coefficient of
// basis class r in the image of basis class c.
QMatrix action_on_cohomology(const Permutation& p, ActionSide side, int l, int q);

// Prebuilt j-wheel sector of the (l -> q) Ext computation: the top
// cohomology of the complex with l plain factors and j antisymmetrized
// ones, kept around so repeated character evaluations share one complex.
class ExtSector {
  public:
    ExtSector(int l, int j, int q, int max_level_dim = 10000);

    std::int64_t dim() const;

    // Joint trace of sigma on the q slots and tau on the l plain factors.
    Rat character(const Permutation& sigma, const Permutation& tau) const;

  private:
    int l_ = 0;
    int j_ = 0;
    int q_ = 0;
    bool empty_ = true;
    bool unit_ = false;  // the (0 -> 0) sector is the ground field
    std::shared_ptr<BarComplex> complex_;
    RestrictedComplex restricted_;
    CohomologySpace h_;
};

// Trace of the joint action of sigma (on the q target slots) and tau (on
// the l plain factors) over the j-wheel sector. One-shot convenience for
// ExtSector(l, j, q).character(sigma, tau).
Rat ext_sector_character(const Permutation& sigma, const Permutation& tau, int l, int j, int q);

// Sum of all sector characters, 0 <= j <= q - l.
Rat ext_character(const Permutation& sigma, const Permutation& tau, int l, int q);

// Consistency report for one complex: level dimensions, cohomology, and
// structural checks (differential squares to zero, idempotents are
// projections commuting with the differential, dimensions match the
// counting formulas where one applies).
struct OracleReport {
    ComplexSpec spec;
    std::vector<int> level_dims;
    std::map<int, std::int64_t> dims;
    std::vector<std::pair<std::string, bool>> checks;
    bool ok() const;
};
OracleReport oracle_report(const ComplexSpec& spec, int max_level_dim = 10000);

// Permutation with consecutive cycles of the given lengths, e.g. {2, 1}
// gives (1 2)(3).
Permutation cycle_type_representative(const std::vector<int>& type);

// Characters of the symmetric group acting on the q slots of the
// wheel-only sectors: one row per conjugacy class (cycle type with
// decreasing parts), one column per wheel count j = 1..max_j, each value
// the trace of a class representative on the j-th sector. Totals sum each
// row over j; the identity row totals the Bell number B(q).
struct CharacterTable {
    int q = 0;
    int max_j = 0;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<Rat>> values;  // [class][j - 1]
    std::vector<Rat> totals;
};
CharacterTable character_table(int q, int max_j);

}  // namespace propwheel

#endif
