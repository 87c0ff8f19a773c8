#ifndef PROPWHEEL_DIAGRAM_HPP
#define PROPWHEEL_DIAGRAM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "propwheel/rational.hpp"

namespace propwheel {

// Basis diagram of biarity (q inputs, l outputs): l non-empty fibers (the
// inputs wired to each output's corolla, ascending) plus a set of wheels
// (closed components, entries ascending, wheels ordered by their minima).
// Fibers and wheels partition {1..q}. Cohomological degree: a fiber A
// contributes |A|-1, a wheel X contributes |X|; total q - l.
struct WheeledDiagram {
    int q = 0;
    int l = 0;
    std::vector<std::vector<int>> fibers;
    std::vector<std::vector<int>> wheels;

    int degree() const { return q - l; }
    // Throws std::invalid_argument when the block structure is broken.
    void validate() const;

    bool operator==(const WheeledDiagram& o) const;
    bool operator<(const WheeledDiagram& o) const;
};

struct Canonical {
    WheeledDiagram diagram;
    int sign = 1;
};

// One tensor factor of an intermediate (not yet canonically ordered)
// presentation: either the corolla attached to a specific output, or a wheel.
// Labels are in tensor order, not necessarily ascending.
struct Factor {
    bool is_wheel = false;
    int output = 0;  // 1-based when a corolla, 0 for wheels
    std::vector<int> labels;

    int degree() const {
        return is_wheel ? static_cast<int>(labels.size())
                        : static_cast<int>(labels.size()) - 1;
    }
};

// Brings a factor sequence into canonical order (corollas by output index,
// then wheels by minimum). Sign: per-factor label sorts contribute the
// signature of the sorting permutation (every block carries the sign
// representation), cross-factor reordering contributes the Koszul sign over
// cohomological degrees. Each output 1..l must appear exactly once.
Canonical canonicalize_factors(int q, int l, const std::vector<Factor>& factors);

// Convenience entry point: fibers indexed by output with arbitrarily ordered
// entries, wheels listed in arbitrary order. Idempotent on canonical input.
Canonical canonical_form(int q, int l, const std::vector<std::vector<int>>& fibers,
                         const std::vector<std::vector<int>>& wheels);

// Finite linear combination of basis diagrams of one biarity over exact
// rationals. Zero coefficients are never stored.
class Element {
  public:
    Element() = default;
    Element(int q, int l) : q_(q), l_(l) {}
    static Element zero(int q, int l) { return Element(q, l); }
    static Element basis(const WheeledDiagram& d);

    int q() const { return q_; }
    int l() const { return l_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<WheeledDiagram, Rat>& terms() const { return terms_; }

    void add(const WheeledDiagram& d, const Rat& c);
    void add(const Canonical& c, const Rat& coeff);

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rat& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Rat& c, Element a) { return a *= c; }

    bool operator==(const Element& o) const;
    bool operator!=(const Element& o) const { return !(*this == o); }

  private:
    int q_ = 0;
    int l_ = 0;
    std::map<WheeledDiagram, Rat> terms_;
};

// All basis diagrams of biarity (q, l), sorted in the diagram order used by
// Element terms. Empty when l > q.
std::vector<WheeledDiagram> enumerate_basis(int q, int l);

// dim = sum_m C(q,m) |Surj(m,l)| Bell(q-m).
std::int64_t dimension(int q, int l);

}  // namespace propwheel

#endif
