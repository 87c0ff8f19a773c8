#ifndef PROPWHEEL_GENERATOR_TABLE_HPP
#define PROPWHEEL_GENERATOR_TABLE_HPP

namespace propwheel {

// Signs for grafting the arity-n corolla generator into slot i of an outer
// generator. Each arity-n corolla generator is the n-fold product of the
// binary one and lives in cohomological degree n-1; a wheel generator on n
// inputs additionally carries a degree-one shift token on its left, so
// grafting past the token costs an extra (-1)^{n-1}.
struct GeneratorTable {
    // mu_m o_i mu_n = corolla_slot_sign(m, n, i) * mu_{m+n-1}.
    static int corolla_slot_sign(int m, int n, int i);
    // w_m o_i mu_n = wheel_slot_sign(m, n, i) * w_{m+n-1}.
    static int wheel_slot_sign(int m, int n, int i);

    // Recomputes every corolla slot sign up to the given arity by direct
    // graded evaluation in the endomorphism operad of a one-dimensional
    // degree-one space and compares with corolla_slot_sign. Returns false on
    // any mismatch. Must pass before the table is trusted; the check suite
    // and tests run it.
    static bool validate_against_suspension(int max_arity);
};

// Scalar by which (id^(i-1) (x) nu_n (x) id^(m-i)) followed by nu_m acts on
// the generating word, where nu_k is the canonical arity-k operation on a
// one-dimensional space concentrated in homological degree one (so nu_k has
// homological degree 1-k). Computed by generic Koszul evaluation of a tensor
// of graded maps on a tensor of graded elements, not from a closed form.
int suspension_composition_sign(int m, int n, int i);

}  // namespace propwheel

#endif
