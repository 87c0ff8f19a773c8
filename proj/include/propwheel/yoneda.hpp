#ifndef PROPWHEEL_YONEDA_HPP
#define PROPWHEEL_YONEDA_HPP

#include <vector>

#include "propwheel/ext_oracle.hpp"
#include "propwheel/matrix.hpp"
#include "propwheel/rational.hpp"

namespace propwheel {

// Class in Ext^{b-a} from the a-fold tensor power to the b-fold one, given
// by a cocycle column at the top level of the (a -> b) complex. Every
// class handled here sits in the top degree, so comparison liftings can be
// built from relabelling maps alone.
struct ExtClass {
    int a = 0;
    int b = 0;
    QMatrix cocycle;
};

// The product class attached to a surjection f: {1..b} ->> {1..a}; for
// a = 1 and f constant this is the class of the full iterated product, for
// f bijective the identity class.
ExtClass surjection_class(int a, int b, const std::vector<int>& f);

// The iterated-product class in Ext^{b-1} from one factor to b slots.
ExtClass power_class(int b);

// The identity class in Ext^0 (n factors to n slots).
ExtClass identity_class(int n);

ExtClass ext_add(const ExtClass& u, const ExtClass& v);
ExtClass ext_scale(const Rat& c, const ExtClass& u);

// Composition product y after x (x: a -> b, y: b -> c): lifts x to a chain
// map between the resolutions degree by degree, solving the commutation
// equations by exact elimination, and evaluates y on the top lift. A
// nonzero seed perturbs every non-unique lifting choice by a random
// element of the solution kernel; the class of the result must not move.
ExtClass yoneda_compose(const ExtClass& y, const ExtClass& x, unsigned seed = 0);

// Coordinates in the surjection-class basis of Ext^{b-a}(a -> b).
QMatrix yoneda_coordinates(const ExtClass& cls);

}  // namespace propwheel

#endif
