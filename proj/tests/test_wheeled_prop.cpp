#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "propwheel/checks.hpp"
#include "propwheel/generator_table.hpp"
#include "propwheel/wheeled_prop.hpp"

using namespace propwheel;

TEST_CASE("comb compositions of the product generator") {
    CHECK(vertical(mu(2), horizontal(mu(2), identity_element(1))) == mu(3));
    CHECK(vertical(mu(2), horizontal(identity_element(1), mu(2))) == Rat(-1) * mu(3));

    Element relation = vertical(mu(2), horizontal(mu(2), identity_element(1)));
    relation += vertical(mu(2), horizontal(identity_element(1), mu(2)));
    CHECK(relation.is_zero());
}

TEST_CASE("generators carry the sign representation") {
    for (int n = 2; n <= 4; ++n) {
        for (int a = 1; a < n; ++a) {
            const Permutation t = Permutation::transposition(n, a, a + 1);
            CHECK(act_inputs(t, mu(n)) == Rat(-1) * mu(n));
            CHECK(act_inputs(t, wheel_generator(n)) == Rat(-1) * wheel_generator(n));
        }
    }
    const Permutation three_cycle = Permutation::from_cycles("(1 2 3)", 3);
    CHECK(act_inputs(three_cycle, mu(3)) == mu(3));
}

TEST_CASE("contraction anchors") {
    CHECK(contract(1, 1, mu(2)) == Rat(-1) * wheel_generator(1));
    CHECK(contract(2, 1, mu(2)) == wheel_generator(1));
    CHECK(contract(1, 1, identity_element(1)).is_zero());
    for (int p = 1; p <= 4; ++p) {
        CHECK(class_h(p) == mu(p + 1));
        CHECK(class_hbar(p) == Rat(-1) * wheel_generator(p));
        CHECK(class_hbar(p) == contract(1, 1, class_h(p)));
    }
    CHECK(contract(2, 1, class_h(1)) == Rat(-1) * class_hbar(1));
}

TEST_CASE("monoidal unit") {
    WheeledDiagram unit;
    CHECK_NOTHROW(unit.validate());
    const Element one = Element::basis(unit);
    CHECK(horizontal(one, mu(2)) == mu(2));
    CHECK(horizontal(mu(2), one) == mu(2));
}

TEST_CASE("composition signs match the generator table") {
    // vertical(mu(2), .) grafting into slot i of biarity (2, 1) is the
    // slot-sign table row (m, n) = (2, 2).
    CHECK(GeneratorTable::corolla_slot_sign(2, 2, 1) == 1);
    CHECK(GeneratorTable::corolla_slot_sign(2, 2, 2) == -1);
    CHECK(GeneratorTable::validate_against_suspension(5));
}

TEST_CASE("wheeled prop suites") {
    for (const std::string& name :
         {"quadratic", "actions", "contract", "compose", "classes", "gentable"}) {
        for (const CheckResult& r : run_suite(name)) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.pass);
        }
    }
}
