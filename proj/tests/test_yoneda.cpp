#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "propwheel/checks.hpp"
#include "propwheel/generator_table.hpp"
#include "propwheel/wheeled_prop.hpp"
#include "propwheel/yoneda.hpp"

using namespace propwheel;

TEST_CASE("products against the binary class reach the next power class") {
    const ExtClass pi2 = power_class(2);

    // Grafting into slot i of the binary product: the two surjections of
    // fiber sizes (2, 1) and (1, 2) play the roles of the two slots.
    const QMatrix left = yoneda_coordinates(yoneda_compose(surjection_class(2, 3, {1, 1, 2}), pi2));
    const QMatrix right = yoneda_coordinates(yoneda_compose(surjection_class(2, 3, {1, 2, 2}), pi2));
    REQUIRE(left.rows() == 1);
    REQUIRE(right.rows() == 1);
    CHECK(left.at(0, 0) == GeneratorTable::corolla_slot_sign(2, 2, 1));
    CHECK(right.at(0, 0) == GeneratorTable::corolla_slot_sign(2, 2, 2));

    // One more rung of the comb: composing down to four slots stays a
    // single power class, with the same coefficient the engine computes.
    const ExtClass pi3 = yoneda_compose(surjection_class(2, 3, {1, 1, 2}), pi2);
    const QMatrix co =
        yoneda_coordinates(yoneda_compose(surjection_class(3, 4, {1, 2, 3, 3}), pi3));
    REQUIRE(co.rows() == 1);
    WheeledDiagram last_slot;
    last_slot.q = 4;
    last_slot.l = 3;
    last_slot.fibers = {{1}, {2}, {3, 4}};
    const Element engine = vertical(mu(3), Element::basis(last_slot));
    REQUIRE(engine.terms().size() == 1);
    CHECK(co.at(0, 0) == engine.terms().begin()->second);
}

TEST_CASE("identity classes are two sided units") {
    const ExtClass x = surjection_class(2, 3, {1, 2, 1});
    CHECK(yoneda_coordinates(yoneda_compose(identity_class(3), x)) == yoneda_coordinates(x));
    CHECK(yoneda_coordinates(yoneda_compose(x, identity_class(2))) == yoneda_coordinates(x));
}

TEST_CASE("lift perturbation does not move the class") {
    const ExtClass y = surjection_class(2, 4, {1, 1, 2, 2});
    const ExtClass x = power_class(2);
    const QMatrix base = yoneda_coordinates(yoneda_compose(y, x, 0));
    CHECK(yoneda_coordinates(yoneda_compose(y, x, 42)) == base);
    CHECK(yoneda_coordinates(yoneda_compose(y, x, 7)) == base);
}

TEST_CASE("mismatched interfaces are rejected") {
    const ExtClass x = power_class(2);
    const ExtClass y = surjection_class(3, 4, {1, 2, 3, 3});
    CHECK_THROWS_AS(yoneda_compose(y, x), std::invalid_argument);
}

TEST_CASE("yoneda suite") {
    for (const CheckResult& r : run_suite("yoneda")) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
