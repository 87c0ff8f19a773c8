#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "propwheel/checks.hpp"
#include "propwheel/combinatorics.hpp"
#include "propwheel/diagram.hpp"
#include "propwheel/serialize.hpp"

using namespace propwheel;

TEST_CASE("dimension values") {
    CHECK(dimension(0, 0) == 1);
    CHECK(dimension(2, 1) == 3);
    CHECK(dimension(3, 0) == 5);
    CHECK(dimension(3, 1) == 10);
    CHECK(dimension(3, 2) == 12);
    CHECK(dimension(3, 3) == 6);
    CHECK(dimension(4, 2) == 62);
    CHECK(dimension(2, 3) == 0);

    std::int64_t fact = 1;
    for (int n = 1; n <= 5; ++n) {
        fact *= n;
        CHECK(dimension(n, n) == fact);
    }
    for (int q = 0; q <= 6; ++q) CHECK(dimension(q, 0) == bell(q));
}

TEST_CASE("basis enumeration is sorted, valid, and counted by the formula") {
    for (int q = 0; q <= 4; ++q) {
        for (int l = 0; l <= q + 1; ++l) {
            const auto basis = enumerate_basis(q, l);
            CHECK(static_cast<std::int64_t>(basis.size()) == dimension(q, l));
            CHECK(std::is_sorted(basis.begin(), basis.end()));
            for (const auto& d : basis) {
                CHECK_NOTHROW(d.validate());
                CHECK(d.degree() == q - l);
            }
        }
    }
}

TEST_CASE("canonical form signs") {
    // Sorting one fiber pays the signature of the sort.
    const Canonical sorted = canonical_form(2, 1, {{2, 1}}, {});
    CHECK(sorted.sign == -1);
    CHECK(sorted.diagram.fibers == std::vector<std::vector<int>>{{1, 2}});

    // Reordering two one-entry wheels swaps odd factors.
    const Canonical wheels = canonical_form(2, 0, {}, {{2}, {1}});
    CHECK(wheels.sign == -1);
    CHECK(wheels.diagram.wheels == std::vector<std::vector<int>>{{1}, {2}});

    // Canonical input is a fixed point with sign +1.
    const Canonical fixed = canonical_form(3, 1, {{1, 3}}, {{2}});
    CHECK(fixed.sign == 1);
    const Canonical again =
        canonical_form(3, 1, fixed.diagram.fibers, fixed.diagram.wheels);
    CHECK(again.sign == 1);
    CHECK(again.diagram == fixed.diagram);
}

TEST_CASE("broken block structures are rejected") {
    WheeledDiagram overlap;
    overlap.q = 2;
    overlap.l = 1;
    overlap.fibers = {{1, 2}};
    overlap.wheels = {{2}};
    CHECK_THROWS_AS(overlap.validate(), std::invalid_argument);

    WheeledDiagram missing;
    missing.q = 3;
    missing.l = 1;
    missing.fibers = {{1}};
    missing.wheels = {{3}};
    CHECK_THROWS_AS(missing.validate(), std::invalid_argument);

    WheeledDiagram empty_fiber;
    empty_fiber.q = 1;
    empty_fiber.l = 2;
    empty_fiber.fibers = {{1}, {}};
    CHECK_THROWS_AS(empty_fiber.validate(), std::invalid_argument);
}

TEST_CASE("element arithmetic drops cancelled terms") {
    const auto basis = enumerate_basis(2, 1);
    Element e = Element::zero(2, 1);
    e.add(basis[0], rat(1, 2));
    e.add(basis[1], rat(-3));
    Element f = e;
    f -= e;
    CHECK(f.is_zero());
    e *= Rat(0);
    CHECK(e.is_zero());

    Element g = Element::basis(basis[0]) + Element::basis(basis[1]);
    g -= Element::basis(basis[1]);
    CHECK(g == Element::basis(basis[0]));
    CHECK(g.terms().size() == 1);
}

TEST_CASE("display forms") {
    const Canonical c = canonical_form(4, 1, {{3, 4}}, {{1, 2}});
    CHECK(diagram_to_string(c.diagram) == "(3 4)[1 2]");
    CHECK(element_to_string(Element::zero(2, 1)) == "0");
}

TEST_CASE("dimensions and canonical suites") {
    for (const std::string& name : {"dimensions", "canonical"}) {
        for (const CheckResult& r : run_suite(name)) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.pass);
        }
    }
}
