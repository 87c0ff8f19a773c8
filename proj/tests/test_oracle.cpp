#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "propwheel/checks.hpp"
#include "propwheel/combinatorics.hpp"
#include "propwheel/ext_oracle.hpp"

using namespace propwheel;

namespace {

using Dims = std::map<int, std::int64_t>;

}  // namespace

TEST_CASE("ext dimensions concentrate in the top degree") {
    CHECK(ext_dimensions(1, 3) == Dims{{2, 1}});
    for (int q = 1; q <= 4; ++q)
        for (int l = 1; l <= q; ++l)
            CHECK(ext_dimensions(l, q) == Dims{{q - l, surjection_count(q, l)}});
    CHECK(ext_dimensions(1, 1) == Dims{{0, 1}});
    CHECK(ext_dimensions(2, 4) == Dims{{2, 14}});
}

TEST_CASE("exterior power sources count by stirling numbers") {
    for (int q = 1; q <= 4; ++q)
        for (int j = 1; j <= q; ++j)
            CHECK(ext_lambda_dimensions(j, q) == Dims{{q - j, stirling2(q, j)}});
    CHECK(ext_lambda_dimensions(2, 4) == Dims{{2, 7}});
}

TEST_CASE("exterior powers on both sides count by partitions") {
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= m; ++n)
            CHECK(ext_lambda_lambda(n, m) == Dims{{m - n, partitions_into_parts(m, n)}});
    CHECK(ext_lambda_lambda(2, 4) == Dims{{2, 2}});
}

TEST_CASE("structural reports") {
    for (const ComplexSpec spec : {ComplexSpec{3, 1, 0, false}, ComplexSpec{4, 2, 0, false},
                                   ComplexSpec{4, 0, 2, false}, ComplexSpec{4, 0, 2, true},
                                   ComplexSpec{3, 1, 1, false}}) {
        const OracleReport r = oracle_report(spec);
        INFO("q=", spec.q, " l=", spec.l, " j=", spec.j);
        CHECK(r.ok());
    }
}

TEST_CASE("sector dimensions and characters at q = 2") {
    CHECK(ExtSector(0, 1, 2).dim() == 1);
    CHECK(ExtSector(0, 2, 2).dim() == 1);
    const Permutation swap = Permutation::transposition(2, 1, 2);
    const Permutation none = Permutation::identity(0);
    // Both wheel sectors of E(2, 0) are copies of the sign representation.
    CHECK(ext_sector_character(swap, none, 0, 1, 2) == -1);
    CHECK(ext_sector_character(swap, none, 0, 2, 2) == -1);
    CHECK(ext_character(swap, none, 0, 2) == -2);
    CHECK(ext_character(Permutation::identity(2), none, 0, 2) == 2);
}

TEST_CASE("character table at q = 3") {
    const CharacterTable t = character_table(3, 3);
    REQUIRE(t.classes.size() == 3);
    CHECK(t.classes[0] == std::vector<int>{3});
    CHECK(t.classes[1] == std::vector<int>{2, 1});
    CHECK(t.classes[2] == std::vector<int>{1, 1, 1});
    CHECK(t.values[0] == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    CHECK(t.values[1] == std::vector<Rat>{Rat(-1), Rat(-1), Rat(-1)});
    CHECK(t.values[2] == std::vector<Rat>{Rat(1), Rat(3), Rat(1)});
    CHECK(t.totals == std::vector<Rat>{Rat(2), Rat(-3), Rat(5)});
    CHECK(t.totals.back() == bell(3));
}

TEST_CASE("actions on the top cohomology") {
    const Permutation swap = Permutation::transposition(2, 1, 2);

    // One class for (l, q) = (1, 2); the slot swap acts by the signature.
    const QMatrix m = action_on_cohomology(swap, ActionSide::inputs, 1, 2);
    REQUIRE(m.rows() == 1);
    CHECK(m.at(0, 0) == -1);

    // Two classes for (l, q) = (2, 2); both actions permute them without sign.
    const QMatrix in2 = action_on_cohomology(swap, ActionSide::inputs, 2, 2);
    const QMatrix out2 = action_on_cohomology(swap, ActionSide::outputs, 2, 2);
    QMatrix want(2, 2);
    want.at(0, 1) = 1;
    want.at(1, 0) = 1;
    CHECK(in2 == want);
    CHECK(out2 == want);
}

TEST_CASE("oracle action and character suites") {
    for (const std::string& name : {"oracle-actions", "oracle-characters"}) {
        for (const CheckResult& r : run_suite(name)) {
            INFO(r.name, ": ", r.detail);
            CHECK(r.pass);
        }
    }
}
