#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "propwheel/checks.hpp"
#include "propwheel/matrix.hpp"

using namespace propwheel;

namespace {

QMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 3);
    std::uniform_int_distribution<int> fill(0, 99);
    QMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (fill(rng) < 60) m.at(r, c) = rat(num(rng), den(rng));
    return m;
}

}  // namespace

TEST_CASE("rref of a rank one matrix") {
    QMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(0, 2) = -1;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(1, 2) = -2;
    const std::vector<int> pivots = m.rref_serial();
    CHECK(pivots == std::vector<int>{0});
    CHECK(m.at(0, 0) == 1);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 0) == 0);
    CHECK(m.rank() == 1);
}

TEST_CASE("solve and kernel") {
    QMatrix a(2, 2);
    a.at(0, 0) = 1;
    a.at(0, 1) = 1;
    a.at(1, 0) = 1;
    a.at(1, 1) = -1;
    QMatrix b(2, 1);
    b.at(0, 0) = 3;
    b.at(1, 0) = 1;
    QMatrix x;
    REQUIRE(a.solve(b, &x));
    CHECK(x.at(0, 0) == 2);
    CHECK(x.at(1, 0) == 1);

    QMatrix singular(2, 2);
    singular.at(0, 0) = 1;
    singular.at(0, 1) = 2;
    singular.at(1, 0) = 2;
    singular.at(1, 1) = 4;
    QMatrix bad(2, 1);
    bad.at(0, 0) = 1;
    bad.at(1, 0) = 0;
    QMatrix unused;
    CHECK_FALSE(singular.solve(bad, &unused));

    const QMatrix k = singular.kernel_basis();
    REQUIRE(k.cols() == 1);
    CHECK(singular.multiply(k) == QMatrix(2, 1));
    CHECK(is_zero_matrix(singular.multiply(k)));

    CHECK(singular.independent_columns() == std::vector<int>{0});
}

TEST_CASE("serial and parallel elimination agree") {
    std::mt19937 rng(2026);
    for (int trial = 0; trial < 10; ++trial) {
        const QMatrix m = random_matrix(rng, 23, 31);
        QMatrix s = m;
        QMatrix p = m;
        const auto ps = s.rref_serial();
        const auto pp = p.rref_parallel();
        CHECK(ps == pp);
        CHECK(s == p);
    }
}

TEST_CASE("augment, columns, identity, trace") {
    const QMatrix id = QMatrix::identity(3);
    CHECK(id.trace() == 3);
    const QMatrix two = QMatrix::augment(id, id);
    CHECK(two.cols() == 6);
    CHECK(two.columns({3, 4, 5}) == id);
    CHECK(id.transpose() == id);
}

TEST_CASE("matrix suite") {
    for (const CheckResult& r : run_suite("matrix")) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
