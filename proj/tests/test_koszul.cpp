#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "propwheel/checks.hpp"
#include "propwheel/koszul.hpp"
#include "propwheel/permutation.hpp"

using namespace propwheel;

namespace {

std::vector<Permutation> all_perms(int n) {
    std::vector<int> images(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
}

}  // namespace

TEST_CASE("koszul sign on transposed factors") {
    const GradedWord odd = {1, 1};
    const GradedWord mixed = {0, 1};
    const Permutation swap = Permutation::transposition(2, 1, 2);
    CHECK(koszul_sign(Permutation::identity(2), odd) == 1);
    CHECK(koszul_sign(swap, odd) == -1);
    CHECK(koszul_sign(swap, mixed) == 1);
    CHECK(koszul_sign(swap, GradedWord{2, 1}) == 1);
    CHECK(koszul_sign(swap, GradedWord{3, 1}) == -1);
}

TEST_CASE("koszul sign is a cocycle for composition") {
    const GradedWord degrees = {1, 2, 1};
    for (const Permutation& p : all_perms(3)) {
        for (const Permutation& s : all_perms(3)) {
            GradedWord moved(3);
            for (int i = 1; i <= 3; ++i)
                moved[static_cast<size_t>(p(i)) - 1] = degrees[static_cast<size_t>(i) - 1];
            CHECK(koszul_sign(p.then(s), degrees) ==
                  koszul_sign(p, degrees) * koszul_sign(s, moved));
        }
    }
}

TEST_CASE("move sign matches the cycle permutation") {
    const GradedWord degrees = {1, 0, 1, 2};
    // Moving position 1 to position 3 is the cycle 1 -> 3, 2 -> 1, 3 -> 2.
    const Permutation cyc(std::vector<int>{3, 1, 2, 4});
    CHECK(koszul_move_sign(degrees, 1, 3) == koszul_sign(cyc, degrees));
    CHECK(koszul_move_sign(degrees, 4, 4) == 1);
    CHECK(koszul_move_sign(degrees, 1, 2) == 1);
    CHECK(koszul_move_sign(degrees, 1, 3) == -1);
}

TEST_CASE("permutation algebra") {
    const Permutation p = Permutation::from_cycles("(1 2 3)", 4);
    CHECK(p(1) == 2);
    CHECK(p(4) == 4);
    CHECK(p.inverse().then(p) == Permutation::identity(4));
    CHECK(p.signature() == 1);
    CHECK(Permutation::transposition(3, 1, 3).signature() == -1);
    CHECK(Permutation::from_cycles("()", 3) == Permutation::identity(3));
    CHECK(Permutation::from_cycles(p.to_cycles(), 4) == p);

    // (p.then(q))(i) = q(p(i)).
    const Permutation q = Permutation::from_cycles("(3 4)", 4);
    CHECK(p.then(q)(2) == 4);

    // Restriction of (1 2 3) to {1, 3} maps onto {2, 1}; reindexed it swaps.
    const Permutation r = p.restrict_and_reindex({1, 3});
    CHECK(r == Permutation::transposition(2, 1, 2));
}

TEST_CASE("koszul suite") {
    for (const CheckResult& r : run_suite("koszul")) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
