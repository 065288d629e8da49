#include "equifreq/errors.hpp"
#include "equifreq/identities.hpp"
#include "property_suites.hpp"

#include <doctest.h>

#include <array>
#include <set>
#include <vector>

using namespace equifreq;

TEST_CASE("two-products expansion: the worked example") {
    const SquareIdentity id = bf_expand({4, 3, 2, 1});
    CHECK(id.side1() == std::array<BigInt, 2>{11, 2});
    CHECK(id.side2() == std::array<BigInt, 2>{10, 5});
    CHECK(id.norm() == 125);
    CHECK_FALSE(id.trivial());
    CHECK(id.str() == "11^2+2^2=10^2+5^2=125");
}

TEST_CASE("identity construction: validation and canonical layout") {
    CHECK_THROWS_AS(SquareIdentity(1, 2, 3, 4), NotAnIdentity);
    CHECK_THROWS_AS(SquareIdentity(11, 2, 10, 4), NotAnIdentity);

    // entry order, side order and signs carry no information
    CHECK(SquareIdentity(5, 10, 11, 2) == SquareIdentity(2, 11, 10, 5));
    CHECK(SquareIdentity(-5, 10, 11, -2) == SquareIdentity(5, 10, 11, 2));
    const SquareIdentity id(5, 10, 11, 2);
    CHECK(id.side1() == std::array<BigInt, 2>{11, 2});
    CHECK(id.side2() == std::array<BigInt, 2>{10, 5});

    const SquareIdentity t(3, 4, 4, 3);
    CHECK(t.trivial());
    CHECK_FALSE(t.all_zero());

    const SquareIdentity z(0, 0, 0, 0);
    CHECK(z.all_zero());
    CHECK(z.trivial());
    CHECK(z.norm() == 0);

    const SquareIdentity withzero(0, 5, 4, 3);
    CHECK(withzero.side1() == std::array<BigInt, 2>{5, 0});
    CHECK(withzero.side2() == std::array<BigInt, 2>{4, 3});

    CHECK(SquareIdentity(7, 1, 5, 5) < SquareIdentity(8, 1, 7, 4));  // by norm
}

TEST_CASE("primitive normalization") {
    const SquareIdentity doubled(14, 2, 10, 10);
    const SquareIdentity prim = primitive_normalize(doubled);
    CHECK(prim == SquareIdentity(7, 1, 5, 5));
    CHECK(primitive_normalize(prim) == prim);  // idempotent
    CHECK_THROWS_AS(primitive_normalize(SquareIdentity(0, 0, 0, 0)), AllZero);
}

TEST_CASE("parameter recovery: pinned canonical witnesses") {
    CHECK(recover_params(SquareIdentity(11, 2, 10, 5)) == BFParams{1, 2, 3, -4});
    CHECK(recover_params(SquareIdentity(7, 1, 5, 5)) == BFParams{1, 3, 1, -2});
    CHECK(recover_params(SquareIdentity(3, 0, 3, 0)) == BFParams{3, 0, 1, 0});
    CHECK(recover_params(SquareIdentity(1, 1, 1, 1)) == BFParams{1, 1, 1, 0});
    CHECK_THROWS_AS(recover_params(SquareIdentity(0, 0, 0, 0)), DegenerateIdentity);
}

TEST_CASE("recovery round-trips over an enumerated range") {
    const auto ids = enumerate_identities(30);
    CHECK(ids.size() > 10);
    for (const SquareIdentity& id : ids) {
        CAPTURE(id.str());
        CHECK(bf_expand(recover_params(id)) == id);
    }
}

TEST_CASE("enumeration matches a quadruple-loop search") {
    const int M = 12;
    std::set<SquareIdentity> expected_set;
    for (int a = 1; a <= M; ++a) {
        for (int b = 1; b <= M; ++b) {
            for (int c = 1; c <= M; ++c) {
                for (int d = 1; d <= M; ++d) {
                    if (a * a + b * b != c * c + d * d) continue;
                    const SquareIdentity id(a, b, c, d);
                    if (!id.trivial()) expected_set.insert(id);
                }
            }
        }
    }
    const std::vector<SquareIdentity> expected(expected_set.begin(), expected_set.end());
    const auto got = enumerate_identities(M);
    REQUIRE(got.size() == expected.size());
    CHECK(got == expected);  // the set's order is the enumeration order
}

TEST_CASE("the smallest nontrivial identities") {
    const auto ids = enumerate_identities(8);
    REQUIRE(ids.size() == 2);
    CHECK(ids[0] == SquareIdentity(7, 1, 5, 5));
    CHECK(ids[0].norm() == 50);
    CHECK(ids[1] == SquareIdentity(8, 1, 7, 4));
    CHECK(ids[1].norm() == 65);

    const auto ids9 = enumerate_identities(9);
    REQUIRE(ids9.size() == 3);
    CHECK(ids9[2] == SquareIdentity(9, 2, 7, 6));
    CHECK(ids9[2].norm() == 85);

    CHECK(enumerate_identities(1).empty());
    CHECK_THROWS_AS(enumerate_identities(0), InvalidParams);
}

TEST_CASE("randomized expansion/recovery contract") {
    const auto res = testsuites::bf_expand_suite(3000, 21);
    CHECK(res.iterations == 3000);
    CHECK(res.failures == 0);
}
