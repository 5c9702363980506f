#include "doctest.h"
#include "tri4/coxeter.hpp"
#include "tri4/errors.hpp"

using namespace tri4;

TEST_CASE("dihedral sanity: I2(5) has order 10") {
    const CoxeterMatrix cox = CoxeterMatrix::from_orders(2, {{1, 5}, {5, 1}});
    CHECK(coset_enumerate(cox, {}).size() == 10);
    CHECK(coset_enumerate(cox, {0}).size() == 5);
}

TEST_CASE("the [5,3,3] group has order 14,400") {
    const CosetTable table = coset_enumerate(CoxeterMatrix::h4(), {});
    CHECK(table.size() == 14'400);
}

TEST_CASE("parabolic subgroup indexes of the [5,3,3] group") {
    // dodecahedral stabiliser <r0,r1,r2> and vertex stabiliser <r1,r2,r3>
    CHECK(coset_enumerate(CoxeterMatrix::h4(), {0, 1, 2}).size() == 120);
    CHECK(coset_enumerate(CoxeterMatrix::h4(), {1, 2, 3}).size() == 600);
}

TEST_CASE("generators act as fixed-point-free involutions on the group") {
    const CosetTable table = coset_enumerate(CoxeterMatrix::h4(), {});
    for (int g = 0; g < 4; ++g)
        for (std::int32_t c = 0; c < table.size(); ++c) {
            CHECK(table.act(c, g) != c);
            CHECK(table.act(table.act(c, g), g) == c);
        }
}

TEST_CASE("breadth-first words reproduce their cosets") {
    const CosetTable table = coset_enumerate(CoxeterMatrix::h4(), {});
    for (std::int32_t c = 0; c < table.size(); c += 997)
        CHECK(table.apply_word(0, table.word_of(c)) == c);
}

TEST_CASE("left multiplication commutes with the right action") {
    const CosetTable table = coset_enumerate(CoxeterMatrix::h4(), {});
    const std::int32_t w = table.act(table.act(0, 0), 1); // element r0 r1
    const std::vector<std::int32_t> left = table.left_multiplication(w);
    for (std::int32_t c = 0; c < table.size(); c += 499)
        for (int g = 0; g < 4; ++g)
            CHECK(left[table.act(c, g)] == table.act(left[c], g));
}

TEST_CASE("a tiny coset budget aborts deterministically") {
    CHECK_THROWS_WITH_AS(coset_enumerate(CoxeterMatrix::h4(), {}, 100),
                         "coset_enumerate: coset budget exhausted (100 cosets)",
                         UserError);
}

TEST_CASE("bad Coxeter matrices are rejected") {
    CHECK_THROWS_AS(CoxeterMatrix::from_orders(2, {{1, 1}, {1, 1}}), UserError);
    CHECK_THROWS_AS(CoxeterMatrix::from_orders(2, {{1, 3}, {4, 1}}), UserError);
    CHECK_THROWS_AS(CoxeterMatrix::from_orders(2, {{2, 3}, {3, 1}}), UserError);
}
