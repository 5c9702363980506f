#include <array>

#include "doctest.h"
#include "fixtures.hpp"
#include "tri4/colouring.hpp"
#include "tri4/errors.hpp"

using namespace tri4;
using namespace tri4::tests;

TEST_CASE("pair colouring of the 5-simplex boundary verifies") {
    const Triangulation tri = boundary_5_simplex();
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const ColouringCheck check =
        verify_colouring(tri, classes, pair_colouring_for_boundary_5_simplex());
    CHECK(check.ok);
    CHECK(check.violating.empty());
}

TEST_CASE("monochromatic colouring violates every pentachoron") {
    const Triangulation tri = boundary_5_simplex();
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const ColouringCheck check =
        verify_colouring(tri, classes, Colouring{{0, 0, 0, 0, 0, 0}});
    CHECK_FALSE(check.ok);
    CHECK(check.violating.size() == 6);
}

TEST_CASE("verify rejects a mismatched colouring domain") {
    const Triangulation tri = boundary_5_simplex();
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    CHECK_THROWS_AS(verify_colouring(tri, classes, Colouring{{0, 1, 2}}), UserError);
}

TEST_CASE("find_colouring returns the lexicographically least colouring") {
    const Triangulation tri = boundary_5_simplex();
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const auto found = find_colouring(tri);
    REQUIRE(found.has_value());
    CHECK(verify_colouring(tri, classes, *found).ok);
    CHECK(found->by_class[0] == 0);

    // oracle: enumerate all 3^6 colourings, keep the least valid one
    std::vector<std::uint8_t> least;
    for (int code = 0; code < 729; ++code) {
        // digits most-significant first so the integer order is the
        // lexicographic order of the colour sequences
        Colouring cand;
        for (int i = 0, div = 243; i < 6; ++i, div /= 3)
            cand.by_class.push_back(static_cast<std::uint8_t>((code / div) % 3));
        if (verify_colouring(tri, classes, cand).ok) {
            least = cand.by_class;
            break;
        }
    }
    REQUIRE_FALSE(least.empty());
    CHECK(found->by_class == least);
}

TEST_CASE("find_colouring requires a closed complex") {
    CHECK_THROWS_AS(find_colouring(Triangulation(1)), UserError);
}

TEST_CASE("find_colouring honours its node budget") {
    CHECK_THROWS_AS(find_colouring(boundary_5_simplex(), 2), UserError);
}

TEST_CASE("double pentachoron is colourable") {
    const Triangulation tri = double_pentachoron();
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const auto found = find_colouring(tri);
    REQUIRE(found.has_value());
    CHECK(verify_colouring(tri, classes, *found).ok);
    CHECK(found->by_class == std::vector<std::uint8_t>{0, 0, 1, 1, 2});
}

TEST_CASE("colouring_from_types applies the type partition") {
    Triangulation tri = double_pentachoron();
    tri.set_types({0, 1, 2, 3, 4, 0, 1, 2, 3, 4});
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    const Colouring col = colouring_from_types(tri, classes);
    CHECK(col.by_class == std::vector<std::uint8_t>{0, 0, 1, 2, 2});
}

TEST_CASE("colouring_from_types requires types") {
    const Triangulation tri = double_pentachoron();
    const FaceClasses classes = FaceClasses::compute(tri, 0);
    CHECK_THROWS_AS(colouring_from_types(tri, classes), UserError);
}
