#include <cmath>

#include "doctest.h"
#include "tri4/bounds.hpp"
#include "tri4/errors.hpp"

using namespace tri4;

namespace {

constexpr double kPiSquared = 9.869604401089358;

InvariantSet davis_invariants() {
    InvariantSet inv;
    inv.chi = 26;
    inv.beta1 = 24;
    inv.beta2 = 72;
    inv.sigma = 14'400;
    inv.not_s4 = true;
    return inv;
}

} // namespace

TEST_CASE("Davis invariants give aggregate lower bound 96") {
    const BoundReport report = lower_bounds(davis_invariants());
    REQUIRE(report.aggregate_lower.has_value());
    CHECK(*report.aggregate_lower == 96);
    // both the Betti sum and the rank bound reach it
    for (const BoundLine& line : report.lines) {
        if (line.name == "betti-sum") CHECK(line.value == 96);
        if (line.name == "rank") CHECK(line.value == 96);
        if (line.name == "third-euler") CHECK(line.value == 9);
    }
}

TEST_CASE("S^1 x S^3 invariants give aggregate 1, sharp") {
    InvariantSet inv;
    inv.chi = 0;
    inv.beta1 = 1;
    inv.beta2 = 0;
    inv.not_s4 = true;
    const BoundReport report = lower_bounds(inv);
    REQUIRE(report.aggregate_lower.has_value());
    CHECK(*report.aggregate_lower == 1);
}

TEST_CASE("S_g x S^2 invariants give 2g+2") {
    for (std::int64_t g = 1; g <= 3; ++g) {
        InvariantSet inv;
        inv.chi = 4 - 4 * g;
        inv.beta1 = 2 * g;
        inv.beta2 = 2;
        inv.not_s4 = true;
        const BoundReport report = lower_bounds(inv);
        REQUIRE(report.aggregate_lower.has_value());
        CHECK(*report.aggregate_lower == 2 * g + 2);
    }
}

TEST_CASE("the genus-two classification bound fires for fake spheres") {
    InvariantSet inv;
    inv.chi = 2;
    inv.beta1 = 0;
    inv.beta2 = 0;
    inv.not_s4 = true;
    const BoundReport report = lower_bounds(inv);
    REQUIRE(report.aggregate_lower.has_value());
    CHECK(*report.aggregate_lower == 3);
}

TEST_CASE("duality violations are rejected") {
    InvariantSet inv;
    inv.chi = 26;
    inv.beta1 = 24;
    inv.beta2 = 71;
    CHECK_THROWS_AS(lower_bounds(inv), UserError);
}

TEST_CASE("more information never weakens the aggregate") {
    InvariantSet full = davis_invariants();
    InvariantSet bare;
    bare.chi = full.chi;
    bare.not_s4 = true;
    const BoundReport with = lower_bounds(full);
    const BoundReport without = lower_bounds(bare);
    REQUIRE(with.aggregate_lower.has_value());
    REQUIRE(without.aggregate_lower.has_value());
    CHECK(*with.aggregate_lower >= *without.aggregate_lower);
}

TEST_CASE("sigma upper bound") {
    CHECK(upper_bound_sigma(14'400) == 864'000);
    CHECK(upper_bound_sigma(1) == 60);
    CHECK(upper_bound_sigma(6) == 360);
    CHECK_THROWS_AS(upper_bound_sigma(0), UserError);
}

TEST_CASE("cover bounds for the Davis manifold at degree 2") {
    const BoundReport report = cover_bounds(davis_invariants(), 2);
    REQUIRE(report.aggregate_lower.has_value());
    REQUIRE(report.aggregate_upper.has_value());
    CHECK(*report.aggregate_lower == 18); // ceil(52/3)
    CHECK(*report.aggregate_upper == 1'728'000);
    CHECK(report.consistent);
}

TEST_CASE("degree-1 cover bounds reduce to the base bounds") {
    const InvariantSet inv = davis_invariants();
    const BoundReport cover = cover_bounds(inv, 1);
    const BoundReport base = lower_bounds(inv);
    REQUIRE(cover.aggregate_lower.has_value());
    // the cover lower bound is exactly the third-euler line of the base report
    for (const BoundLine& line : base.lines)
        if (line.name == "third-euler")
            CHECK(*cover.aggregate_lower == line.value);
    REQUIRE(cover.aggregate_upper.has_value());
    CHECK(*cover.aggregate_upper == upper_bound_sigma(*inv.sigma));
}

TEST_CASE("chi = 0 covers carry no growth flag") {
    InvariantSet inv;
    inv.chi = 0;
    inv.not_s4 = true;
    const BoundReport report = cover_bounds(inv, 5);
    for (const BoundLine& line : report.lines) {
        if (line.name == "cover-third-euler") CHECK(line.value == 0);
        if (line.name == "growth") CHECK_FALSE(line.applicable);
    }
}

TEST_CASE("hyperbolic bounds from chi = 26") {
    InvariantSet inv;
    inv.chi = 26;
    inv.not_s4 = true;
    const BoundReport report = hyperbolic_bounds(inv);
    double volume = 0.0;
    std::int64_t lb = -1;
    for (const BoundLine& line : report.lines) {
        if (line.name == "volume") volume = line.real_value;
        if (line.name == "volume-lower") lb = line.value;
    }
    CHECK(std::abs(volume - (104.0 / 3.0) * kPiSquared) < 1e-4);
    CHECK(volume == doctest::Approx(342.146285904).epsilon(1e-9));
    CHECK(lb == 13);
}

TEST_CASE("hyperbolic bounds from the smallest even chi") {
    InvariantSet inv;
    inv.chi = 0;
    inv.volume = (8.0 / 3.0) * kPiSquared;
    const BoundReport report = hyperbolic_bounds(inv);
    for (const BoundLine& line : report.lines)
        if (line.name == "volume-lower") CHECK(line.value == 1);
}

TEST_CASE("Davis hyperbolic constant C = 60 sigma / Vol") {
    InvariantSet inv = davis_invariants();
    const BoundReport report = hyperbolic_bounds(inv);
    bool seen = false;
    for (const BoundLine& line : report.lines)
        if (line.name == "volume-constant") {
            seen = true;
            const double expected = 864'000.0 / ((104.0 / 3.0) * kPiSquared);
            CHECK(line.real_value == doctest::Approx(expected).epsilon(1e-9));
            // six significant digits: 2525.24
            CHECK(std::abs(line.real_value - 2525.24) < 0.005);
        }
    CHECK(seen);
}

TEST_CASE("hyperbolic bounds reject odd or non-positive chi") {
    InvariantSet odd;
    odd.chi = 25;
    CHECK_THROWS_AS(hyperbolic_bounds(odd), UserError);
    InvariantSet neg;
    neg.chi = -2;
    CHECK_THROWS_AS(hyperbolic_bounds(neg), UserError);
}

TEST_CASE("hyperbolic chi/volume round trip is exact") {
    for (std::int64_t chi = 2; chi <= 40; chi += 2) {
        InvariantSet from_chi;
        from_chi.chi = chi;
        const BoundReport a = hyperbolic_bounds(from_chi);
        double volume = 0.0;
        for (const BoundLine& line : a.lines)
            if (line.name == "volume") volume = line.real_value;

        InvariantSet from_volume;
        from_volume.chi = 0;
        from_volume.volume = volume;
        const BoundReport b = hyperbolic_bounds(from_volume);
        double volume_back = 0.0;
        for (const BoundLine& line : b.lines)
            if (line.name == "volume") volume_back = line.real_value;
        CHECK(volume == volume_back); // bit-identical
    }
}

TEST_CASE("volume inconsistent with chi is rejected") {
    InvariantSet inv;
    inv.chi = 26;
    inv.volume = 340.0;
    CHECK_THROWS_AS(hyperbolic_bounds(inv), UserError);
}

TEST_CASE("Einstein bound arithmetic") {
    CHECK(einstein_bound(0, 0.0) == 0.0);
    CHECK(einstein_bound(16, 0.0) == 8.0);
    CHECK(einstein_bound(0, 7776.0 * kPiSquared) ==
          doctest::Approx(1.0).epsilon(1e-9));
    CHECK(einstein_bound(-3, 0.0) == 1.5);
}

TEST_CASE("stable records take the exact rational minimum") {
    const StableResult r =
        stable_records({{1, 10}, {2, 12}}, std::nullopt);
    CHECK(r.min_num == 6);
    CHECK(r.min_den == 1);
    CHECK(r.min_real == 6.0);
}

TEST_CASE("stable records carry the stable lower bound when available") {
    InvariantSet inv;
    inv.chi = 0;
    inv.not_s4 = true;
    const StableResult r = stable_records({{1, 1}}, inv);
    CHECK(r.min_num == 1);
    REQUIRE(r.stable_lower.has_value());
    CHECK(*r.stable_lower == 0); // consistent with stable genus 0
}

TEST_CASE("stable records reject bad input") {
    CHECK_THROWS_AS(stable_records({}, std::nullopt), UserError);
    CHECK_THROWS_AS(stable_records({{0, 1}}, std::nullopt), UserError);
}

TEST_CASE("non-reduced fractions are reduced") {
    const StableResult r = stable_records({{4, 6}}, std::nullopt);
    CHECK(r.min_num == 3);
    CHECK(r.min_den == 2);
}
