#include <numeric>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "tri4/smith.hpp"

using namespace tri4;
using tri4::tests::MinorOracle;

namespace {

SmithForm smith_of(const std::vector<std::vector<std::int64_t>>& a) {
    SparseIntMatrix m(static_cast<std::int64_t>(a.size()),
                      static_cast<std::int64_t>(a[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            m.add(static_cast<std::int64_t>(i), static_cast<std::int64_t>(j),
                  a[i][j]);
    return smith_normal_form(m);
}

} // namespace

TEST_CASE("known Smith forms") {
    CHECK(smith_of({{1, 0}, {0, 1}}).factors == std::vector<BigInt>{1, 1});
    CHECK(smith_of({{2, 0}, {0, 4}}).factors == std::vector<BigInt>{2, 4});
    CHECK(smith_of({{4, 0}, {0, 6}}).factors == std::vector<BigInt>{2, 12});
    CHECK(smith_of({{0, 0}, {0, 0}}).factors.empty());
    CHECK(smith_of({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}}).factors ==
          std::vector<BigInt>{2, 2, 156});
    const SmithForm f = smith_of({{6, 10}, {15, 0}});
    CHECK(f.rank == 2);
    CHECK(f.factors == std::vector<BigInt>{1, 150});
}

TEST_CASE("cokernel description") {
    // Z^3 / rows of [[2,0,0],[0,3,0]]: free rank 1, torsion Z/2 + Z/3 = Z/6
    const SmithForm f = smith_of({{2, 0, 0}, {0, 3, 0}});
    CHECK(f.rank == 2);
    CHECK(f.cokernel_free_rank() == 1);
    CHECK(f.factors == std::vector<BigInt>{1, 6});
    CHECK(f.torsion() == std::vector<BigInt>{6});
}

TEST_CASE("duplicate triplets accumulate") {
    SparseIntMatrix m(1, 1);
    m.add(0, 0, 2);
    m.add(0, 0, -2);
    CHECK(smith_normal_form(m).rank == 0);
}

TEST_CASE("random small matrices agree with the minor-gcd oracle") {
    std::mt19937_64 rng(123456);
    std::uniform_int_distribution<int> dim(1, 8), coeff(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        const int m = dim(rng), n = dim(rng);
        std::vector<std::vector<std::int64_t>> a(
            m, std::vector<std::int64_t>(static_cast<std::size_t>(n)));
        MinorOracle oracle;
        oracle.a.assign(m, std::vector<BigInt>(static_cast<std::size_t>(n)));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j) {
                const int v = coeff(rng);
                a[i][j] = v;
                oracle.a[i][j] = v;
            }
        const SmithForm fast = smith_of(a);
        const std::vector<BigInt> slow = oracle.invariant_factors();
        CHECK(fast.factors == slow);
    }
}

TEST_CASE("divisibility chain holds on random sparse matrices") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<int> coeff(-30, 30);
    std::uniform_int_distribution<int> pos(0, 29);
    for (int trial = 0; trial < 20; ++trial) {
        SparseIntMatrix m(30, 30);
        for (int k = 0; k < 120; ++k) m.add(pos(rng), pos(rng), coeff(rng));
        const SmithForm f = smith_normal_form(m);
        for (std::size_t i = 1; i < f.factors.size(); ++i)
            CHECK(f.factors[i] % f.factors[i - 1] == 0);
    }
}

TEST_CASE("determinism: identical input, identical factors") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> coeff(-9, 9);
    SparseIntMatrix m(40, 40);
    for (int i = 0; i < 200; ++i)
        m.add(rng() % 40, rng() % 40, coeff(rng));
    const SmithForm a = smith_normal_form(m);
    const SmithForm b = smith_normal_form(m);
    CHECK(a.factors == b.factors);
}
