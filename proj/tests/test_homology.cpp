#include <numeric>

#include "doctest.h"
#include "fixtures.hpp"
#include "tri4/errors.hpp"
#include "tri4/homology.hpp"
#include "tri4/moves.hpp"
#include "tri4/presentation.hpp"

using namespace tri4;
using namespace tri4::tests;

TEST_CASE("presentation of the 5-simplex boundary") {
    const GroupPresentation pres = pi1_presentation(boundary_5_simplex());
    // 15 dual edges minus 5 spanning-tree edges
    CHECK(pres.generators == 10);
    CHECK(pres.relators.size() == 20); // one per triangle class
    CHECK(pres.generator_edges.size() == 10);
    // every letter addresses a real generator
    for (const auto& rel : pres.relators)
        for (std::int64_t letter : rel) {
            CHECK(letter != 0);
            CHECK(std::abs(letter) <= pres.generators);
        }
}

TEST_CASE("S^4 has trivial first homology") {
    const Homology1 h = homology_h1(boundary_5_simplex());
    CHECK(h.beta1 == 0);
    CHECK(h.torsion.empty());
    CHECK(h.rank == 10);
}

TEST_CASE("the double pentachoron abelianises to the trivial group") {
    const Homology1 h = homology_h1(double_pentachoron());
    CHECK(h.beta1 == 0);
    CHECK(h.torsion.empty());
}

TEST_CASE("beta1 is invariant under the move pipeline") {
    const Triangulation tri = boundary_5_simplex();
    const PipelineResult out =
        run_pipeline(tri, FaceClasses::compute(tri, 0),
                     pair_colouring_for_boundary_5_simplex());
    CHECK(homology_h1(out.tri).beta1 == homology_h1(tri).beta1);
}

TEST_CASE("homology is unchanged when two pentachora are swapped") {
    const Triangulation tri = boundary_5_simplex();
    std::vector<PentId> perm(tri.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[1], perm[4]);
    const Triangulation swapped = relabel(tri, perm);
    const Homology1 a = homology_h1(tri);
    const Homology1 b = homology_h1(swapped);
    CHECK(a.beta1 == b.beta1);
    CHECK(a.torsion == b.torsion);
}

TEST_CASE("duality identity gives beta2") {
    CHECK(betti2_from_duality(26, 24) == 72);
    CHECK(betti2_from_duality(2, 0) == 0);
    CHECK(betti2_from_duality(0, 1) == 0);   // S^1 x S^3
    CHECK(betti2_from_duality(-4, 4) == 2);  // S_2 x S^2
    CHECK_THROWS_WITH_AS(betti2_from_duality(0, 0),
                         "betti2_from_duality: inconsistent invariants (chi = 0, "
                         "beta1 = 0 give beta2 = -2)",
                         UserError);
}

TEST_CASE("presentation requires a closed connected complex") {
    CHECK_THROWS_AS(pi1_presentation(Triangulation(1)), UserError);
    Triangulation two(4);
    for (int f = 0; f < 5; ++f) {
        two.glue_pair(0, f, 1, f, Perm5::identity());
        two.glue_pair(2, f, 3, f, Perm5::identity());
    }
    CHECK_THROWS_AS(pi1_presentation(two), UserError);
}

TEST_CASE("presentation text export is sorted and stable") {
    const GroupPresentation pres = pi1_presentation(double_pentachoron());
    const std::string text = write_presentation(pres);
    CHECK(text.rfind("pres v1\ngens ", 0) == 0);
    CHECK(text == write_presentation(pres));
}
