#include "doctest.h"
#include "tri4/davis.hpp"
#include "tri4/errors.hpp"
#include "tri4/face_classes.hpp"
#include "tri4/homology.hpp"
#include "tri4/io.hpp"
#include "tri4/moves.hpp"
#include "tri4/trisection.hpp"

using namespace tri4;

namespace {

// built once; the construction is deterministic and read-only afterwards
struct DavisFixture {
    CosetTable table = davis_coset_table();
    Triangulation bounded = build_120cell(table);
    DavisManifold manifold = davis_identify(table, bounded);
    FaceClasses classes = FaceClasses::compute(manifold.tri, 0);
    Colouring colouring = davis_colouring(manifold.tri, classes);
};

const DavisFixture& fixture() {
    static const DavisFixture f;
    return f;
}

} // namespace

TEST_CASE("the bounded 120-cell complex has one boundary facet per pentachoron") {
    const Triangulation& bounded = fixture().bounded;
    CHECK(bounded.size() == 14'400);
    CHECK(bounded.unglued_facet_count() == 14'400);
    for (PentId p = 0; p < bounded.size(); ++p) {
        CHECK_FALSE(bounded.is_glued(p, 4)); // always opposite the type-4 slot
        for (int f = 0; f < 4; ++f) CHECK(bounded.is_glued(p, f));
    }
}

TEST_CASE("boundary census of the 120-cell") {
    const Triangulation& bounded = fixture().bounded;
    const FaceClasses classes = FaceClasses::compute(bounded, 0);
    std::array<std::int64_t, 5> counts{};
    for (std::int32_t cls = 0; cls < classes.count(); ++cls) {
        const Corner rep = classes.representative(cls);
        ++counts[bounded.type_of(rep.pent, rep.face)];
    }
    CHECK(counts == std::array<std::int64_t, 5>{600, 1200, 720, 120, 1});
}

TEST_CASE("internal gluings preserve vertex types") {
    CHECK(validate(fixture().bounded).valid); // validate() checks types
}

TEST_CASE("exactly one identification candidate passes") {
    const DavisSearch& search = fixture().manifold.search;
    CHECK(search.candidates.size() == 32); // involutions of <r0,r1,r2>
    REQUIRE(search.passing.size() == 1);
    const DavisCandidate& winner = search.candidates[search.passing.front()];
    CHECK(winner.w_word.size() == 15); // the central element of <r0,r1,r2>
    CHECK(winner.type_counts ==
          std::array<std::int64_t, 5>{1, 60, 144, 60, 1});
    CHECK(winner.chi == 26);
    // the identity twist (pure antipodal pairing) is in the search space
    // and fails: its closed complex is non-orientable
    CHECK(search.candidates.front().w_coset == 0);
    CHECK_FALSE(search.candidates.front().passes);
    CHECK(search.candidates.front().failure == "not orientable");
}

TEST_CASE("the closed Davis triangulation") {
    const Triangulation& tri = fixture().manifold.tri;
    CHECK(tri.size() == 14'400);
    const ValidationReport r = validate(tri);
    CHECK(r.valid);
    CHECK(r.closed);
    CHECK(orientability(tri).orientable);
    const FVector fv = f_vector(tri);
    CHECK(fv.f[4] == 14'400);
    CHECK(fv.chi == 26);
}

TEST_CASE("type-derived colouring: 61/144/61 classes, verifies") {
    const DavisFixture& f = fixture();
    CHECK(f.classes.count() == 266);
    std::array<std::int64_t, 3> sizes{};
    for (std::uint8_t c : f.colouring.by_class) ++sizes[c];
    CHECK(sizes == std::array<std::int64_t, 3>{61, 144, 61});
    CHECK(verify_colouring(f.manifold.tri, f.classes, f.colouring).ok);
}

TEST_CASE("pre-move colour-1 spine is 144 isolated vertices") {
    const DavisFixture& f = fixture();
    const SpineGraph s = spine_graph(f.manifold.tri, f.classes, f.colouring, 1);
    CHECK(s.vertices == 144);
    CHECK(s.edges == 0);
    CHECK(s.components == 144);
    CHECK_FALSE(s.connected);
}

TEST_CASE("pre-move extraction refuses: the spine is disconnected") {
    const DavisFixture& f = fixture();
    CHECK_THROWS_AS(trisection_report(f.manifold.tri, f.classes, f.colouring),
                    UserError);
}

TEST_CASE("Davis pipeline: 7,200 pairs, 28,800 pentachora, chi 26") {
    const DavisFixture& f = fixture();
    const DoublePairing pairing =
        pair_doubles(f.manifold.tri, f.classes, f.colouring);
    CHECK(pairing.pairs.size() == 7'200);
    for (const PentPair& pair : pairing.pairs) CHECK(pair.apex_colour == 1);

    const PipelineResult out =
        run_pipeline(f.manifold.tri, f.classes, f.colouring);
    CHECK(out.tri.size() == 28'800);
    CHECK(out.f_after.chi == 26);
    CHECK(out.orientable_before);
    CHECK(out.orientable_after);

    const FaceClasses post = FaceClasses::compute(out.tri, 0);
    const TrisectionReport report =
        trisection_report(out.tri, post, out.colouring);
    CHECK(report.genus == 7'201);
    CHECK(report.handle_genus == std::array<std::int64_t, 3>{60, 7'057, 60});
    CHECK(report.surface.squares == 28'800);
    CHECK(report.surface.vertices == 14'400);
    CHECK(report.surface.chi == -14'400);
    CHECK(report.spines[1].vertices == 144);
    CHECK(report.spines[1].edges == 7'200);
    CHECK(report.chi == 26);
    CHECK(report.chi_check);
}

TEST_CASE("Davis homology: beta1 = 24, beta2 = 72 by duality") {
    const DavisFixture& f = fixture();
    const GroupPresentation pres = pi1_presentation(f.manifold.tri);
    CHECK(pres.generators == 21'601); // 36,000 dual edges minus a spanning tree
    const Homology1 h = homology_of_presentation(pres);
    CHECK(h.beta1 == 24);
    CHECK(betti2_from_duality(26, h.beta1) == 72);
}

TEST_CASE("dual graph of the Davis triangulation") {
    const DualGraph dg = dual_graph(fixture().manifold.tri);
    CHECK(dg.nodes == 14'400);
    CHECK(dg.edges == 36'000);
    CHECK(dg.connected);
}

TEST_CASE("Davis triangulation round-trips through the file format") {
    const Triangulation& tri = fixture().manifold.tri;
    const std::string once = write_triangulation(tri);
    std::istringstream in(once);
    const Triangulation back = read_triangulation(in);
    CHECK(write_triangulation(back) == once);
    CHECK(back.has_types());
}

TEST_CASE("build_120cell rejects tables of the wrong shape") {
    const CosetTable small =
        coset_enumerate(CoxeterMatrix::from_orders(2, {{1, 5}, {5, 1}}), {});
    CHECK_THROWS_AS(build_120cell(small), UserError);
}
