#include <benchmark/benchmark.h>

#include <random>

#include "tri4/colouring.hpp"
#include "tri4/coxeter.hpp"
#include "tri4/davis.hpp"
#include "tri4/face_classes.hpp"
#include "tri4/homology.hpp"
#include "tri4/moves.hpp"
#include "tri4/smith.hpp"
#include "tri4/trisection.hpp"

using namespace tri4;

namespace {

// one shared Davis chain so the construction cost is paid once
struct Shared {
    CosetTable table = davis_coset_table();
    Triangulation davis = davis_identify(table, build_120cell(table)).tri;
    FaceClasses classes = FaceClasses::compute(davis, 0);
    Colouring colouring = davis_colouring(davis, classes);
};

const Shared& shared() {
    static const Shared s;
    return s;
}

} // namespace

static void CosetEnumerationH4(benchmark::State& state) {
    for (auto _ : state) {
        const CosetTable table = coset_enumerate(CoxeterMatrix::h4(), {});
        benchmark::DoNotOptimize(table.size());
    }
}
BENCHMARK(CosetEnumerationH4)->Unit(benchmark::kMillisecond);

static void FaceClassification(benchmark::State& state) {
    const Triangulation& tri = shared().davis;
    const int dim = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const FaceClasses fc = FaceClasses::compute(tri, dim);
        benchmark::DoNotOptimize(fc.count());
    }
    state.SetItemsProcessed(state.iterations() * tri.size() *
                            faces_per_pentachoron(dim));
}
BENCHMARK(FaceClassification)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void MovePipelineDavis(benchmark::State& state) {
    const Shared& s = shared();
    for (auto _ : state) {
        const PipelineResult out = run_pipeline(s.davis, s.classes, s.colouring);
        benchmark::DoNotOptimize(out.tri.size());
    }
    state.SetItemsProcessed(state.iterations() * 7200); // moves per run
}
BENCHMARK(MovePipelineDavis)->Unit(benchmark::kMillisecond);

static void TrisectionExtractionDavis(benchmark::State& state) {
    const Shared& s = shared();
    const PipelineResult out = run_pipeline(s.davis, s.classes, s.colouring);
    const FaceClasses post = FaceClasses::compute(out.tri, 0);
    for (auto _ : state) {
        const TrisectionReport report =
            trisection_report(out.tri, post, out.colouring);
        benchmark::DoNotOptimize(report.genus);
    }
}
BENCHMARK(TrisectionExtractionDavis)->Unit(benchmark::kMillisecond);

static void SmithNormalFormDavis(benchmark::State& state) {
    const GroupPresentation pres = pi1_presentation(shared().davis);
    for (auto _ : state) {
        const Homology1 h = homology_of_presentation(pres);
        benchmark::DoNotOptimize(h.beta1);
    }
}
BENCHMARK(SmithNormalFormDavis)->Unit(benchmark::kMillisecond);

static void SmithNormalFormRandomSparse(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> pos(0, n - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    SparseIntMatrix matrix(n, n);
    for (std::int64_t k = 0; k < 5 * n; ++k)
        matrix.add(pos(rng), pos(rng), coeff(rng));
    for (auto _ : state) {
        const SmithForm f = smith_normal_form(matrix);
        benchmark::DoNotOptimize(f.rank);
    }
    state.SetComplexityN(n);
}
BENCHMARK(SmithNormalFormRandomSparse)
    ->RangeMultiplier(4)
    ->Range(64, 4096)
    ->Unit(benchmark::kMillisecond)
    ->Complexity();

BENCHMARK_MAIN();
