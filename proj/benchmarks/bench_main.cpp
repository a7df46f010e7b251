#include <benchmark/benchmark.h>

#include "skewtab/skewtab.hpp"

using namespace skewtab;

namespace {

const char* kShapes[] = {"3,3/2,0;3", "4,3,1/2,0,0;3", "5,4,2/3,1,0;3", "4,4,4/2,1,0;4"};

void BM_Build(benchmark::State& st) {
    auto s = parse_shape(kShapes[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(build(s));
    st.counters["vertices"] = static_cast<double>(build(s).L.size());
}
BENCHMARK(BM_Build)->DenseRange(0, 3);

void BM_DcVerify(benchmark::State& st) {
    auto TL = tag_skew(build(parse_shape(kShapes[st.range(0)])));
    for (auto _ : st) benchmark::DoNotOptimize(dc_verify(TL));
}
BENCHMARK(BM_DcVerify)->DenseRange(0, 3);

void BM_LieRelations(benchmark::State& st) {
    auto SL = build(parse_shape(kShapes[st.range(0)]));
    auto TL = tag_skew(SL);
    auto G = generator_matrices(TL);
    auto rd = root_data(Kind::A, SL.shape.n - 1);
    for (auto _ : st) benchmark::DoNotOptimize(verify_lie_relations(G, rd, 1 << 20));
}
BENCHMARK(BM_LieRelations)->DenseRange(0, 2);

void BM_Rgf(benchmark::State& st) {
    auto L = build(parse_shape(kShapes[st.range(0)])).L;
    for (auto _ : st) benchmark::DoNotOptimize(rgf(L));
}
BENCHMARK(BM_Rgf)->DenseRange(0, 3);

void BM_ZsDecompose(benchmark::State& st) {
    auto s = parse_shape(kShapes[st.range(0)]);
    Weight nu(s.n - 1, 0);
    for (auto _ : st) benchmark::DoNotOptimize(zs_decompose(s, nu));
}
BENCHMARK(BM_ZsDecompose)->DenseRange(0, 3);

void BM_Dual(benchmark::State& st) {
    auto s = parse_shape(kShapes[st.range(0)]);
    auto A = build(shape_op(s, ShapeOp::Star)).L;
    auto B = lattice_op(build(s).L, ShapeOp::Star);
    for (auto _ : st) benchmark::DoNotOptimize(check_iso(A, B));
}
BENCHMARK(BM_Dual)->DenseRange(0, 2);

const char* kOrth[] = {"B:3,1", "B:3,2", "D:4,1", "D:5,2"};

void BM_BuildOrth(benchmark::State& st) {
    auto spec = parse_orth(kOrth[st.range(0)]);
    for (auto _ : st) benchmark::DoNotOptimize(build_orth(spec));
}
BENCHMARK(BM_BuildOrth)->DenseRange(0, 3);

void BM_OrthProducts(benchmark::State& st) {
    auto OL = build_orth(parse_orth(kOrth[st.range(0)]));
    for (auto _ : st) {
        auto P = edge_products(OL);
        benchmark::DoNotOptimize(dc_verify_products(OL.L, P));
    }
}
BENCHMARK(BM_OrthProducts)->DenseRange(0, 3);

}  // namespace

BENCHMARK_MAIN();
