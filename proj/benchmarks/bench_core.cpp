#include <benchmark/benchmark.h>

#include "repglt/drinfeld.hpp"
#include "repglt/gln_oracle.hpp"
#include "repglt/modular_weyl.hpp"
#include "repglt/walled_brauer.hpp"
#include "repglt/yangian.hpp"

using namespace repglt;

static void BM_ComposeEndomorphisms(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    ObjectWord w{r, 1};
    auto ms = enumerate_matchings(w, w);
    DiagramLC a(w, w), b(w, w);
    for (std::size_t i = 0; i < ms.size(); i += 2) a.add_term(ms[i], UniPolyT(1));
    for (std::size_t i = 1; i < ms.size(); i += 2) b.add_term(ms[i], UniPolyT::variable());
    for (auto _ : state) benchmark::DoNotOptimize(compose(a, b));
}
BENCHMARK(BM_ComposeEndomorphisms)->Arg(1)->Arg(2)->Arg(3);

static void BM_GramDeterminant(benchmark::State& state) {
    int r = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gram_determinant(r, 1));
}
BENCHMARK(BM_GramDeterminant)->Arg(1)->Arg(2);

static void BM_YoungSymmetrizerDimension(benchmark::State& state) {
    std::vector<long> lambda(static_cast<std::size_t>(state.range(0)), 1);
    lambda[0] = state.range(0) == 1 ? 1 : 2;
    for (auto _ : state) benchmark::DoNotOptimize(young_symmetrizer_dimension(lambda));
}
BENCHMARK(BM_YoungSymmetrizerDimension)->Arg(2)->Arg(3)->Arg(4);

static void BM_HomDimOracle(benchmark::State& state) {
    RationalField Q;
    ObjectWord w{1, 1};
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(hom_dim_gln(Q, n, w, w));
}
BENCHMARK(BM_HomDimOracle)->Arg(2)->Arg(4)->Arg(5);

static void BM_WeylModuleModP(benchmark::State& state) {
    long p = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(weyl_module_modp(p, {3, 1, 0}));
}
BENCHMARK(BM_WeylModuleModP)->Arg(7)->Arg(13);

static void BM_TensorAndVerify(benchmark::State& state) {
    FiniteField f7(7);
    auto a = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(1), f7.from_integer(0)));
    auto b = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(state.range(0)), f7.from_integer(0)));
    for (auto _ : state) {
        auto t = tensor_module(a, b);
        benchmark::DoNotOptimize(verify_rtt(t));
    }
}
BENCHMARK(BM_TensorAndVerify)->Arg(2)->Arg(4)->Arg(6);

static void BM_BruteForceIrreducible(benchmark::State& state) {
    FiniteField f7(7);
    auto a = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(2), f7.from_integer(0)));
    auto b = evaluation_module(gl2_irreducible_modp(f7, f7.from_integer(state.range(0)), f7.from_integer(1)));
    auto t = tensor_module(a, b);
    for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(t));
}
BENCHMARK(BM_BruteForceIrreducible)->Arg(3)->Arg(5);

static void BM_DrinfeldRoundTrip(benchmark::State& state) {
    RationalField Q;
    DrinfeldDataCR<RationalField> data(Q);
    std::vector<Rational> roots;
    for (long i = 0; i < state.range(0); ++i) roots.push_back(Rational(-i));
    data.bullet.push_back(FactoredPoly<RationalField>(Q, roots));
    data.circ.push_back(FactoredPoly<RationalField>(Q, {Rational(1, 2)}));
    for (auto _ : state) {
        auto hw = weight_from_drinfeld(data);
        benchmark::DoNotOptimize(drinfeld_from_weight(hw));
    }
}
BENCHMARK(BM_DrinfeldRoundTrip)->Arg(2)->Arg(4)->Arg(6);

static void BM_QdetAction(benchmark::State& state) {
    RationalField Q;
    auto m = evaluation_module(build_irreducible_gln(Q, std::vector<long>{2, 1, 0}));
    for (auto _ : state) benchmark::DoNotOptimize(qdet_action(m, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_QdetAction)->Arg(3)->Arg(6);

BENCHMARK_MAIN();
