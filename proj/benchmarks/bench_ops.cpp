#include "neutro/dsl/evaluator.hpp"
#include "neutro/dsl/parser.hpp"
#include "neutro/neutroset.hpp"
#include "neutro/taxonomy.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

using namespace neutro;

namespace {

// `parts` disjoint intervals, one inside each of `parts` equal slots of [0, 1].
IntervalUnion random_union(std::mt19937_64 &rng, int parts) {
    std::uniform_real_distribution<double> u(0.0, 0.5);
    std::vector<Interval> raw;
    const double slot = 1.0 / parts;
    for (int k = 0; k < parts; ++k) {
        const double a = slot * (k + u(rng));
        raw.push_back({a, a + slot * u(rng) * 0.9});
    }
    return IntervalUnion::canonicalize(std::move(raw));
}

std::string script_of(int elements) {
    std::string names;
    std::string body;
    for (int k = 0; k < elements; ++k) {
        const auto n = "e" + std::to_string(k);
        names += (k ? ", " : "") + n;
        body += (k ? ", " : "") + n + ": ([0.1,0.2]|[0.3,0.4], 0.2, {0.1,0.3})";
    }
    return "universe U = {" + names + "}\nset A over U {" + body + "}\nset B over U {" + body +
           "}\neval complement(A & B) | A\n";
}

} // namespace

static void BM_MinkowskiAdd(benchmark::State &state) {
    std::mt19937_64 rng(1);
    const auto a = random_union(rng, static_cast<int>(state.range(0)));
    const auto b = random_union(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_MinkowskiAdd)->Arg(1)->Arg(3)->Arg(16);

static void BM_MinkowskiMul(benchmark::State &state) {
    std::mt19937_64 rng(2);
    const auto a = random_union(rng, static_cast<int>(state.range(0)));
    const auto b = random_union(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MinkowskiMul)->Arg(1)->Arg(3)->Arg(16);

static void BM_TripleUnion(benchmark::State &state) {
    std::mt19937_64 rng(3);
    const auto x = NeutroTriple::clamped(random_union(rng, 3), random_union(rng, 3), random_union(rng, 3));
    const auto y = NeutroTriple::clamped(random_union(rng, 3), random_union(rng, 3), random_union(rng, 3));
    for (auto _ : state) benchmark::DoNotOptimize(unite(x, y));
}
BENCHMARK(BM_TripleUnion);

static void BM_Classify(benchmark::State &state) {
    const auto x = NeutroTriple::point(0.5, 0.2, 0.3);
    for (auto _ : state) benchmark::DoNotOptimize(classify_triple(x));
}
BENCHMARK(BM_Classify);

static void BM_ParseScript(benchmark::State &state) {
    const auto src = script_of(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(dsl::parse_source(src));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * src.size()));
}
BENCHMARK(BM_ParseScript)->Arg(10)->Arg(100);

static void BM_EvaluateScript(benchmark::State &state) {
    const auto script = dsl::parse_source(script_of(static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(dsl::evaluate(script));
}
BENCHMARK(BM_EvaluateScript)->Arg(10)->Arg(100);

BENCHMARK_MAIN();
