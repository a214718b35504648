#include <benchmark/benchmark.h>

#include <random>

#include "cogmap/fcrm.hpp"
#include "cogmap/modelio.hpp"

using namespace cogmap;

namespace {

ConceptSpace make_space(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
    return ConceptSpace(labels);
}

ConnectionMatrix random_simple(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::int64_t> entries(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) entries[i * n + j] = entry(rng);
        }
    }
    return ConnectionMatrix(make_space(n), MatrixKind::simple, entries);
}

void BM_HiddenPattern(benchmark::State& state) {
    std::mt19937 rng(12345);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FcmModel model{random_simple(rng, n)};
    const StateVector seed = StateVector::seed(model.space(), {0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hidden_pattern(model, seed));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_HiddenPattern)->RangeMultiplier(2)->Range(4, 16)->Complexity();

void BM_HiddenPair(benchmark::State& state) {
    std::mt19937 rng(54321);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    std::uniform_int_distribution<int> entry(-1, 1);
    std::vector<std::int64_t> entries(n * (n + 2));
    for (auto& e : entries) e = entry(rng);
    std::vector<std::string> dom;
    std::vector<std::string> ran;
    for (std::size_t i = 0; i < n; ++i) dom.push_back("d" + std::to_string(i));
    for (std::size_t i = 0; i < n + 2; ++i) ran.push_back("r" + std::to_string(i));
    const FrmModel model{
        RelationalMatrix(ConceptSpace(dom), ConceptSpace(ran), entries)};
    const StateVector seed = StateVector::seed(model.domain(), {0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(hidden_pair(model, seed));
    }
}
BENCHMARK(BM_HiddenPair)->RangeMultiplier(2)->Range(4, 16);

void BM_Compose(benchmark::State& state) {
    const FlcmModel model = load_fixture("ch7_stress_FLCM").flcm();
    const LinguisticState seed =
        LinguisticState::seed(model.space(), model.chain(), {{0, "high"}});
    for (auto _ : state) {
        benchmark::DoNotOptimize(compose(seed, model.matrix, CompositionOperator::max_min()));
    }
}
BENCHMARK(BM_Compose);

void BM_ParseFixture(benchmark::State& state) {
    const std::string text(fixture_text("ch5_public_T"));
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_model(text));
    }
}
BENCHMARK(BM_ParseFixture);

void BM_SerializeRoundTrip(benchmark::State& state) {
    const ModelDocument doc = load_fixture("ch4_combined_W");
    for (auto _ : state) {
        benchmark::DoNotOptimize(parse_model(serialize_model(doc)));
    }
}
BENCHMARK(BM_SerializeRoundTrip);

} // namespace

BENCHMARK_MAIN();
