/*
 * Copyright 2026 The stratdt Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include <benchmark/benchmark.h>

#include "stratdt/bdd.hpp"
#include "stratdt/dtlearn.hpp"
#include "stratdt/random_game.hpp"
#include "stratdt/solver.hpp"
#include "stratdt/trainset.hpp"

using namespace stratdt;

namespace {

/// Training set of the initial-state winner's strategy on a random parity game.
TrainingSet strategy_train(std::size_t states, std::uint64_t seed)
{
    const auto g = random_game({.states = states, .priorities = 3, .max_degree = 4}, seed);
    const auto sol = zielonka(g);
    const auto p = sol.winner(g.initial());
    return build_training_set(g, naive_encode(g), sol.strategy_of(p), g.initial());
}

/// Picks a seed whose winning strategy reaches a reasonable number of states.
TrainingSet large_train(std::size_t states)
{
    TrainingSet best;
    for (std::uint64_t seed = 1; seed < 50; ++seed) {
        auto t = strategy_train(states, seed);
        if (t.size() > best.size()) best = std::move(t);
    }
    return best;
}

void BM_Zielonka(benchmark::State& state)
{
    const auto g = random_game({.states = static_cast<std::size_t>(state.range(0)), .priorities = 3}, 7);
    for (auto _ : state) benchmark::DoNotOptimize(zielonka(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Zielonka)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

void BM_Learn(benchmark::State& state)
{
    const auto train = large_train(static_cast<std::size_t>(state.range(0)));
    const LearnOptions options{static_cast<unsigned>(state.range(1)), state.range(2) != 0};
    for (auto _ : state) benchmark::DoNotOptimize(learn(train, options));
    state.counters["samples"] = static_cast<double>(train.size());
}
BENCHMARK(BM_Learn)->ArgsProduct({{64, 512, 2048}, {1, 2}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BddBuild(benchmark::State& state)
{
    const auto train = large_train(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(Bdd::from_good(train));
    state.counters["samples"] = static_cast<double>(train.size());
}
BENCHMARK(BM_BddBuild)->Arg(64)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

void BM_BddSift(benchmark::State& state)
{
    const auto train = large_train(static_cast<std::size_t>(state.range(0)));
    const auto bdd = Bdd::from_good(train);
    for (auto _ : state) benchmark::DoNotOptimize(sift(bdd));
}
BENCHMARK(BM_BddSift)->Arg(64)->Arg(512)->Arg(2048)->Unit(benchmark::kMicrosecond);

void BM_RandomOrders(benchmark::State& state)
{
    const auto train = large_train(512);
    for (auto _ : state) benchmark::DoNotOptimize(min_over_random_orders(train, static_cast<std::size_t>(state.range(0)), 1));
}
BENCHMARK(BM_RandomOrders)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
