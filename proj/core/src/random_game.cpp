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


#include "stratdt/random_game.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace stratdt {

GraphGame random_game(const RandomGameOptions& options, std::uint64_t seed)
{
    if (options.states == 0) throw std::invalid_argument("random_game: need at least one state");
    if (options.max_degree == 0) throw std::invalid_argument("random_game: max_degree must be positive");
    if (options.kind == ObjectiveKind::Parity && options.priorities == 0) {
        throw std::invalid_argument("random_game: need at least one priority");
    }
    // Modulo draws instead of std::uniform_int_distribution keep the
    // stream identical across standard library implementations.
    std::mt19937_64 rng(seed);
    const auto n = options.states;
    const auto max_deg = std::min(options.max_degree, n);

    GraphGame::Spec spec;
    spec.kind = options.kind;
    spec.owner.resize(n);
    spec.actions.resize(n);
    if (options.kind == ObjectiveKind::Parity) {
        spec.priorities.resize(n);
    } else {
        spec.marked.resize(n);
    }
    for (std::size_t s = 0; s < n; ++s) {
        spec.owner[s] = (rng() % 2 == 0) ? Player::P1 : Player::P2;
        if (options.kind == ObjectiveKind::Parity) {
            spec.priorities[s] = static_cast<unsigned>(rng() % options.priorities);
        } else {
            spec.marked[s] = rng() % 100 < options.marked_percent;
        }
        const auto degree = 1 + rng() % max_deg;
        std::vector<StateId> succ;
        while (succ.size() < degree) {
            const auto t = static_cast<StateId>(rng() % n);
            if (std::find(succ.begin(), succ.end(), t) == succ.end()) succ.push_back(t);
        }
        std::sort(succ.begin(), succ.end());
        for (auto t : succ) spec.actions[s].push_back(Edge{t, t});
    }
    spec.initial = 0;
    return GraphGame(std::move(spec));
}

} // namespace stratdt
