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


#pragma once

#include <cstddef>
#include <cstdint>

#include "stratdt/game.hpp"

namespace stratdt {

struct RandomGameOptions {
    std::size_t states = 8;
    unsigned priorities = 3; // parity only: priorities drawn from 0..priorities-1
    std::size_t max_degree = 3;
    ObjectiveKind kind = ObjectiveKind::Parity;
    /// Safety/reachability: a state is marked with probability marked_percent / 100.
    unsigned marked_percent = 30;
};

/**
 * Seeded random explicit game. Each state gets a random owner, 1 to
 * max_degree distinct successors (sorted by id) and a random priority or
 * marker. Identical options and seed give identical games on every platform.
 */
GraphGame random_game(const RandomGameOptions& options, std::uint64_t seed);

} // namespace stratdt
