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

/// Result of exhaustive memoryless-strategy enumeration.
struct OracleResult {
    StateSet region[2];
    MemorylessStrategy witness[2]; // total on the owner's states

    const StateSet& region_of(Player p) const { return region[index(p)]; }
    const MemorylessStrategy& witness_of(Player p) const { return witness[index(p)]; }
};

struct OracleLimits {
    std::size_t max_states = 12;
    std::uint64_t max_strategy_pairs = 20'000'000;
};

/**
 * Solves a small game by enumerating every pair of memoryless strategies.
 * Under fixed memoryless strategies each play is a lasso reached within
 * |S| steps; it is judged by the least priority on the cycle (parity) or
 * by membership of the visited states in the marked set.
 *
 * Throws std::length_error when the game exceeds `limits`.
 */
OracleResult brute_force_solve(const GraphGame& game, OracleLimits limits = {});

/// Does the play from `start` under the two fixed strategies satisfy
/// player 1's objective? Strategies must be defined wherever the play
/// needs them before it is decided.
bool play_wins_for_p1(const GraphGame& game, StateId start,
                      const MemorylessStrategy& p1, const MemorylessStrategy& p2);

/**
 * Checks that `strategy` wins from every state of `from` against every
 * memoryless strategy of the opponent. A play reaching a state of the
 * strategy's player where it is undefined counts as lost.
 */
bool verify_strategy(const GraphGame& game, const MemorylessStrategy& strategy,
                     const StateSet& from, OracleLimits limits = {});

} // namespace stratdt
