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

#include <vector>

#include "stratdt/game.hpp"

namespace stratdt {

struct AttractorResult {
    StateSet region;
    /// Distance to the target in forcing steps; -1 outside the region.
    std::vector<int> rank;
    /// Defined on the attracting player's states in region \ target.
    MemorylessStrategy strategy;
};

/**
 * Least set from which `player` can force a visit to `target`, computed
 * inside the subgame `within` (edges leaving `within` are ignored). The
 * strategy picks, at every owned state, the lowest-index action whose
 * successor has strictly smaller rank.
 */
AttractorResult attractor(const GraphGame& game, Player player, const StateSet& target,
                          const StateSet& within);
AttractorResult attractor(const GraphGame& game, Player player, const StateSet& target);

/// Winning regions (a partition of the states) and winning strategies of both players.
struct Solution {
    StateSet region[2];
    MemorylessStrategy strategy[2];

    const StateSet& region_of(Player p) const { return region[index(p)]; }
    const MemorylessStrategy& strategy_of(Player p) const { return strategy[index(p)]; }
    Player winner(StateId s) const { return region[0].contains(s) ? Player::P1 : Player::P2; }
};

/// Safety and reachability games via a single attractor computation.
Solution solve_safety(const GraphGame& game);

/// Recursive Zielonka algorithm for parity games (any number of priorities).
Solution zielonka(const GraphGame& game);

/// Dispatches on the game's objective.
Solution solve(const GraphGame& game);

} // namespace stratdt
