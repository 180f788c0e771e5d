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

#include "stratdt/solver.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace stratdt {

AttractorResult attractor(const GraphGame& game, Player player, const StateSet& target,
                          const StateSet& within)
{
    const auto n = game.num_states();
    AttractorResult out{StateSet(n), std::vector<int>(n, -1), MemorylessStrategy(player, n)};

    // escapes[s]: opponent edges from s that stay in `within` and are not yet attracted
    std::vector<std::size_t> escapes(n, 0);
    std::deque<StateId> queue;
    for (StateId s = 0; s < n; ++s) {
        if (!within.contains(s)) continue;
        if (target.contains(s)) {
            out.region.insert(s);
            out.rank[s] = 0;
            queue.push_back(s);
            continue;
        }
        for (const auto& e : game.actions(s)) {
            if (within.contains(e.target)) ++escapes[s];
        }
    }

    // FIFO order makes rank[s] = 1 + (the rank of the attracting layer).
    while (!queue.empty()) {
        const StateId t = queue.front();
        queue.pop_front();
        for (StateId p : game.predecessors(t)) {
            if (!within.contains(p) || out.region.contains(p)) continue;
            bool attracted = game.owner(p) == player || --escapes[p] == 0;
            if (attracted) {
                out.region.insert(p);
                out.rank[p] = out.rank[t] + 1;
                queue.push_back(p);
            }
        }
    }

    for (StateId s = 0; s < n; ++s) {
        if (out.rank[s] <= 0 || game.owner(s) != player) continue;
        const auto acts = game.actions(s);
        for (std::size_t a = 0; a < acts.size(); ++a) {
            const auto t = acts[a].target;
            if (out.region.contains(t) && out.rank[t] < out.rank[s]) {
                out.strategy.set(s, static_cast<int>(a));
                break;
            }
        }
    }
    return out;
}

AttractorResult attractor(const GraphGame& game, Player player, const StateSet& target)
{
    return attractor(game, player, target, StateSet(game.num_states(), true));
}

namespace {

/// Lowest-index action of each `player` state in `where` that stays in `where`.
void stay_inside(const GraphGame& game, Player player, const StateSet& where, MemorylessStrategy& strategy)
{
    for (StateId s : where.members()) {
        if (game.owner(s) != player) continue;
        const auto acts = game.actions(s);
        for (std::size_t a = 0; a < acts.size(); ++a) {
            if (where.contains(acts[a].target)) {
                strategy.set(s, static_cast<int>(a));
                break;
            }
        }
    }
}

Solution empty_solution(std::size_t n)
{
    Solution sol;
    for (int p = 0; p < 2; ++p) {
        sol.region[p] = StateSet(n);
        sol.strategy[p] = MemorylessStrategy(static_cast<Player>(p), n);
    }
    return sol;
}

Solution zielonka_rec(const GraphGame& game, const StateSet& within)
{
    const auto n = game.num_states();
    Solution sol = empty_solution(n);
    if (within.empty()) return sol;

    unsigned least = std::numeric_limits<unsigned>::max();
    for (StateId s : within.members()) least = std::min(least, game.priority(s));
    const Player alpha = least % 2 == 0 ? Player::P1 : Player::P2;
    const Player beta = opponent(alpha);

    StateSet top(n);
    for (StateId s : within.members()) {
        if (game.priority(s) == least) top.insert(s);
    }
    auto attr = attractor(game, alpha, top, within);

    StateSet rest = within;
    rest -= attr.region;
    Solution sub = zielonka_rec(game, rest);

    if (sub.region_of(beta).empty()) {
        // alpha wins the whole subgame
        sol.region[index(alpha)] = within;
        auto& strat = sol.strategy[index(alpha)];
        strat.adopt(sub.strategy_of(alpha), rest);
        StateSet attracted = attr.region;
        attracted -= top;
        strat.adopt(attr.strategy, attracted);
        // on top-priority states any move that stays in the subgame wins
        MemorylessStrategy on_top(alpha, n);
        stay_inside(game, alpha, within, on_top);
        strat.adopt(on_top, top);
        return sol;
    }

    auto escape = attractor(game, beta, sub.region_of(beta), within);
    StateSet remaining = within;
    remaining -= escape.region;
    Solution sub2 = zielonka_rec(game, remaining);

    sol.region[index(alpha)] = sub2.region_of(alpha);
    sol.strategy[index(alpha)] = sub2.strategy_of(alpha);

    StateSet beta_region = escape.region;
    beta_region |= sub2.region_of(beta);
    sol.region[index(beta)] = beta_region;
    auto& bstrat = sol.strategy[index(beta)];
    bstrat.adopt(sub2.strategy_of(beta), sub2.region_of(beta));
    StateSet attracted = escape.region;
    attracted -= sub.region_of(beta);
    bstrat.adopt(escape.strategy, attracted);
    bstrat.adopt(sub.strategy_of(beta), sub.region_of(beta));
    return sol;
}

} // namespace

Solution solve_safety(const GraphGame& game)
{
    if (game.is_parity()) throw std::invalid_argument("solve_safety: game has a parity objective");
    const auto n = game.num_states();
    Solution sol = empty_solution(n);

    // The reachability player attracts to the decided states.
    const Player reacher = game.objective() == ObjectiveKind::Reachability ? Player::P1 : Player::P2;
    const Player keeper = opponent(reacher);
    auto attr = attractor(game, reacher, game.decided_states());

    sol.region[index(reacher)] = attr.region;
    sol.strategy[index(reacher)] = attr.strategy;
    sol.region[index(keeper)] = attr.region.complement();
    stay_inside(game, keeper, sol.region[index(keeper)], sol.strategy[index(keeper)]);
    return sol;
}

Solution zielonka(const GraphGame& game)
{
    if (!game.is_parity()) throw std::invalid_argument("zielonka: game has no priority annotation");
    return zielonka_rec(game, StateSet(game.num_states(), true));
}

Solution solve(const GraphGame& game)
{
    return game.is_parity() ? zielonka(game) : solve_safety(game);
}

} // namespace stratdt
