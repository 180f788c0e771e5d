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

#include "stratdt/oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace stratdt {

namespace {

enum class Outcome { P1Wins, P2Wins, Undefined };

/// Follows the unique play from `start`; next[s] < 0 marks a missing choice.
Outcome run_play(const GraphGame& game, const StateSet& decided, const std::vector<int>& next,
                 StateId start, std::vector<int>& seen_at)
{
    const auto n = game.num_states();
    std::fill(seen_at.begin(), seen_at.end(), -1);
    std::vector<StateId> path;
    path.reserve(n + 1);
    StateId s = start;
    for (;;) {
        if (decided.contains(s)) {
            // unsafe states lose for player 1, targets win for player 1
            return game.objective() == ObjectiveKind::Reachability ? Outcome::P1Wins : Outcome::P2Wins;
        }
        if (seen_at[s] >= 0) break;
        seen_at[s] = static_cast<int>(path.size());
        path.push_back(s);
        if (next[s] < 0) return Outcome::Undefined;
        s = static_cast<StateId>(next[s]);
    }
    switch (game.objective()) {
    case ObjectiveKind::Safety: return Outcome::P1Wins;
    case ObjectiveKind::Reachability: return Outcome::P2Wins;
    case ObjectiveKind::Parity: break;
    }
    unsigned least = std::numeric_limits<unsigned>::max();
    for (auto i = static_cast<std::size_t>(seen_at[s]); i < path.size(); ++i) {
        least = std::min(least, game.priority(path[i]));
    }
    return least % 2 == 0 ? Outcome::P1Wins : Outcome::P2Wins;
}

/// Mixed-radix enumeration of all memoryless strategies on `states`.
class StrategyCounter {
public:
    StrategyCounter(const GraphGame& game, std::vector<StateId> states)
        : game_(game), states_(std::move(states)), digits_(states_.size(), 0) {}

    static std::uint64_t count(const GraphGame& game, const std::vector<StateId>& states, std::uint64_t cap)
    {
        std::uint64_t total = 1;
        for (auto s : states) {
            total *= game.num_actions(s);
            if (total > cap) return cap + 1;
        }
        return total;
    }

    void write(std::vector<int>& next, MemorylessStrategy* as_strategy = nullptr) const
    {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            next[states_[i]] = static_cast<int>(game_.successor(states_[i], digits_[i]));
            if (as_strategy) as_strategy->set(states_[i], static_cast<int>(digits_[i]));
        }
    }

    bool advance()
    {
        for (std::size_t i = 0; i < states_.size(); ++i) {
            if (++digits_[i] < game_.num_actions(states_[i])) return true;
            digits_[i] = 0;
        }
        return false;
    }

    void reset() { std::fill(digits_.begin(), digits_.end(), 0); }

private:
    const GraphGame& game_;
    std::vector<StateId> states_;
    std::vector<std::size_t> digits_;
};

std::uint64_t bit(StateId s) { return std::uint64_t{1} << s; }

} // namespace

OracleResult brute_force_solve(const GraphGame& game, OracleLimits limits)
{
    const auto n = game.num_states();
    if (n > limits.max_states || n > 64) {
        throw std::length_error("oracle: " + std::to_string(n) + " states exceed the bound of "
                                + std::to_string(std::min<std::size_t>(limits.max_states, 64)));
    }
    const auto p1_states = game.owned_by(Player::P1).members();
    const auto p2_states = game.owned_by(Player::P2).members();
    const auto n1 = StrategyCounter::count(game, p1_states, limits.max_strategy_pairs);
    const auto n2 = StrategyCounter::count(game, p2_states, limits.max_strategy_pairs);
    if (n1 > limits.max_strategy_pairs || n2 > limits.max_strategy_pairs
        || n1 * n2 > limits.max_strategy_pairs) {
        throw std::length_error("oracle: too many strategy pairs");
    }

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (bit(static_cast<StateId>(n)) - 1);
    const auto decided = game.decided_states();
    std::vector<int> next(n, -1);
    std::vector<int> seen(n, -1);

    std::vector<std::uint64_t> p1_row(n1, all);   // states P1 wins with sigma_i against all tau
    std::vector<std::uint64_t> p2_col(n2, all);   // states P2 wins with tau_j against all sigma

    StrategyCounter sigma(game, p1_states);
    StrategyCounter tau(game, p2_states);
    for (std::uint64_t i = 0; i < n1; ++i, sigma.advance()) {
        sigma.write(next);
        tau.reset();
        for (std::uint64_t j = 0; j < n2; ++j, tau.advance()) {
            tau.write(next);
            std::uint64_t wins = 0;
            for (StateId s = 0; s < n; ++s) {
                if (run_play(game, decided, next, s, seen) == Outcome::P1Wins) wins |= bit(s);
            }
            p1_row[i] &= wins;
            p2_col[j] &= ~wins & all;
        }
    }

    std::uint64_t region1 = 0, region2 = 0;
    for (auto m : p1_row) region1 |= m;
    for (auto m : p2_col) region2 |= m;
    if ((region1 | region2) != all || (region1 & region2) != 0) {
        throw std::logic_error("oracle: winning regions do not partition the state space");
    }

    OracleResult out;
    for (int p = 0; p < 2; ++p) {
        out.region[p] = StateSet(n);
        out.witness[p] = MemorylessStrategy(static_cast<Player>(p), n);
    }
    for (StateId s = 0; s < n; ++s) {
        if (region1 & bit(s)) out.region[0].insert(s);
        if (region2 & bit(s)) out.region[1].insert(s);
    }

    auto pick = [&](const std::vector<std::uint64_t>& masks, std::uint64_t region, StrategyCounter& counter,
                    MemorylessStrategy& witness) {
        counter.reset();
        for (std::size_t i = 0; i < masks.size(); ++i, counter.advance()) {
            if (masks[i] == region) {
                counter.write(next, &witness);
                return;
            }
        }
        throw std::logic_error("oracle: no uniform memoryless witness found");
    };
    pick(p1_row, region1, sigma, out.witness[0]);
    pick(p2_col, region2, tau, out.witness[1]);
    return out;
}

bool play_wins_for_p1(const GraphGame& game, StateId start,
                      const MemorylessStrategy& p1, const MemorylessStrategy& p2)
{
    const auto n = game.num_states();
    std::vector<int> next(n, -1);
    for (StateId s = 0; s < n; ++s) {
        const auto& st = game.owner(s) == Player::P1 ? p1 : p2;
        if (st.defined(s)) next[s] = static_cast<int>(game.successor(s, static_cast<std::size_t>(st.action(s))));
    }
    std::vector<int> seen(n, -1);
    auto r = run_play(game, game.decided_states(), next, start, seen);
    if (r == Outcome::Undefined) throw std::logic_error("play reaches a state without a strategy choice");
    return r == Outcome::P1Wins;
}

bool verify_strategy(const GraphGame& game, const MemorylessStrategy& strategy,
                     const StateSet& from, OracleLimits limits)
{
    const auto n = game.num_states();
    const Player me = strategy.player();
    const auto their_states = game.owned_by(opponent(me)).members();
    const auto count = StrategyCounter::count(game, their_states, limits.max_strategy_pairs);
    if (n > 64 || count > limits.max_strategy_pairs) throw std::length_error("verify_strategy: game too large");

    std::vector<int> next(n, -1);
    for (StateId s = 0; s < n; ++s) {
        if (game.owner(s) == me && strategy.defined(s)) {
            next[s] = static_cast<int>(game.successor(s, static_cast<std::size_t>(strategy.action(s))));
        }
    }
    const auto decided = game.decided_states();
    const auto starts = from.members();
    std::vector<int> seen(n, -1);
    const Outcome good = me == Player::P1 ? Outcome::P1Wins : Outcome::P2Wins;

    StrategyCounter theirs(game, their_states);
    for (std::uint64_t j = 0; j < count; ++j, theirs.advance()) {
        theirs.write(next);
        for (auto s : starts) {
            if (run_play(game, decided, next, s, seen) != good) return false;
        }
    }
    return true;
}

} // namespace stratdt
