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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stratdt/bits.hpp"

namespace stratdt {

using StateId = std::uint32_t;

/**
 * Objectives are always stated from player 1's point of view:
 *  - Parity: the least priority seen infinitely often is even.
 *  - Safety: only states of the marked (safe) set are visited.
 *  - Reachability: some state of the marked (target) set is visited.
 * Player 2 wins exactly the complementary plays.
 */
enum class ObjectiveKind : std::uint8_t { Parity, Safety, Reachability };

const char* to_string(ObjectiveKind kind);

/// Dense set of states 0..n-1.
class StateSet {
public:
    StateSet() = default;
    explicit StateSet(std::size_t universe, bool full = false) : bits_(universe, full) {}

    std::size_t universe() const { return bits_.size(); }
    bool contains(StateId s) const { return s < bits_.size() && bits_[s]; }
    void insert(StateId s) { bits_.at(s) = true; }
    void erase(StateId s) { bits_.at(s) = false; }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<StateId> members() const;

    StateSet complement() const;
    StateSet& operator|=(const StateSet& o);
    StateSet& operator-=(const StateSet& o);
    bool operator==(const StateSet& o) const = default;

private:
    std::vector<bool> bits_;
};

/// An action available at a state. For explicit games the label is the
/// successor id; for circuit games it is the valuation of the moving
/// player's input bits.
struct Edge {
    std::uint64_t label;
    StateId target;
};

/**
 * Explicit turn-based two-player arena together with its objective.
 * Immutable after construction; the constructor checks all structural
 * invariants and throws std::invalid_argument on violation.
 */
class GraphGame {
public:
    struct Spec {
        std::vector<Player> owner;
        std::vector<std::vector<Edge>> actions;
        ObjectiveKind kind = ObjectiveKind::Parity;
        std::vector<unsigned> priorities; // parity only
        std::vector<bool> marked;         // safe (safety) or target (reachability) states
        StateId initial = 0;
        std::vector<std::string> names;   // optional
    };

    GraphGame() = default;
    explicit GraphGame(Spec spec);

    std::size_t num_states() const { return owner_.size(); }
    Player owner(StateId s) const { return owner_[s]; }
    std::span<const Edge> actions(StateId s) const { return actions_[s]; }
    std::size_t num_actions(StateId s) const { return actions_[s].size(); }
    StateId successor(StateId s, std::size_t action) const { return actions_[s].at(action).target; }
    std::size_t max_actions() const;

    /// Predecessor states, one entry per edge (with multiplicity).
    std::span<const StateId> predecessors(StateId s) const { return preds_[s]; }

    ObjectiveKind objective() const { return kind_; }
    bool is_parity() const { return kind_ == ObjectiveKind::Parity; }
    unsigned priority(StateId s) const { return priorities_.at(s); }
    bool marked(StateId s) const { return marked_.contains(s); }
    const StateSet& marked_set() const { return marked_; }

    /// States whose visit already decides a safety/reachability play
    /// (unsafe resp. target states). Empty for parity games.
    StateSet decided_states() const;

    StateId initial() const { return initial_; }
    const std::string& name(StateId s) const;

    StateSet owned_by(Player p) const;

private:
    std::vector<Player> owner_;
    std::vector<std::vector<Edge>> actions_;
    std::vector<std::vector<StateId>> preds_;
    ObjectiveKind kind_ = ObjectiveKind::Parity;
    std::vector<unsigned> priorities_;
    StateSet marked_;
    StateId initial_ = 0;
    std::vector<std::string> names_;
};

/// Memoryless strategy as an action index per state; kNone off its domain.
class MemorylessStrategy {
public:
    static constexpr int kNone = -1;

    MemorylessStrategy() = default;
    MemorylessStrategy(Player player, std::size_t num_states)
        : player_(player), choice_(num_states, kNone) {}

    Player player() const { return player_; }
    std::size_t universe() const { return choice_.size(); }
    bool defined(StateId s) const { return s < choice_.size() && choice_[s] != kNone; }
    int action(StateId s) const { return choice_.at(s); }
    void set(StateId s, int action) { choice_.at(s) = action; }
    void clear(StateId s) { choice_.at(s) = kNone; }

    /// Copies the choices of `other` on every state of `where`.
    void adopt(const MemorylessStrategy& other, const StateSet& where);

    bool operator==(const MemorylessStrategy& o) const = default;

private:
    Player player_ = Player::P1;
    std::vector<int> choice_;
};

/**
 * Bitvector view of one player's states and actions: every state gets an
 * n-bit code and every (state, action) pair an a-bit code. Codes only
 * need to be injective on the states of the player being encoded.
 */
struct BitEncoding {
    unsigned state_bits = 0;
    unsigned action_bits = 0;
    std::vector<BitVec> state_codes;               // per state
    std::vector<std::vector<BitVec>> action_codes; // per state, per action
    std::vector<std::string> feature_names;        // state bits then action bits

    unsigned dimension() const { return state_bits + action_bits; }
};

/// Binary state ids; an action is encoded as its successor's id, so d = 2n.
BitEncoding naive_encode(const GraphGame& game);

/// Inverse of the naive state code, nullopt for unused code space.
std::optional<StateId> naive_decode(const GraphGame& game, BitView code);

} // namespace stratdt
