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
#include <string>
#include <string_view>
#include <vector>

#include "stratdt/game.hpp"

namespace stratdt {

using AigLiteral = std::uint32_t;

/// ASCII AIGER circuit. Inputs whose symbol starts with `controllable_`
/// belong to the controller (player 2); all others to the environment.
struct AigerCircuit {
    struct Input {
        AigLiteral lit;
        std::string name;
        bool controllable = false;
    };
    struct Latch {
        AigLiteral lit;
        AigLiteral next;
        std::string name;
    };
    struct And {
        AigLiteral lhs;
        AigLiteral rhs0;
        AigLiteral rhs1;
    };

    std::uint32_t max_var = 0;
    std::vector<Input> inputs;   // file order
    std::vector<Latch> latches;
    std::vector<And> ands;
    std::vector<AigLiteral> outputs; // zero or one: the error bit
    std::string output_name;
    std::vector<std::string> comments;

    std::size_t num_controllable() const;
    std::size_t num_uncontrollable() const;
};

inline constexpr std::string_view kControllablePrefix = "controllable_";

/// Throws ParseError (with a line number) on malformed input.
AigerCircuit parse_aag(std::string_view text);
AigerCircuit read_aag_file(const std::string& path);
std::string write_aag(const AigerCircuit& circuit);

/**
 * Symbolic safety game of a circuit: latch valuations are states, the
 * environment picks the uncontrollable inputs, then the controller picks
 * the controllable ones. Valuations are bit masks in declaration order
 * (bit i = i-th latch / i-th input of that kind). Initial state: all latches 0.
 */
class SymbolicSafetyGame {
public:
    explicit SymbolicSafetyGame(AigerCircuit circuit);

    std::size_t state_vars() const { return circuit_.latches.size(); }
    std::size_t p1_vars() const { return uncontrollable_.size(); }
    std::size_t p2_vars() const { return controllable_.size(); }
    const AigerCircuit& circuit() const { return circuit_; }

    std::uint64_t next(std::uint64_t latches, std::uint64_t env, std::uint64_t ctrl) const;
    bool bad(std::uint64_t latches, std::uint64_t env, std::uint64_t ctrl) const;

    /// Latch valuations reachable from the initial one under any inputs
    /// (transitions that raise the error bit are not followed), BFS order.
    std::vector<std::uint64_t> reachable_states() const;

    std::string latch_name(std::size_t i) const;
    std::string env_name(std::size_t i) const;
    std::string ctrl_name(std::size_t i) const;

private:
    void evaluate(std::uint64_t latches, std::uint64_t env, std::uint64_t ctrl, std::vector<std::uint8_t>& values) const;
    bool value(const std::vector<std::uint8_t>& values, AigLiteral lit) const;

    AigerCircuit circuit_;
    std::vector<std::size_t> uncontrollable_; // indices into circuit_.inputs
    std::vector<std::size_t> controllable_;
    std::vector<std::size_t> and_order_;      // topological evaluation order
};

/**
 * Explicit expansion of a symbolic safety game. Player 1 (environment)
 * states are latch valuations, player 2 (controller) states are pairs of a
 * latch valuation and an environment move, and one absorbing error state
 * (owned by player 2) is the reachability target of player 1.
 */
struct ExpandedAigerGame {
    GraphGame game;
    std::vector<std::uint64_t> latch_value; // per state
    std::vector<std::uint64_t> env_value;   // per player-2 state
    StateId error_state = 0;
    std::size_t num_valuations = 0;

    /// Latches (+ environment inputs for player 2) as state bits, the
    /// player's own inputs as action bits.
    BitEncoding encoding(const SymbolicSafetyGame& symbolic, Player player) const;
};

/// Throws std::length_error if the expansion would exceed `max_states`.
ExpandedAigerGame expand(const SymbolicSafetyGame& symbolic, std::size_t max_states = 1u << 22);

} // namespace stratdt
