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
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "stratdt/aiger.hpp"
#include "stratdt/bdd.hpp"
#include "stratdt/dtlearn.hpp"
#include "stratdt/game.hpp"
#include "stratdt/solver.hpp"
#include "stratdt/trainset.hpp"

namespace stratdt {

enum class InputFormat { Pg, Aag };

/// `.aag` files are circuits, everything else explicit game text.
InputFormat guess_format(const std::string& path);

/// A loaded game together with the bit encodings of its players.
struct GameInstance {
    std::string name;
    GraphGame game;
    BitEncoding encoding[2];
    /// Player whose strategy is extracted by default: the controller
    /// (player 2) for circuits, player 1 for explicit games.
    Player default_player = Player::P1;
    std::optional<ExpandedAigerGame> expansion;

    const BitEncoding& encoding_of(Player p) const { return encoding[index(p)]; }
};

/// Throws ParseError on malformed files.
GameInstance load_game(const std::string& path, InputFormat format);
GameInstance make_instance(std::string name, GraphGame game);
GameInstance make_instance(std::string name, const AigerCircuit& circuit);

/// The requested player does not win from the initial state.
class UnrealizableError : public std::runtime_error {
public:
    UnrealizableError(Player requested, const std::string& what)
        : std::runtime_error(what), requested_(requested) {}
    Player requested() const { return requested_; }
    Player winner() const { return opponent(requested_); }

private:
    Player requested_;
};

/// An artefact failed its independent re-check.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExtractedStrategy {
    Solution solution;
    Player player = Player::P1;
    TrainingSet train;
};

/// Solves the game and builds the training set of `player`'s winning
/// strategy from the initial state. Throws UnrealizableError.
ExtractedStrategy extract_strategy(const GameInstance& instance, Player player);

/// Re-reads the serialized training set and tree and checks that the tree
/// accepts exactly the good rows. Throws VerificationError.
void verify_tree(const DecisionTree& tree, const TrainingSet& train);
/// Checks that the BDD is true exactly on the good rows. Throws VerificationError.
void verify_bdd(const Bdd& bdd, const TrainingSet& train);

struct CompareOptions {
    std::size_t orderings = 1000;
    bool sift = true;
    std::uint64_t seed = 1;
    unsigned lookahead = 2;
    /// Strategy owner; default: the controller for circuits and the winner
    /// of the initial state for explicit games.
    std::optional<Player> player;
};

struct CompareRow {
    std::string name;
    std::size_t states = 0;
    std::size_t state_bits = 0;
    std::size_t action_bits = 0;
    std::size_t train = 0;
    std::size_t bdd = 0;
    std::size_t dt = 0;
    std::size_t dtplus = 0;
    double ms_solve = 0;
    double ms_bdd = 0;
    double ms_dt = 0;
    double ms_dtplus = 0;
};

/// Solve, build the training set, minimize the BDD over random orders (and
/// sifting), learn DT (chain off) and DT+ (chain on), and re-verify all three.
CompareRow compare(const GameInstance& instance, const CompareOptions& options);

inline constexpr const char* kReportHeader =
    "name,states,state_bits,action_bits,train,bdd,dt,dtplus,ms_solve,ms_bdd,ms_dt,ms_dtplus";

/// One report line (no newline). Without timings the time columns read `-`.
std::string format_row(const CompareRow& row, bool timings);

struct TrendSummary {
    std::size_t rows = 0;
    double median_dt_over_bdd = 0;
    double median_dtplus_over_dt = 0;
    double frac_dt_smaller = 0;       // |DT| < |BDD|
    double frac_chain_not_worse = 0;  // |DT+| <= |DT|
};

/// Ratios skip rows with a zero denominator.
TrendSummary summarize(const std::vector<CompareRow>& rows);

} // namespace stratdt
