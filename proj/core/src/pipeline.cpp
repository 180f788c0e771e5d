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


#include "stratdt/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "stratdt/pgformat.hpp"

namespace stratdt {

InputFormat guess_format(const std::string& path)
{
    return std::filesystem::path(path).extension() == ".aag" ? InputFormat::Aag : InputFormat::Pg;
}

GameInstance make_instance(std::string name, GraphGame game)
{
    GameInstance inst;
    inst.name = std::move(name);
    inst.game = std::move(game);
    inst.encoding[0] = naive_encode(inst.game);
    inst.encoding[1] = inst.encoding[0];
    inst.default_player = Player::P1;
    return inst;
}

GameInstance make_instance(std::string name, const AigerCircuit& circuit)
{
    SymbolicSafetyGame symbolic(circuit);
    GameInstance inst;
    inst.name = std::move(name);
    inst.expansion = expand(symbolic);
    inst.game = inst.expansion->game;
    inst.encoding[0] = inst.expansion->encoding(symbolic, Player::P1);
    inst.encoding[1] = inst.expansion->encoding(symbolic, Player::P2);
    inst.default_player = Player::P2;
    return inst;
}

GameInstance load_game(const std::string& path, InputFormat format)
{
    auto name = std::filesystem::path(path).stem().string();
    if (format == InputFormat::Aag) return make_instance(std::move(name), read_aag_file(path));
    return make_instance(std::move(name), read_game_file(path));
}

ExtractedStrategy extract_strategy(const GameInstance& instance, Player player)
{
    ExtractedStrategy out;
    out.player = player;
    out.solution = solve(instance.game);
    const auto init = instance.game.initial();
    if (out.solution.winner(init) != player) {
        throw UnrealizableError(player, "player " + std::to_string(number(player)) + " does not win from the initial state; player "
                                            + std::to_string(number(opponent(player))) + " wins");
    }
    out.train = build_training_set(instance.game, instance.encoding_of(player), out.solution.strategy_of(player), init);
    return out;
}

void verify_tree(const DecisionTree& tree, const TrainingSet& train)
{
    std::stringstream csv;
    write_csv(csv, train);
    const auto reread = read_csv(csv);
    const auto copy = DecisionTree::parse(tree.to_text(), reread.dim);
    for (const auto& row : reread.good) {
        if (!copy.eval(row)) throw VerificationError("tree rejects good sample " + to_string(row));
    }
    for (const auto& row : reread.bad) {
        if (copy.eval(row)) throw VerificationError("tree accepts bad sample " + to_string(row));
    }
}

void verify_bdd(const Bdd& bdd, const TrainingSet& train)
{
    for (const auto& row : train.good) {
        if (!bdd.eval(row)) throw VerificationError("BDD rejects good sample " + to_string(row));
    }
    for (const auto& row : train.bad) {
        if (bdd.eval(row)) throw VerificationError("BDD accepts bad sample " + to_string(row));
    }
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

} // namespace

CompareRow compare(const GameInstance& instance, const CompareOptions& options)
{
    CompareRow row;
    // Explicit games without a requested player are compared on the
    // strategy of whoever wins the initial state.
    auto player = options.player.value_or(instance.default_player);
    if (!options.player && !instance.expansion) player = solve(instance.game).winner(instance.game.initial());
    const auto& enc = instance.encoding_of(player);
    row.name = instance.name;
    row.states = instance.game.num_states();
    row.state_bits = enc.state_bits;
    row.action_bits = enc.action_bits;

    auto t = Clock::now();
    const auto extracted = extract_strategy(instance, player);
    row.ms_solve = ms_since(t);
    const auto& train = extracted.train;
    row.train = train.size();

    t = Clock::now();
    auto best = min_over_random_orders(train, std::max<std::size_t>(options.orderings, 1), options.seed);
    if (options.sift) {
        auto sifted = sift(best.bdd);
        if (sifted.size() < best.size) {
            best.size = sifted.size();
            best.bdd = std::move(sifted);
        }
    }
    row.ms_bdd = ms_since(t);
    verify_bdd(best.bdd, train);
    row.bdd = best.size;

    t = Clock::now();
    const auto dt = learn(train, LearnOptions{options.lookahead, false});
    row.ms_dt = ms_since(t);
    verify_tree(dt, train);
    row.dt = dt.size();

    t = Clock::now();
    const auto dtplus = learn(train, LearnOptions{options.lookahead, true});
    row.ms_dtplus = ms_since(t);
    verify_tree(dtplus, train);
    row.dtplus = dtplus.size();
    return row;
}

std::string format_row(const CompareRow& row, bool timings)
{
    std::ostringstream os;
    os << row.name << ',' << row.states << ',' << row.state_bits << ',' << row.action_bits << ',' << row.train << ','
       << row.bdd << ',' << row.dt << ',' << row.dtplus;
    if (timings) {
        os << std::fixed << std::setprecision(3);
        os << ',' << row.ms_solve << ',' << row.ms_bdd << ',' << row.ms_dt << ',' << row.ms_dtplus;
    } else {
        os << ",-,-,-,-";
    }
    return os.str();
}

namespace {

double median(std::vector<double> v)
{
    if (v.empty()) return 0;
    std::sort(v.begin(), v.end());
    const auto mid = v.size() / 2;
    return v.size() % 2 ? v[mid] : (v[mid - 1] + v[mid]) / 2;
}

} // namespace

TrendSummary summarize(const std::vector<CompareRow>& rows)
{
    TrendSummary s;
    s.rows = rows.size();
    if (rows.empty()) return s;
    std::vector<double> dt_bdd;
    std::vector<double> plus_dt;
    std::size_t smaller = 0;
    std::size_t not_worse = 0;
    for (const auto& r : rows) {
        if (r.bdd > 0) dt_bdd.push_back(static_cast<double>(r.dt) / static_cast<double>(r.bdd));
        if (r.dt > 0) plus_dt.push_back(static_cast<double>(r.dtplus) / static_cast<double>(r.dt));
        smaller += r.dt < r.bdd;
        not_worse += r.dtplus <= r.dt;
    }
    s.median_dt_over_bdd = median(std::move(dt_bdd));
    s.median_dtplus_over_dt = median(std::move(plus_dt));
    s.frac_dt_smaller = static_cast<double>(smaller) / static_cast<double>(rows.size());
    s.frac_chain_not_worse = static_cast<double>(not_worse) / static_cast<double>(rows.size());
    return s;
}

} // namespace stratdt
