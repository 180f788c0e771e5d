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


#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "stratdt/bdd.hpp"
#include "stratdt/dtlearn.hpp"
#include "stratdt/pgformat.hpp"
#include "stratdt/pipeline.hpp"
#include "stratdt/random_game.hpp"
#include "stratdt/trainset.hpp"

using namespace stratdt;

namespace {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kParseError = 2,
    kUnrealizable = 3,
    kVerificationFailed = 4,
};

std::optional<InputFormat> parse_format(const std::string& s)
{
    if (s == "aag") return InputFormat::Aag;
    if (s == "pg") return InputFormat::Pg;
    return std::nullopt;
}

/// Writes `text` to `path`, or to stdout for an empty path or "-".
void emit(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct SolveArgs {
    std::string game;
    std::string format;
    int player = 0;
    std::string out;
};

int run_solve(const SolveArgs& a)
{
    const auto format = a.format.empty() ? guess_format(a.game) : *parse_format(a.format);
    const auto inst = load_game(a.game, format);
    const auto player = a.player == 0 ? inst.default_player : (a.player == 1 ? Player::P1 : Player::P2);
    try {
        const auto extracted = extract_strategy(inst, player);
        std::ostringstream csv;
        write_csv(csv, extracted.train);
        emit(a.out, csv.str());
        std::cerr << "player " << number(player) << " wins from the initial state; " << extracted.train.good.size()
                  << " reachable decisions, " << extracted.train.size() << " samples\n";
    } catch (const UnrealizableError& e) {
        std::cerr << "unrealizable: player " << number(e.winner()) << " wins from the initial state "
                  << "(rerun with --player " << number(e.winner()) << " for its witness strategy)\n";
        return kUnrealizable;
    }
    return kOk;
}

struct LearnArgs {
    std::string train;
    unsigned lookahead = 2;
    std::string chain = "off";
    std::string out;
    std::string dot;
};

int run_learn(const LearnArgs& a)
{
    const auto train = read_csv_file(a.train);
    if (auto c = train.find_contradiction()) {
        std::cerr << "error: sample " << to_string(*c) << " is labelled both good and bad\n";
        return kParseError;
    }
    const auto tree = learn(train, LearnOptions{a.lookahead, a.chain == "on"});
    verify_tree(tree, train);
    if (!a.out.empty()) emit(a.out, tree.to_text() + "\n");
    if (!a.dot.empty()) emit(a.dot, tree.to_dot(train.feature_names));
    std::cout << "size " << tree.size() << "\n";
    return kOk;
}

struct BddArgs {
    std::string train;
    std::size_t orderings = 1000;
    std::string sift = "on";
    std::uint64_t seed = 1;
    std::string dot;
};

int run_bdd(const BddArgs& a)
{
    const auto train = read_csv_file(a.train);
    auto best = min_over_random_orders(train, a.orderings, a.seed);
    if (a.sift == "on") {
        auto sifted = sift(best.bdd);
        if (sifted.size() < best.size) {
            best.size = sifted.size();
            best.bdd = std::move(sifted);
        }
    }
    verify_bdd(best.bdd, train);
    if (!a.dot.empty()) emit(a.dot, best.bdd.to_dot(train.feature_names));
    std::cout << "size " << best.size << "\n";
    return kOk;
}

struct CompareArgs {
    std::vector<std::string> games;
    std::string format;
    std::size_t orderings = 1000;
    std::string sift = "on";
    std::uint64_t seed = 1;
    unsigned lookahead = 2;
    int player = 0;
    std::string report;
    std::string timings = "on";
    unsigned jobs = 1;
};

int run_compare(const CompareArgs& a)
{
    CompareOptions options;
    options.orderings = a.orderings;
    options.sift = a.sift == "on";
    options.seed = a.seed;
    options.lookahead = a.lookahead;
    if (a.player != 0) options.player = a.player == 1 ? Player::P1 : Player::P2;

    // Every file is processed independently; rows are collected by input index.
    std::vector<std::optional<CompareRow>> rows(a.games.size());
    std::vector<std::exception_ptr> errors(a.games.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (auto i = next++; i < a.games.size(); i = next++) {
            try {
                const auto format = a.format.empty() ? guess_format(a.games[i]) : *parse_format(a.format);
                rows[i] = compare(load_game(a.games[i], format), options);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const auto jobs = std::max(1u, std::min<unsigned>(a.jobs, static_cast<unsigned>(a.games.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (std::size_t i = 0; i < errors.size(); ++i) {
        if (errors[i]) {
            std::cerr << a.games[i] << ": ";
            std::rethrow_exception(errors[i]);
        }
    }

    std::ostringstream text;
    const bool fresh = a.report.empty() || a.report == "-" || !std::filesystem::exists(a.report)
                       || std::filesystem::file_size(a.report) == 0;
    if (fresh) text << kReportHeader << '\n';
    std::vector<CompareRow> done;
    for (const auto& r : rows) {
        text << format_row(*r, a.timings == "on") << '\n';
        if (r->dtplus > r->dt) {
            std::cerr << "warning: " << r->name << ": chain tree larger than plain tree (" << r->dtplus << " > "
                      << r->dt << ")\n";
        }
        done.push_back(*r);
    }
    if (a.report.empty() || a.report == "-") {
        std::cout << text.str();
    } else {
        std::ofstream out(a.report, std::ios::app);
        if (!out) throw std::runtime_error("cannot write " + a.report);
        out << text.str();
    }
    if (done.size() > 1) {
        const auto s = summarize(done);
        std::cerr << "summary: " << s.rows << " games, median |DT|/|BDD| = " << s.median_dt_over_bdd
                  << ", median |DT+|/|DT| = " << s.median_dtplus_over_dt << ", DT smaller in "
                  << 100.0 * s.frac_dt_smaller << "%, chain not worse in " << 100.0 * s.frac_chain_not_worse << "%\n";
    }
    return kOk;
}

struct GenArgs {
    std::size_t states = 8;
    unsigned priorities = 3;
    std::size_t max_degree = 3;
    std::uint64_t seed = 1;
    std::string kind = "parity";
    std::size_t count = 1;
    std::string out;
    std::string out_dir;
};

int run_gen(const GenArgs& a)
{
    RandomGameOptions options;
    options.states = a.states;
    options.priorities = a.priorities;
    options.max_degree = a.max_degree;
    options.kind = a.kind == "parity" ? ObjectiveKind::Parity
                   : a.kind == "safety" ? ObjectiveKind::Safety
                                        : ObjectiveKind::Reachability;
    if (a.out_dir.empty()) {
        if (a.count != 1) throw CLI::ValidationError("--count", "needs --out-dir");
        emit(a.out, write_game_text(random_game(options, a.seed)));
        return kOk;
    }
    std::filesystem::create_directories(a.out_dir);
    for (std::size_t i = 0; i < a.count; ++i) {
        const auto seed = a.seed + i;
        const auto path = std::filesystem::path(a.out_dir) / ("random_" + std::to_string(seed) + ".pg");
        emit(path.string(), write_game_text(random_game(options, seed)));
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"stratdt: solve graph games and represent strategies as decision trees or BDDs"};
    app.require_subcommand(1);
    const auto on_off = CLI::IsMember({"on", "off"});
    const auto formats = CLI::IsMember({"aag", "pg"});

    SolveArgs solve_args;
    auto* solve_cmd = app.add_subcommand("solve", "solve a game and write the winning strategy as a training CSV");
    solve_cmd->add_option("--game", solve_args.game, "game file")->required()->check(CLI::ExistingFile);
    solve_cmd->add_option("--format", solve_args.format, "aag or pg (default: by extension)")->check(formats);
    solve_cmd->add_option("--player", solve_args.player, "1 or 2 (default: 2 for circuits, 1 otherwise)")
        ->check(CLI::IsMember({1, 2}));
    solve_cmd->add_option("--out", solve_args.out, "output CSV (default: stdout)");

    LearnArgs learn_args;
    auto* learn_cmd = app.add_subcommand("learn", "learn an exact decision tree from a training CSV");
    learn_cmd->add_option("--train", learn_args.train, "training CSV")->required()->check(CLI::ExistingFile);
    learn_cmd->add_option("--lookahead", learn_args.lookahead, "maximal look-ahead depth k")
        ->capture_default_str()
        ->check(CLI::Range(1u, 16u));
    learn_cmd->add_option("--chain", learn_args.chain, "chain disjunction predicates")->capture_default_str()->check(on_off);
    learn_cmd->add_option("--out", learn_args.out, "tree text output");
    learn_cmd->add_option("--dot", learn_args.dot, "DOT output");

    BddArgs bdd_args;
    auto* bdd_cmd = app.add_subcommand("bdd", "build a small BDD of the good samples");
    bdd_cmd->add_option("--train", bdd_args.train, "training CSV")->required()->check(CLI::ExistingFile);
    bdd_cmd->add_option("--orderings", bdd_args.orderings, "number of variable orders tried")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bdd_cmd->add_option("--sift", bdd_args.sift, "sift the best order")->capture_default_str()->check(on_off);
    bdd_cmd->add_option("--seed", bdd_args.seed, "order seed")->capture_default_str();
    bdd_cmd->add_option("--dot", bdd_args.dot, "DOT output");

    CompareArgs cmp_args;
    auto* cmp_cmd = app.add_subcommand("compare", "compare BDD and decision-tree sizes, one report row per game");
    cmp_cmd->add_option("--game", cmp_args.games, "game files")->required()->check(CLI::ExistingFile);
    cmp_cmd->add_option("--format", cmp_args.format, "aag or pg (default: by extension)")->check(formats);
    cmp_cmd->add_option("--orderings", cmp_args.orderings, "number of variable orders tried")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    cmp_cmd->add_option("--sift", cmp_args.sift, "also sift the best order")->capture_default_str()->check(on_off);
    cmp_cmd->add_option("--seed", cmp_args.seed, "order seed")->capture_default_str();
    cmp_cmd->add_option("--lookahead", cmp_args.lookahead, "maximal look-ahead depth k")
        ->capture_default_str()
        ->check(CLI::Range(1u, 16u));
    cmp_cmd->add_option("--player", cmp_args.player, "1 or 2")->check(CLI::IsMember({1, 2}));
    cmp_cmd->add_option("--report", cmp_args.report, "CSV report to append to (default: stdout)");
    cmp_cmd->add_option("--timings", cmp_args.timings, "include wall-clock columns")->capture_default_str()->check(on_off);
    cmp_cmd->add_option("--jobs", cmp_args.jobs, "parallel workers across files")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    GenArgs gen_args;
    auto* gen_cmd = app.add_subcommand("gen-random", "generate seeded random games");
    gen_cmd->add_option("--states", gen_args.states, "number of states")->capture_default_str()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--priorities", gen_args.priorities, "number of priorities (parity)")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--max-degree", gen_args.max_degree, "maximal out-degree")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_args.seed, "seed (first seed with --count)")->capture_default_str();
    gen_cmd->add_option("--kind", gen_args.kind, "objective")
        ->capture_default_str()
        ->check(CLI::IsMember({"parity", "safety", "reach"}));
    gen_cmd->add_option("--count", gen_args.count, "number of games")->capture_default_str()->check(CLI::PositiveNumber);
    gen_cmd->add_option("--out", gen_args.out, "output file (default: stdout)");
    gen_cmd->add_option("--out-dir", gen_args.out_dir, "write random_<seed>.pg files here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve_cmd) return run_solve(solve_args);
        if (*learn_cmd) return run_learn(learn_args);
        if (*bdd_cmd) return run_bdd(bdd_args);
        if (*cmp_cmd) return run_compare(cmp_args);
        if (*gen_cmd) return run_gen(gen_args);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParseError;
    } catch (const UnrealizableError& e) {
        std::cerr << "unrealizable: " << e.what() << "\n";
        return kUnrealizable;
    } catch (const VerificationError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kVerificationFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
