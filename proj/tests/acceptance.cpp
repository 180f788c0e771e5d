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


// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Reference values are recomputed here by independent code
// wherever they are not fixed constants.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "stratdt/bdd.hpp"
#include "stratdt/dtlearn.hpp"
#include "stratdt/oracle.hpp"
#include "stratdt/pipeline.hpp"
#include "stratdt/random_game.hpp"
#include "stratdt/solver.hpp"
#include "support.hpp"

using namespace stratdt;
using stratdt::testing::make_train;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail)
{
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << title << " -- " << detail << std::endl;
    if (!ok) ++failures;
}

void info(const std::string& text)
{
    std::cout << "       info: " << text << std::endl;
}

double seconds_since(Clock::time_point t)
{
    return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double v, int prec = 3)
{
    std::ostringstream os;
    os.precision(prec);
    os << std::fixed << v;
    return os.str();
}

/// Counts rows of the training set that the tree misclassifies.
std::size_t errors(const DecisionTree& t, const TrainingSet& train)
{
    std::size_t e = 0;
    for (const auto& g : train.good) e += !t.eval(g);
    for (const auto& b : train.bad) e += t.eval(b);
    return e;
}

// ---------------------------------------------------------------------------

void criterion1()
{
    const auto train = stratdt::testing::four_state_strategy();
    const auto t0 = Clock::now();
    const auto tree = learn(train);
    const double secs = seconds_since(t0);
    const bool exact = errors(tree, train) == 0;
    const bool no_state3 = !tree.mentions(2);
    report(1, exact && no_state3 && secs < 1.0, "four-state strategy tree is exact and never tests state3 (default options)",
           "exact=" + std::string(exact ? "yes" : "no") + " state3-free=" + (no_state3 ? "yes" : "no") + " size="
               + std::to_string(tree.size()) + " time=" + fmt(secs, 4) + "s tree=" + tree.to_text());
    const auto k1 = learn(train, LearnOptions{1, false});
    info("with look-ahead 1: exact=" + std::string(errors(k1, train) == 0 ? "yes" : "no") + " state3-free="
         + (k1.mentions(2) ? "no" : "yes") + " size=" + std::to_string(k1.size()) + " tree=" + k1.to_text());
    const auto ref = id3_reference(train);
    info("plain ID3: exact=" + std::string(errors(ref, train) == 0 ? "yes" : "no") + " state3-free="
         + (ref.mentions(2) ? "no" : "yes") + " size=" + std::to_string(ref.size()));
    const SampleTable table(train);
    const auto all = table.all();
    info("two-step weighted entropies at the root: state1=" + fmt(weighted_entropy(table, all, 0, 2), 4)
         + " state2=" + fmt(weighted_entropy(table, all, 1, 2), 4) + " state3=" + fmt(weighted_entropy(table, all, 2, 2), 4)
         + " action=" + fmt(weighted_entropy(table, all, 3, 2), 4) + " (lowest index wins ties)");
}

void criterion2()
{
    const auto train = make_train({"00001"}, {"00000"});
    const auto tree = learn(train);
    const auto bdd = Bdd::from_good(train);
    report(2, tree.size() == 1 && bdd.size() == 5 && errors(tree, train) == 0, "single distinguishing bit: tree vs BDD size",
           "|DT|=" + std::to_string(tree.size()) + " |BDD|=" + std::to_string(bdd.size()));
}

void criterion3()
{
    const auto train = stratdt::testing::x6_equals_x7();
    const SampleTable table(train);
    const auto all = table.all();
    bool all_zero = true;
    for (std::size_t b = 0; b < 7; ++b) all_zero = all_zero && std::abs(lookahead_gain(table, all, b, 1)) < kGainTolerance;
    const auto split = best_split(table, all, LearnOptions{2, false});
    const bool resolves = split.kind == SplitDecision::Kind::SingleBit && split.level == 2 && split.gain > kGainTolerance;
    const auto tree = learn(train);
    const auto err = errors(tree, train);
    report(3, all_zero && resolves && tree.size() == 3 && err == 0, "x6 = x7 needs two-step look-ahead",
           "1-step gains all zero=" + std::string(all_zero ? "yes" : "no") + " 2-step gain=" + fmt(split.gain)
               + " size=" + std::to_string(tree.size()) + " errors=" + std::to_string(err));
}

void criterion4()
{
    DecisionTree t(3, true);
    const auto c = t.split(t.root(), BitTest{2}, true, false);
    t.split(c + 1, BitTest{1}, false, true);
    std::size_t agree = 0;
    for (unsigned v = 0; v < 8; ++v) {
        const auto x = binary_code(v, 3);
        const bool in_language = x[2] == 0 || (x[1] == 1 && x[2] == 1); // {0,1}^2 0 + {0,1} 1 1
        agree += t.eval(x) == in_language;
    }
    report(4, agree == 8, "two-node tree matches its language", std::to_string(agree) + "/8 inputs agree");
}

// Games, solutions and strategies shared by criteria 5 and 6.
struct Solved {
    GraphGame game;
    Solution solution;
};
std::vector<Solved> corpus5;

void criterion5()
{
    const auto t0 = Clock::now();
    std::size_t games = 0, mismatches = 0, losing = 0;
    auto check = [&](const GraphGame& g, const Solution& sol) {
        ++games;
        const auto oracle = brute_force_solve(g);
        if (!(sol.region[0] == oracle.region[0]) || !(sol.region[1] == oracle.region[1])) ++mismatches;
        for (int p = 0; p < 2; ++p) {
            if (!verify_strategy(g, sol.strategy[p], sol.region[p])) ++losing;
        }
        corpus5.push_back({g, sol});
    };
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto g = random_game({.states = 1 + seed % 10, .priorities = 3}, 10'000 + seed);
        check(g, zielonka(g));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = random_game({.states = 1 + seed % 10, .kind = ObjectiveKind::Safety}, 20'000 + seed);
        check(g, solve_safety(g));
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto g = random_game({.states = 1 + seed % 10, .kind = ObjectiveKind::Reachability}, 30'000 + seed);
        check(g, solve_safety(g));
    }
    const double secs = seconds_since(t0);
    report(5, mismatches == 0 && losing == 0 && secs < 300, "solvers agree with exhaustive enumeration",
           std::to_string(games) + " games (500 parity, 200 safety, 100 reachability), region mismatches="
               + std::to_string(mismatches) + " non-winning strategies=" + std::to_string(losing) + " time=" + fmt(secs, 1)
               + "s");
}

void criterion6()
{
    std::size_t trees = 0, inexact = 0, bad_paths = 0, too_deep = 0;
    for (const auto& [g, sol] : corpus5) {
        const auto enc = naive_encode(g);
        for (int p = 0; p < 2; ++p) {
            if (sol.region[p].empty()) continue;
            // Start from the initial state when it is won, else from the first won state.
            const StateId init = sol.region[p].contains(g.initial()) ? g.initial() : sol.region[p].members().front();
            const auto train = build_training_set(g, enc, sol.strategy[p], init);
            for (unsigned k : {1u, 2u}) {
                for (bool chain : {false, true}) {
                    const auto tree = learn(train, LearnOptions{k, chain});
                    ++trees;
                    inexact += !fits_exactly(tree, train);
                    bad_paths += !tree.bits_unique_on_paths();
                    too_deep += tree.depth() > train.dim;
                }
            }
        }
    }
    report(6, inexact == 0 && bad_paths == 0 && too_deep == 0, "every learned tree is exact",
           std::to_string(trees) + " trees, inexact=" + std::to_string(inexact) + " repeated bit on a path="
               + std::to_string(bad_paths) + " depth>d=" + std::to_string(too_deep));
}

void criterion7()
{
    // Information gain recomputed from the raw rows, independently of the library.
    auto h = [](double g, double n) {
        double r = 0;
        for (double c : {g, n - g}) {
            if (c > 0) r -= c / n * std::log2(c / n);
        }
        return r;
    };
    std::mt19937_64 rng(77);
    std::size_t leaves = 0, agree = 0, with_ties = 0;
    while (leaves < 1000) {
        const std::size_t d = 1 + rng() % 8;
        TrainingSet t;
        t.dim = d;
        std::set<BitVec> used;
        const std::size_t rows = std::min<std::size_t>(2 + rng() % 24, std::size_t{1} << d);
        while (used.size() < rows) {
            BitVec x(d);
            for (auto& b : x) b = rng() % 2;
            if (used.insert(x).second) (rng() % 2 ? t.good : t.bad).push_back(x);
        }
        if (t.good.empty() || t.bad.empty()) continue;
        ++leaves;
        const SampleTable table(t);
        const auto all = table.all();
        const double n = static_cast<double>(rows);
        std::vector<double> ig(d), we(d);
        for (std::size_t b = 0; b < d; ++b) {
            double n1 = 0, g1 = 0, g0 = 0;
            for (const auto& x : t.good) {
                n1 += x[b];
                g1 += x[b];
                g0 += !x[b];
            }
            for (const auto& x : t.bad) n1 += x[b];
            const double n0 = n - n1;
            ig[b] = h(g0 + g1, n) - (n0 > 0 ? n0 / n * h(g0, n0) : 0) - (n1 > 0 ? n1 / n * h(g1, n1) : 0);
            we[b] = weighted_entropy(table, all, b, 1);
        }
        std::size_t by_ig = 0, by_we = 0;
        bool tie = false;
        for (std::size_t b = 1; b < d; ++b) {
            if (std::abs(ig[b] - ig[by_ig]) <= 1e-9) tie = true;
            if (ig[b] > ig[by_ig] + 1e-9) by_ig = b;
            if (we[b] < we[by_we] - 1e-9) by_we = b;
        }
        with_ties += tie;
        agree += by_ig == by_we;
    }
    report(7, agree == leaves, "one-step weighted entropy selects like information gain",
           std::to_string(agree) + "/" + std::to_string(leaves) + " leaves agree (" + std::to_string(with_ties)
               + " with ties)");
}

void criterion8()
{
    std::mt19937_64 rng(88);
    auto random_set = [&](std::size_t d, unsigned percent) {
        TrainingSet t;
        t.dim = d;
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
            (rng() % 100 < percent ? t.good : t.bad).push_back(binary_code(v, static_cast<unsigned>(d)));
        }
        return t;
    };
    auto shuffled = [&](std::size_t d) {
        std::vector<std::size_t> o(d);
        for (std::size_t i = 0; i < d; ++i) o[i] = i;
        std::shuffle(o.begin(), o.end(), rng);
        return o;
    };

    std::size_t semantic_bad = 0, checked_points = 0;
    for (std::size_t d = 1; d <= 12; ++d) {
        for (unsigned percent : {3u, 30u, 70u}) {
            const auto t = random_set(d, percent);
            const std::set<BitVec> good(t.good.begin(), t.good.end());
            const auto b = Bdd::from_good(t, shuffled(d));
            for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
                const auto x = binary_code(v, static_cast<unsigned>(d));
                semantic_bad += b.eval(x) != (good.count(x) > 0);
                ++checked_points;
            }
        }
    }

    std::size_t canon_bad = 0, sift_grew = 0, sift_changed_function = 0;
    for (int round = 0; round < 100; ++round) {
        const std::size_t d = 1 + rng() % 9;
        auto t = random_set(d, 10 + rng() % 80);
        const auto order = shuffled(d);
        const auto a = Bdd::from_good(t, order);
        auto rev = t;
        std::reverse(rev.good.begin(), rev.good.end());
        canon_bad += a.canonical() != Bdd::from_good(rev, order).canonical();
        const auto s = sift(a);
        sift_grew += s.size() > a.size();
        for (const auto& g : t.good) sift_changed_function += !s.eval(g);
        for (const auto& b : t.bad) sift_changed_function += s.eval(b);
    }

    const auto t = random_set(10, 25);
    const auto r1 = min_over_random_orders(t, 300, 2024);
    const auto r2 = min_over_random_orders(t, 300, 2024);
    const bool reproducible = r1.size == r2.size && r1.bdd.to_dot() == r2.bdd.to_dot() && r1.bdd.order() == r2.bdd.order();

    report(8, semantic_bad == 0 && canon_bad == 0 && sift_grew == 0 && sift_changed_function == 0 && reproducible,
           "BDD engine invariants",
           std::to_string(checked_points) + " points checked, semantic errors=" + std::to_string(semantic_bad)
               + " non-canonical=" + std::to_string(canon_bad) + " sift grew=" + std::to_string(sift_grew)
               + " sift changed function=" + std::to_string(sift_changed_function)
               + " seeded search reproducible=" + (reproducible ? "yes" : "no"));
}

void criterion9()
{
    CompareOptions options;
    options.orderings = 200;
    options.seed = 7;
    std::vector<CompareRow> rows;
    std::size_t failed = 0;
    std::ostringstream csv;
    csv << kReportHeader << '\n';
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto game = random_game({.states = 8 + (seed * 7) % 57, .priorities = 3}, 40'000 + seed);
        try {
            const auto row = compare(make_instance("random_" + std::to_string(seed), game), options);
            csv << format_row(row, false) << '\n';
            rows.push_back(row);
        } catch (const std::exception& e) {
            ++failed;
            info(std::string("compare failed: ") + e.what());
        }
    }
    const auto s = summarize(rows);
    report(9, failed == 0 && s.rows == 60, "corpus trend report",
           std::to_string(s.rows) + " games, median |DT|/|BDD|=" + fmt(s.median_dt_over_bdd) + " median |DT+|/|DT|="
               + fmt(s.median_dtplus_over_dt) + " DT smaller in " + fmt(100 * s.frac_dt_smaller, 1)
               + "% chain not worse in " + fmt(100 * s.frac_chain_not_worse, 1) + "%");
    if (s.frac_dt_smaller < 0.9) info("warning: trees are smaller than BDDs in fewer than 90% of the games");
    if (s.frac_chain_not_worse < 0.9) info("warning: chains do not help in more than 10% of the games");
    std::size_t shown = 0;
    std::istringstream lines(csv.str());
    for (std::string line; std::getline(lines, line) && shown < 6; ++shown) info("report: " + line);
}

} // namespace

int main()
{
    const std::vector<std::function<void()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9};
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            std::cout << "[FAIL] unexpected exception: " << e.what() << std::endl;
            ++failures;
        }
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion(s) failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
