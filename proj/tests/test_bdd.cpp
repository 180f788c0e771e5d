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


#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "stratdt/bdd.hpp"
#include "support.hpp"

using namespace stratdt;
using stratdt::testing::make_train;

namespace {

TrainingSet from_function(std::size_t d, const std::function<bool(const BitVec&)>& f)
{
    TrainingSet t;
    t.dim = d;
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << d); ++v) {
        auto x = binary_code(v, static_cast<unsigned>(d));
        (f(x) ? t.good : t.bad).push_back(x);
    }
    return t;
}

TrainingSet random_good(std::mt19937_64& rng, std::size_t d, unsigned percent)
{
    return from_function(d, [&](const BitVec&) { return rng() % 100 < percent; });
}

/// Reference construction by Shannon expansion over the order, splitting the
/// good rows level by level instead of OR-ing minterms.
Bdd partition_build(const TrainingSet& t, const std::vector<std::size_t>& order)
{
    Bdd b(t.dim, order);
    std::function<Bdd::NodeRef(std::size_t, std::vector<BitVec>)> rec = [&](std::size_t level,
                                                                             std::vector<BitVec> rows) {
        if (rows.empty()) return Bdd::kFalse;
        if (level == order.size()) return Bdd::kTrue;
        std::vector<BitVec> lo, hi;
        for (auto& r : rows) (r[order[level]] ? hi : lo).push_back(r);
        const auto l = rec(level + 1, std::move(lo));
        const auto h = rec(level + 1, std::move(hi));
        return b.make_node(order[level], l, h);
    };
    b.set_root(rec(0, t.good));
    b.collect_garbage();
    return b;
}

void check_semantics(const Bdd& b, const TrainingSet& t)
{
    std::set<BitVec> good(t.good.begin(), t.good.end());
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << t.dim); ++v) {
        auto x = binary_code(v, static_cast<unsigned>(t.dim));
        REQUIRE(b.eval(x) == (good.count(x) > 0));
    }
}

std::vector<std::size_t> shuffled(std::mt19937_64& rng, std::size_t d)
{
    std::vector<std::size_t> o(d);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    return o;
}

} // namespace

TEST_CASE("single good minterm and constants")
{
    auto t = make_train({"00001"}, {"00000"});
    auto b = Bdd::from_good(t);
    CHECK(b.size() == 5);
    CHECK(b.level_sizes() == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(Bdd::from_good(make_train({}, {"000"})).size() == 0);
    CHECK(Bdd::from_good(make_train({}, {"000"})).root() == Bdd::kFalse);
    auto all = from_function(4, [](const BitVec&) { return true; });
    CHECK(Bdd::from_good(all).size() == 0);
    CHECK(Bdd::from_good(all).root() == Bdd::kTrue);
}

TEST_CASE("exhaustive semantics up to twelve variables")
{
    std::mt19937_64 rng(1);
    for (std::size_t d = 1; d <= 12; ++d) {
        for (unsigned percent : {5u, 50u, 90u}) {
            auto t = random_good(rng, d, percent);
            check_semantics(Bdd::from_good(t), t);
            check_semantics(Bdd::from_good(t, shuffled(rng, d)), t);
        }
    }
}

TEST_CASE("canonical form under a fixed order")
{
    std::mt19937_64 rng(2);
    for (int round = 0; round < 100; ++round) {
        const std::size_t d = 1 + rng() % 8;
        auto t = random_good(rng, d, 10 + rng() % 80);
        auto order = shuffled(rng, d);
        auto a = Bdd::from_good(t, order);
        auto reversed = t;
        std::reverse(reversed.good.begin(), reversed.good.end());
        auto b = Bdd::from_good(reversed, order);
        auto c = partition_build(t, order);
        CHECK(a.canonical() == b.canonical());
        CHECK(a.canonical() == c.canonical());
        CHECK(a.size() == c.size());
    }
}

TEST_CASE("adjacent swaps are local and preserve the function")
{
    std::mt19937_64 rng(3);
    for (int round = 0; round < 60; ++round) {
        const std::size_t d = 2 + rng() % 7;
        auto t = random_good(rng, d, 20 + rng() % 60);
        auto b = Bdd::from_good(t, shuffled(rng, d));
        b.collect_garbage();
        const std::size_t level = rng() % (d - 1);
        std::vector<std::pair<Bdd::NodeRef, Bdd::Node>> others;
        for (auto r : b.reachable()) {
            const auto l = b.level_of(b.node(r).var);
            if (l != level && l != level + 1) others.emplace_back(r, b.node(r));
        }
        const auto root = b.root();
        const auto sizes = b.level_sizes();
        b.swap_adjacent(level);
        CHECK(b.root() == root);
        check_semantics(b, t);
        for (const auto& [r, n] : others) {
            CHECK(b.node(r).var == n.var);
            CHECK(b.node(r).low == n.low);
            CHECK(b.node(r).high == n.high);
        }
        const auto after = b.level_sizes();
        for (std::size_t l = 0; l < d; ++l) {
            if (l != level && l != level + 1) CHECK(after[l] == sizes[l]);
        }
        // The swapped diagram is the canonical diagram of the new order.
        b.collect_garbage();
        CHECK(b.canonical() == Bdd::from_good(t, b.order()).canonical());
    }
}

TEST_CASE("sifting never increases the size")
{
    std::mt19937_64 rng(4);
    for (int round = 0; round < 60; ++round) {
        const std::size_t d = 1 + rng() % 9;
        auto t = random_good(rng, d, 10 + rng() % 80);
        auto b = Bdd::from_good(t, shuffled(rng, d));
        auto s = sift(b);
        CHECK(s.size() <= b.size());
        check_semantics(s, t);
        CHECK(s.canonical() == Bdd::from_good(t, s.order()).canonical());
    }
}

TEST_CASE("order sensitivity")
{
    auto majority = from_function(3, [](const BitVec& x) { return x[0] + x[1] + x[2] >= 2; });
    std::vector<std::size_t> order{0, 1, 2};
    std::set<std::size_t> sizes;
    do {
        sizes.insert(Bdd::from_good(majority, order).size());
    } while (std::next_permutation(order.begin(), order.end()));
    CHECK(sizes.size() == 1);

    auto interleave = from_function(4, [](const BitVec& x) { return x[0] == x[2] && x[1] == x[3]; });
    std::vector<std::size_t> o{0, 1, 2, 3};
    std::size_t best = 100, worst = 0;
    std::vector<std::size_t> worst_order;
    do {
        const auto s = Bdd::from_good(interleave, o).size();
        best = std::min(best, s);
        if (s > worst) {
            worst = s;
            worst_order = o;
        }
    } while (std::next_permutation(o.begin(), o.end()));
    CHECK(best < worst);
    auto sifted = sift(Bdd::from_good(interleave, worst_order));
    CHECK(sifted.size() < worst);
    CHECK(sifted.size() == best);

    // An already optimal order stays put.
    auto good_order = Bdd::from_good(interleave, {0, 2, 1, 3});
    CHECK(good_order.size() == best);
    CHECK(sift(good_order).size() == best);
}

TEST_CASE("minimum over random orders")
{
    auto one = make_train({"1"}, {"0"});
    CHECK(min_over_random_orders(one, 1000, 1).size == 1);

    std::mt19937_64 rng(5);
    auto t = random_good(rng, 8, 30);
    auto a = min_over_random_orders(t, 200, 42);
    auto b = min_over_random_orders(t, 200, 42);
    CHECK(a.size == b.size);
    CHECK(a.bdd.order() == b.bdd.order());
    CHECK(a.bdd.canonical() == b.bdd.canonical());
    CHECK(a.bdd.to_dot() == b.bdd.to_dot());
    CHECK(a.size == a.bdd.size());
    CHECK(a.size <= Bdd::from_good(t).size());
    check_semantics(a.bdd, t);
    // The identity order is always among the candidates.
    CHECK(min_over_random_orders(t, 1, 7).bdd.order() == Bdd::from_good(t).order());
    CHECK(min_over_random_orders(t, 400, 42).size <= a.size);
}

TEST_CASE("DOT export")
{
    auto b = Bdd::from_good(make_train({"01"}, {"00"}));
    auto dot = b.to_dot({"a", "b"});
    CHECK(dot.find("digraph bdd") != std::string::npos);
    CHECK(dot.find("label=\"b\"") != std::string::npos);
    CHECK(b.to_dot().find("label=\"x1\"") != std::string::npos);
}

TEST_CASE("invalid orders")
{
    CHECK_THROWS_AS(Bdd(3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Bdd(3, {0, 1, 1}), std::invalid_argument);
}
