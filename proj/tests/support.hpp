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

// Small helpers shared by the unit tests and the acceptance runner.

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "stratdt/game.hpp"
#include "stratdt/trainset.hpp"

namespace stratdt::testing {

inline BitVec bits(std::string_view s)
{
    BitVec v;
    for (char c : s) v.push_back(c == '1' ? 1 : 0);
    return v;
}

inline TrainingSet make_train(std::initializer_list<std::string_view> good, std::initializer_list<std::string_view> bad)
{
    TrainingSet t;
    t.dim = good.size() ? good.begin()->size() : (bad.size() ? bad.begin()->size() : 0);
    for (auto g : good) t.good.push_back(bits(g));
    for (auto b : bad) t.bad.push_back(bits(b));
    return t;
}

/// Strategy on four states: three state bits, one action bit.
inline TrainingSet four_state_strategy()
{
    auto t = make_train({"0000", "0101", "1001", "1110"}, {"0001", "0100", "1000", "1111"});
    t.feature_names = {"state1", "state2", "state3", "action"};
    return t;
}

/// The x6 = x7 look-ahead example over seven bits.
inline TrainingSet x6_equals_x7()
{
    return make_train({"0000011", "0000000"}, {"0000010", "0000001"});
}

/// Explicit game from a compact description: owners, successor lists and priorities.
inline GraphGame parity_game(std::vector<int> owners, std::vector<std::vector<StateId>> succ, std::vector<unsigned> prio)
{
    GraphGame::Spec spec;
    spec.kind = ObjectiveKind::Parity;
    for (auto o : owners) spec.owner.push_back(o == 0 ? Player::P1 : Player::P2);
    for (auto& s : succ) {
        std::vector<Edge> edges;
        for (auto t : s) edges.push_back(Edge{t, t});
        spec.actions.push_back(std::move(edges));
    }
    spec.priorities = std::move(prio);
    return GraphGame(std::move(spec));
}

inline GraphGame marked_game(ObjectiveKind kind, std::vector<int> owners, std::vector<std::vector<StateId>> succ,
                             std::vector<bool> marked, StateId initial = 0)
{
    GraphGame::Spec spec;
    spec.kind = kind;
    for (auto o : owners) spec.owner.push_back(o == 0 ? Player::P1 : Player::P2);
    for (auto& s : succ) {
        std::vector<Edge> edges;
        for (auto t : s) edges.push_back(Edge{t, t});
        spec.actions.push_back(std::move(edges));
    }
    spec.marked = std::move(marked);
    spec.initial = initial;
    return GraphGame(std::move(spec));
}

} // namespace stratdt::testing
