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

#include "stratdt/trainset.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace stratdt {

std::optional<BitVec> TrainingSet::find_contradiction() const
{
    std::set<BitVec> goods(good.begin(), good.end());
    for (const auto& b : bad) {
        if (goods.count(b)) return b;
    }
    return std::nullopt;
}

void TrainingSet::check_shape() const
{
    if (!feature_names.empty() && feature_names.size() != dim) {
        throw std::invalid_argument("training set: feature name count differs from dimension");
    }
    std::set<BitVec> seen_good, seen_bad;
    for (const auto& g : good) {
        if (g.size() != dim) throw std::invalid_argument("training set: row width differs from dimension");
        if (!seen_good.insert(g).second) throw std::invalid_argument("training set: duplicate good row " + to_string(g));
    }
    for (const auto& b : bad) {
        if (b.size() != dim) throw std::invalid_argument("training set: row width differs from dimension");
        if (!seen_bad.insert(b).second) throw std::invalid_argument("training set: duplicate bad row " + to_string(b));
    }
}

std::vector<StateId> reach_states(const GraphGame& game, const MemorylessStrategy& strategy, StateId initial)
{
    const auto n = game.num_states();
    if (initial >= n) throw std::invalid_argument("reach_states: initial state out of range");
    const Player me = strategy.player();
    const auto decided = game.decided_states();

    std::vector<bool> seen(n, false);
    std::deque<StateId> queue{initial};
    seen[initial] = true;
    std::vector<StateId> owned;
    while (!queue.empty()) {
        const StateId s = queue.front();
        queue.pop_front();
        if (decided.contains(s)) continue;
        auto visit = [&](StateId t) {
            if (!seen[t]) {
                seen[t] = true;
                queue.push_back(t);
            }
        };
        if (game.owner(s) == me) {
            if (!strategy.defined(s)) {
                throw StrategyError("strategy of player " + std::to_string(number(me))
                                    + " is undefined at reachable state " + std::to_string(s));
            }
            owned.push_back(s);
            visit(game.successor(s, static_cast<std::size_t>(strategy.action(s))));
        } else {
            for (const auto& e : game.actions(s)) visit(e.target);
        }
    }
    std::sort(owned.begin(), owned.end());
    return owned;
}

TrainingSet build_training_set(const GraphGame& game, const BitEncoding& encoding,
                               const MemorylessStrategy& strategy, StateId initial)
{
    TrainingSet train;
    train.dim = encoding.dimension();
    train.feature_names = encoding.feature_names;

    auto row = [&](StateId s, std::size_t a) {
        BitVec x = encoding.state_codes.at(s);
        const auto& act = encoding.action_codes.at(s).at(a);
        x.insert(x.end(), act.begin(), act.end());
        return x;
    };

    for (StateId s : reach_states(game, strategy, initial)) {
        const auto chosen = static_cast<std::size_t>(strategy.action(s));
        const BitVec good = row(s, chosen);
        train.good.push_back(good);
        std::set<BitVec> bad_here;
        for (std::size_t a = 0; a < game.num_actions(s); ++a) {
            if (a == chosen) continue;
            BitVec b = row(s, a);
            if (b != good && bad_here.insert(b).second) train.bad.push_back(std::move(b));
        }
    }
    return train;
}

void write_csv(std::ostream& os, const TrainingSet& train)
{
    os << "d=" << train.dim << '\n';
    if (!train.feature_names.empty()) {
        os << '#';
        for (std::size_t i = 0; i < train.feature_names.size(); ++i) {
            if (i) os << ',';
            os << train.feature_names[i];
        }
        os << '\n';
    }
    auto emit = [&](const BitVec& x, const char* label) {
        for (auto b : x) os << (b ? '1' : '0') << ',';
        os << label << '\n';
    };
    for (const auto& g : train.good) emit(g, "good");
    for (const auto& b : train.bad) emit(b, "bad");
}

TrainingSet read_csv(std::istream& is)
{
    TrainingSet train;
    std::string line;
    std::size_t lineno = 0;
    bool have_dim = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!have_dim) {
            if (line.rfind("d=", 0) != 0) throw ParseError(lineno, "expected header d=<int>");
            try {
                std::size_t used = 0;
                train.dim = std::stoul(line.substr(2), &used);
                if (used != line.size() - 2) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad dimension in header");
            }
            have_dim = true;
            continue;
        }
        if (line[0] == '#') {
            if (!train.feature_names.empty() || !train.good.empty() || !train.bad.empty()) {
                throw ParseError(lineno, "feature names must directly follow the header");
            }
            std::stringstream ss(line.substr(1));
            std::string name;
            while (std::getline(ss, name, ',')) train.feature_names.push_back(name);
            if (train.feature_names.size() != train.dim) throw ParseError(lineno, "feature name count differs from d");
            continue;
        }
        BitVec x;
        x.reserve(train.dim);
        std::stringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != train.dim + 1) {
            throw ParseError(lineno, "expected " + std::to_string(train.dim) + " bits and a label");
        }
        for (std::size_t i = 0; i < train.dim; ++i) {
            if (fields[i] == "0") x.push_back(0);
            else if (fields[i] == "1") x.push_back(1);
            else throw ParseError(lineno, "bit value must be 0 or 1");
        }
        if (fields.back() == "good") train.good.push_back(std::move(x));
        else if (fields.back() == "bad") train.bad.push_back(std::move(x));
        else throw ParseError(lineno, "label must be good or bad");
    }
    if (!have_dim) throw ParseError(lineno, "missing header d=<int>");
    try {
        train.check_shape();
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
    return train;
}

TrainingSet read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_csv(in);
}

} // namespace stratdt
