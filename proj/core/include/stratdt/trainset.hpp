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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "stratdt/bits.hpp"
#include "stratdt/game.hpp"

namespace stratdt {

/// Good/Bad samples over {0,1}^dim. Rows keep insertion order.
struct TrainingSet {
    std::size_t dim = 0;
    std::vector<BitVec> good;
    std::vector<BitVec> bad;
    std::vector<std::string> feature_names; // empty or dim entries

    std::size_t size() const { return good.size() + bad.size(); }

    /// First vector that is labelled both good and bad, if any.
    std::optional<BitVec> find_contradiction() const;

    /// Throws std::invalid_argument on wrong row widths or duplicate rows.
    void check_shape() const;
};

/// Thrown when a strategy is missing at a state the reachability search needs.
class StrategyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * States of the strategy's player reachable from `initial` when that
 * player follows `strategy` and the opponent may take any action.
 * States that already decide a safety/reachability play (unsafe resp.
 * target states) end the search and are not part of the result.
 */
std::vector<StateId> reach_states(const GraphGame& game, const MemorylessStrategy& strategy, StateId initial);

/**
 * Good rows encode (s, strategy(s)) and bad rows (s, a) for every other
 * action available at s, for s ranging over reach_states().
 */
TrainingSet build_training_set(const GraphGame& game, const BitEncoding& encoding,
                               const MemorylessStrategy& strategy, StateId initial);

/// `d=<dim>`, optional `#name,...`, then `<b1>,...,<bd>,<good|bad>` per row.
void write_csv(std::ostream& os, const TrainingSet& train);
TrainingSet read_csv(std::istream& is);
TrainingSet read_csv_file(const std::string& path);

} // namespace stratdt
