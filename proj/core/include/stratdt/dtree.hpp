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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stratdt/bits.hpp"

namespace stratdt {

/// Test of a single coordinate (0-based; printed 1-based as x<i+1>).
struct BitTest {
    std::size_t bit;
    bool operator==(const BitTest&) const = default;
};

struct Literal {
    std::size_t bit;
    std::uint8_t value;
    bool operator==(const Literal&) const = default;
};

/// Disjunction of literals; satisfied if any literal matches.
struct ChainTest {
    std::vector<Literal> literals;
    bool operator==(const ChainTest&) const = default;
};

using Predicate = std::variant<BitTest, ChainTest>;

bool satisfied(const Predicate& pred, BitView x);
std::string to_string(const Predicate& pred);

/**
 * Binary decision tree over {0,1}^d. Inner nodes route to their first
 * child when the predicate is unsatisfied and to the second otherwise;
 * leaves answer YES or NO.
 */
class DecisionTree {
public:
    using NodeId = std::size_t;

    struct Node {
        bool is_leaf = true;
        bool yes = true;
        Predicate pred = BitTest{0};
        NodeId child[2] = {0, 0};
    };

    DecisionTree() = default;
    DecisionTree(std::size_t dim, bool yes);

    std::size_t dim() const { return dim_; }
    NodeId root() const { return 0; }
    const Node& node(NodeId id) const { return nodes_.at(id); }
    std::size_t num_nodes() const { return nodes_.size(); }

    /// Turns leaf `id` into an inner node with two fresh leaves; returns the first child.
    NodeId split(NodeId id, Predicate pred, bool yes0, bool yes1);
    void relabel(NodeId id, bool yes);

    /// Throws std::invalid_argument when |x| != dim.
    bool eval(BitView x) const;

    /// Number of inner nodes; a chain node counts once.
    std::size_t size() const;
    /// Longest root-to-leaf path counted in inner nodes.
    std::size_t depth() const;
    /// True iff no single-bit test repeats along any root-leaf path.
    bool bits_unique_on_paths() const;
    /// Does any node test `bit` (as a single bit or inside a chain)?
    bool mentions(std::size_t bit) const;

    /// tree ::= YES | NO | ( pred SP tree SP tree )
    std::string to_text() const;
    static DecisionTree parse(std::string_view text, std::size_t dim);

    std::string to_dot(const std::vector<std::string>& feature_names = {}) const;

    bool operator==(const DecisionTree& o) const { return to_text() == o.to_text() && dim_ == o.dim_; }

private:
    std::size_t dim_ = 0;
    std::vector<Node> nodes_{Node{}};
};

} // namespace stratdt
