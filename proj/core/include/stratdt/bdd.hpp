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
#include <unordered_map>
#include <vector>

#include "stratdt/bits.hpp"
#include "stratdt/trainset.hpp"

namespace stratdt {

/**
 * Reduced ordered BDD with its own node table (no complement edges).
 * Node 0 and 1 are the terminals. order()[level] is the variable tested
 * at that level; the root sits at the lowest level in use.
 */
class Bdd {
public:
    using NodeRef = std::uint32_t;
    static constexpr NodeRef kFalse = 0;
    static constexpr NodeRef kTrue = 1;

    struct Node {
        std::uint32_t var;
        NodeRef low;
        NodeRef high;
    };

    /// Constant false over `num_vars` variables in identity order.
    explicit Bdd(std::size_t num_vars = 0);
    Bdd(std::size_t num_vars, std::vector<std::size_t> order);

    /// Disjunction of the good minterms, built with apply-OR.
    static Bdd from_good(const TrainingSet& train, std::vector<std::size_t> order);
    static Bdd from_good(const TrainingSet& train);

    std::size_t num_vars() const { return var_level_.size(); }
    const std::vector<std::size_t>& order() const { return order_; }
    std::size_t level_of(std::size_t var) const { return var_level_.at(var); }
    NodeRef root() const { return root_; }
    const Node& node(NodeRef r) const { return nodes_.at(r); }

    /// Inner nodes reachable from the root.
    std::size_t size() const;
    /// Reachable inner nodes per level.
    std::vector<std::size_t> level_sizes() const;
    /// Reachable inner nodes (excluding terminals).
    std::vector<NodeRef> reachable() const;

    bool eval(BitView x) const;

    NodeRef make_node(std::size_t var, NodeRef low, NodeRef high);
    NodeRef minterm(BitView x);
    NodeRef apply_or(NodeRef a, NodeRef b);
    void set_root(NodeRef r) { root_ = r; }

    /// Exchanges the variables at `level` and `level + 1` in place; the
    /// root keeps its identity and nodes on other levels are untouched.
    void swap_adjacent(std::size_t level);

    /// Moves `var` to `level` through adjacent swaps.
    void move_var(std::size_t var, std::size_t level);

    /// Rudell sifting: every variable visits every level and stays at the best one.
    void sift();

    /// Drops unreachable nodes; node references change.
    void collect_garbage();

    /// Structural fingerprint of the reachable DAG under the current order.
    std::string canonical() const;

    std::string to_dot(const std::vector<std::string>& feature_names = {}) const;

private:
    std::uint64_t key(std::uint32_t var, NodeRef low, NodeRef high) const;
    std::size_t level_of_ref(NodeRef r) const;

    std::vector<Node> nodes_;
    std::unordered_map<std::uint64_t, NodeRef> unique_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> var_level_;
    NodeRef root_ = kFalse;
};

/// Sifted copy of `bdd`.
Bdd sift(Bdd bdd);

struct BddSearchResult {
    Bdd bdd;
    std::size_t size = 0;
};

/**
 * Smallest BDD of the good set over the identity order and n_orders - 1
 * seeded random permutations. Ties go to the lexicographically smaller order.
 */
BddSearchResult min_over_random_orders(const TrainingSet& train, std::size_t n_orders, std::uint64_t seed);

} // namespace stratdt
