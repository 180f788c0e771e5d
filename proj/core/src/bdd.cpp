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

#include "stratdt/bdd.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace stratdt {

namespace {

constexpr std::uint32_t kTerminalVar = std::numeric_limits<std::uint32_t>::max();
constexpr unsigned kRefBits = 26;
constexpr std::uint64_t kRefLimit = std::uint64_t{1} << kRefBits;
constexpr std::uint64_t kVarLimit = std::uint64_t{1} << (64 - 2 * kRefBits);

std::vector<std::size_t> identity_order(std::size_t n)
{
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    return order;
}

} // namespace

Bdd::Bdd(std::size_t num_vars) : Bdd(num_vars, identity_order(num_vars)) {}

Bdd::Bdd(std::size_t num_vars, std::vector<std::size_t> order) : order_(std::move(order))
{
    if (num_vars >= kVarLimit) throw std::length_error("bdd: too many variables");
    if (order_.size() != num_vars) throw std::invalid_argument("bdd: order is not a permutation of the variables");
    var_level_.assign(num_vars, num_vars);
    for (std::size_t level = 0; level < num_vars; ++level) {
        const auto v = order_[level];
        if (v >= num_vars || var_level_[v] != num_vars) {
            throw std::invalid_argument("bdd: order is not a permutation of the variables");
        }
        var_level_[v] = level;
    }
    nodes_.push_back(Node{kTerminalVar, kFalse, kFalse});
    nodes_.push_back(Node{kTerminalVar, kTrue, kTrue});
}

std::uint64_t Bdd::key(std::uint32_t var, NodeRef low, NodeRef high) const
{
    return (std::uint64_t{var} << (2 * kRefBits)) | (std::uint64_t{low} << kRefBits) | high;
}

std::size_t Bdd::level_of_ref(NodeRef r) const
{
    const auto var = nodes_[r].var;
    return var == kTerminalVar ? num_vars() : var_level_[var];
}

Bdd::NodeRef Bdd::make_node(std::size_t var, NodeRef low, NodeRef high)
{
    if (low == high) return low;
    const auto k = key(static_cast<std::uint32_t>(var), low, high);
    if (auto it = unique_.find(k); it != unique_.end()) return it->second;
    if (nodes_.size() >= kRefLimit) throw std::length_error("bdd: node table full");
    const auto ref = static_cast<NodeRef>(nodes_.size());
    nodes_.push_back(Node{static_cast<std::uint32_t>(var), low, high});
    unique_.emplace(k, ref);
    return ref;
}

Bdd::NodeRef Bdd::minterm(BitView x)
{
    if (x.size() != num_vars()) throw std::invalid_argument("bdd: minterm width differs from variable count");
    NodeRef r = kTrue;
    for (std::size_t level = num_vars(); level-- > 0;) {
        const auto var = order_[level];
        r = x[var] ? make_node(var, kFalse, r) : make_node(var, r, kFalse);
    }
    return r;
}

Bdd::NodeRef Bdd::apply_or(NodeRef a, NodeRef b)
{
    std::unordered_map<std::uint64_t, NodeRef> cache;
    std::function<NodeRef(NodeRef, NodeRef)> rec = [&](NodeRef f, NodeRef g) -> NodeRef {
        if (f == kTrue || g == kTrue) return kTrue;
        if (f == kFalse || f == g) return g;
        if (g == kFalse) return f;
        if (f > g) std::swap(f, g);
        const auto ck = (std::uint64_t{f} << 32) | g;
        if (auto it = cache.find(ck); it != cache.end()) return it->second;

        const auto lf = level_of_ref(f), lg = level_of_ref(g);
        const auto top = std::min(lf, lg);
        const NodeRef f0 = lf == top ? nodes_[f].low : f;
        const NodeRef f1 = lf == top ? nodes_[f].high : f;
        const NodeRef g0 = lg == top ? nodes_[g].low : g;
        const NodeRef g1 = lg == top ? nodes_[g].high : g;
        const NodeRef low = rec(f0, g0);
        const NodeRef high = rec(f1, g1);
        const NodeRef r = make_node(order_[top], low, high);
        cache.emplace(ck, r);
        return r;
    };
    return rec(a, b);
}

Bdd Bdd::from_good(const TrainingSet& train, std::vector<std::size_t> order)
{
    Bdd bdd(train.dim, std::move(order));
    NodeRef acc = kFalse;
    for (const auto& g : train.good) acc = bdd.apply_or(acc, bdd.minterm(g));
    bdd.root_ = acc;
    bdd.collect_garbage();
    return bdd;
}

Bdd Bdd::from_good(const TrainingSet& train)
{
    return from_good(train, identity_order(train.dim));
}

std::vector<Bdd::NodeRef> Bdd::reachable() const
{
    std::vector<NodeRef> out;
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<NodeRef> stack{root_};
    while (!stack.empty()) {
        const auto r = stack.back();
        stack.pop_back();
        if (r <= kTrue || seen[r]) continue;
        seen[r] = 1;
        out.push_back(r);
        stack.push_back(nodes_[r].high);
        stack.push_back(nodes_[r].low);
    }
    return out;
}

std::size_t Bdd::size() const
{
    return reachable().size();
}

std::vector<std::size_t> Bdd::level_sizes() const
{
    std::vector<std::size_t> sizes(num_vars(), 0);
    for (auto r : reachable()) ++sizes[level_of_ref(r)];
    return sizes;
}

bool Bdd::eval(BitView x) const
{
    if (x.size() != num_vars()) throw std::invalid_argument("bdd: input width differs from variable count");
    NodeRef r = root_;
    while (r > kTrue) r = x[nodes_[r].var] ? nodes_[r].high : nodes_[r].low;
    return r == kTrue;
}

void Bdd::swap_adjacent(std::size_t level)
{
    if (level + 1 >= num_vars()) throw std::out_of_range("bdd: no level below " + std::to_string(level));
    const auto x = static_cast<std::uint32_t>(order_[level]);
    const auto y = static_cast<std::uint32_t>(order_[level + 1]);

    // every x-node, dead or alive, must respect the new order
    std::vector<NodeRef> xs;
    for (NodeRef r = 2; r < nodes_.size(); ++r) {
        if (nodes_[r].var == x) xs.push_back(r);
    }

    std::swap(order_[level], order_[level + 1]);
    var_level_[x] = level + 1;
    var_level_[y] = level;

    for (auto f : xs) {
        const Node old = nodes_[f];
        const bool dep0 = nodes_[old.low].var == y;
        const bool dep1 = nodes_[old.high].var == y;
        if (!dep0 && !dep1) continue;
        const NodeRef f00 = dep0 ? nodes_[old.low].low : old.low;
        const NodeRef f01 = dep0 ? nodes_[old.low].high : old.low;
        const NodeRef f10 = dep1 ? nodes_[old.high].low : old.high;
        const NodeRef f11 = dep1 ? nodes_[old.high].high : old.high;
        const NodeRef g0 = make_node(x, f00, f10);
        const NodeRef g1 = make_node(x, f01, f11);

        unique_.erase(key(x, old.low, old.high));
        const auto k = key(y, g0, g1);
        if (!unique_.emplace(k, f).second) throw std::logic_error("bdd: swap produced a duplicate node");
        nodes_[f] = Node{y, g0, g1};
    }
}

void Bdd::move_var(std::size_t var, std::size_t level)
{
    if (level >= num_vars()) throw std::out_of_range("bdd: level out of range");
    while (level_of(var) < level) swap_adjacent(level_of(var));
    while (level_of(var) > level) swap_adjacent(level_of(var) - 1);
}

void Bdd::collect_garbage()
{
    // post-order renumbering keeps children before parents
    std::vector<NodeRef> remap(nodes_.size(), 0);
    std::vector<char> done(nodes_.size(), 0);
    remap[kFalse] = kFalse;
    remap[kTrue] = kTrue;
    done[kFalse] = done[kTrue] = 1;

    std::vector<Node> fresh{nodes_[kFalse], nodes_[kTrue]};
    std::unordered_map<std::uint64_t, NodeRef> table;
    std::vector<std::pair<NodeRef, bool>> stack{{root_, false}};
    while (!stack.empty()) {
        auto [r, expanded] = stack.back();
        stack.pop_back();
        if (done[r]) continue;
        if (!expanded) {
            stack.push_back({r, true});
            stack.push_back({nodes_[r].high, false});
            stack.push_back({nodes_[r].low, false});
            continue;
        }
        const Node& n = nodes_[r];
        const auto ref = static_cast<NodeRef>(fresh.size());
        fresh.push_back(Node{n.var, remap[n.low], remap[n.high]});
        table.emplace(key(n.var, remap[n.low], remap[n.high]), ref);
        remap[r] = ref;
        done[r] = 1;
    }
    root_ = remap[root_];
    nodes_ = std::move(fresh);
    unique_ = std::move(table);
}

void Bdd::sift()
{
    collect_garbage();
    const auto d = num_vars();
    if (d < 2) return;

    const auto sizes = level_sizes();
    std::vector<std::size_t> vars = identity_order(d);
    std::stable_sort(vars.begin(), vars.end(), [&](std::size_t a, std::size_t b) {
        return sizes[level_of(a)] > sizes[level_of(b)];
    });

    for (auto var : vars) {
        std::size_t best_size = size();
        std::size_t best_level = level_of(var);
        auto probe = [&] {
            const auto s = size();
            if (s < best_size) {
                best_size = s;
                best_level = level_of(var);
            }
        };
        while (level_of(var) + 1 < d) {
            swap_adjacent(level_of(var));
            probe();
        }
        while (level_of(var) > 0) {
            swap_adjacent(level_of(var) - 1);
            probe();
        }
        move_var(var, best_level);
        collect_garbage();
    }
}

std::string Bdd::canonical() const
{
    std::ostringstream os;
    os << "order";
    for (auto v : order_) os << ' ' << v;
    os << '|';
    std::unordered_map<NodeRef, std::size_t> id{{kFalse, 0}, {kTrue, 1}};
    std::function<std::size_t(NodeRef)> walk = [&](NodeRef r) -> std::size_t {
        if (auto it = id.find(r); it != id.end()) return it->second;
        const auto lo = walk(nodes_[r].low);
        const auto hi = walk(nodes_[r].high);
        const auto me = id.size();
        id.emplace(r, me);
        os << me << ':' << nodes_[r].var << ':' << lo << ':' << hi << ';';
        return me;
    };
    walk(root_);
    return os.str();
}

std::string Bdd::to_dot(const std::vector<std::string>& feature_names) const
{
    auto label = [&](std::uint32_t var) {
        if (feature_names.size() == num_vars()) return feature_names[var];
        return "x" + std::to_string(var + 1);
    };
    std::ostringstream os;
    os << "digraph bdd {\n";
    os << "  t0 [shape=box, label=\"0\"];\n";
    os << "  t1 [shape=box, label=\"1\"];\n";
    auto name = [](NodeRef r) { return r <= kTrue ? "t" + std::to_string(r) : "n" + std::to_string(r); };
    auto nodes = reachable();
    std::sort(nodes.begin(), nodes.end());
    for (auto r : nodes) {
        os << "  " << name(r) << " [label=\"" << label(nodes_[r].var) << "\"];\n";
        os << "  " << name(r) << " -> " << name(nodes_[r].low) << " [style=dashed, label=\"=0\"];\n";
        os << "  " << name(r) << " -> " << name(nodes_[r].high) << " [label=\"=1\"];\n";
    }
    os << "}\n";
    return os.str();
}

Bdd sift(Bdd bdd)
{
    bdd.sift();
    return bdd;
}

BddSearchResult min_over_random_orders(const TrainingSet& train, std::size_t n_orders, std::uint64_t seed)
{
    if (n_orders == 0) throw std::invalid_argument("min_over_random_orders: need at least one order");
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order = identity_order(train.dim);

    BddSearchResult best{Bdd::from_good(train, order), 0};
    best.size = best.bdd.size();
    for (std::size_t i = 1; i < n_orders; ++i) {
        // Fisher-Yates with plain modulo draws keeps runs identical across standard libraries
        for (std::size_t j = order.size(); j > 1; --j) std::swap(order[j - 1], order[rng() % j]);
        Bdd candidate = Bdd::from_good(train, order);
        const auto s = candidate.size();
        if (s < best.size || (s == best.size && candidate.order() < best.bdd.order())) {
            best = BddSearchResult{std::move(candidate), s};
        }
    }
    return best;
}

} // namespace stratdt
