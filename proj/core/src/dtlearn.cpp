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

#include "stratdt/dtlearn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace stratdt {

SampleTable::SampleTable(const TrainingSet& train) : dim_(train.dim)
{
    bits_.reserve(train.size() * dim_);
    labels_.reserve(train.size());
    for (const auto& g : train.good) {
        bits_.insert(bits_.end(), g.begin(), g.end());
        labels_.push_back(1);
    }
    for (const auto& b : train.bad) {
        bits_.insert(bits_.end(), b.begin(), b.end());
        labels_.push_back(0);
    }
}

std::vector<std::uint32_t> SampleTable::all() const
{
    std::vector<std::uint32_t> idx(size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
    return idx;
}

ClassCounts count_classes(const SampleTable& table, LeafView leaf)
{
    ClassCounts c;
    for (auto i : leaf) {
        if (table.good(i)) ++c.good;
        else ++c.bad;
    }
    return c;
}

double entropy(std::size_t good, std::size_t bad)
{
    const std::size_t total = good + bad;
    if (total == 0) throw std::invalid_argument("entropy of an empty node");
    auto term = [total](std::size_t part) {
        if (part == 0) return 0.0;
        const double p = static_cast<double>(part) / static_cast<double>(total);
        return -p * std::log2(p);
    };
    return term(good) + term(bad);
}

namespace {

/// |l| H(l), 0 for an empty node.
double mass_entropy(std::size_t good, std::size_t bad)
{
    const auto total = good + bad;
    return total == 0 ? 0.0 : static_cast<double>(total) * entropy(good, bad);
}

/// Per-bit counts of samples with the bit set, split by class.
struct BitCounts {
    ClassCounts all;
    std::vector<std::size_t> ones_good;
    std::vector<std::size_t> ones_bad;

    ClassCounts side(std::size_t bit, int value) const
    {
        if (value == 1) return {ones_good[bit], ones_bad[bit]};
        return {all.good - ones_good[bit], all.bad - ones_bad[bit]};
    }
};

BitCounts bit_counts(const SampleTable& table, LeafView leaf)
{
    BitCounts bc;
    const auto d = table.dim();
    bc.ones_good.assign(d, 0);
    bc.ones_bad.assign(d, 0);
    for (auto i : leaf) {
        auto row = table.row(i);
        auto& ones = table.good(i) ? bc.ones_good : bc.ones_bad;
        (table.good(i) ? bc.all.good : bc.all.bad)++;
        for (std::size_t b = 0; b < d; ++b) ones[b] += row[b];
    }
    return bc;
}

/// WE^1(l, bit) from precomputed counts.
double we1(const BitCounts& bc, std::size_t bit)
{
    const auto c0 = bc.side(bit, 0);
    const auto c1 = bc.side(bit, 1);
    return mass_entropy(c0.good, c0.bad) + mass_entropy(c1.good, c1.bad);
}

void partition(const SampleTable& table, LeafView leaf, std::size_t bit,
               std::vector<std::uint32_t>& l0, std::vector<std::uint32_t>& l1)
{
    l0.clear();
    l1.clear();
    for (auto i : leaf) (table.bit(i, bit) ? l1 : l0).push_back(i);
}

/// min over bits of WE^k(leaf, bit).
double best_weighted_entropy(const SampleTable& table, LeafView leaf, unsigned k);

double weighted_entropy_impl(const SampleTable& table, LeafView leaf, std::size_t bit, unsigned k)
{
    if (leaf.empty()) return 0.0;
    if (k == 0) {
        const auto c = count_classes(table, leaf);
        return mass_entropy(c.good, c.bad);
    }
    std::vector<std::uint32_t> l0, l1;
    partition(table, leaf, bit, l0, l1);
    return best_weighted_entropy(table, l0, k - 1) + best_weighted_entropy(table, l1, k - 1);
}

double best_weighted_entropy(const SampleTable& table, LeafView leaf, unsigned k)
{
    if (leaf.empty()) return 0.0;
    const auto bc = bit_counts(table, leaf);
    // WE^k of a pure node is 0 for every k; WE^0 ignores the bit
    if (!bc.all.mixed() || k == 0) return mass_entropy(bc.all.good, bc.all.bad);
    double best = std::numeric_limits<double>::infinity();
    if (k == 1) {
        for (std::size_t b = 0; b < table.dim(); ++b) best = std::min(best, we1(bc, b));
        return best;
    }
    for (std::size_t b = 0; b < table.dim(); ++b) {
        best = std::min(best, weighted_entropy_impl(table, leaf, b, k));
    }
    return best;
}

void require_nonempty(LeafView leaf, const char* what)
{
    if (leaf.empty()) throw std::invalid_argument(std::string(what) + ": empty leaf");
}

void require_bit(const SampleTable& table, std::size_t bit, const char* what)
{
    if (bit >= table.dim()) throw std::out_of_range(std::string(what) + ": bit index out of range");
}

/// Index of the maximum with ties (within tolerance) going to the lowest index.
template <class Score>
std::pair<std::size_t, double> argmax_lowest(std::size_t count, Score score)
{
    std::size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < count; ++i) {
        const double v = score(i);
        if (v > best_value + kGainTolerance) {
            best = i;
            best_value = v;
        }
    }
    return {best, best_value};
}

} // namespace

double info_gain(const SampleTable& table, LeafView leaf, std::size_t bit)
{
    require_nonempty(leaf, "info_gain");
    require_bit(table, bit, "info_gain");
    return split_gain(table, leaf, BitTest{bit});
}

double split_gain(const SampleTable& table, LeafView leaf, const Predicate& pred)
{
    require_nonempty(leaf, "split_gain");
    ClassCounts all, side[2];
    for (auto i : leaf) {
        const int s = satisfied(pred, table.row(i)) ? 1 : 0;
        if (table.good(i)) {
            ++all.good;
            ++side[s].good;
        } else {
            ++all.bad;
            ++side[s].bad;
        }
    }
    const double n = static_cast<double>(all.total());
    double gain = entropy(all.good, all.bad);
    for (const auto& c : side) {
        if (c.total() > 0) gain -= static_cast<double>(c.total()) / n * entropy(c.good, c.bad);
    }
    return gain;
}

double weighted_entropy(const SampleTable& table, LeafView leaf, std::size_t bit, unsigned k)
{
    require_nonempty(leaf, "weighted_entropy");
    require_bit(table, bit, "weighted_entropy");
    return weighted_entropy_impl(table, leaf, bit, k);
}

double lookahead_gain(const SampleTable& table, LeafView leaf, std::size_t bit, unsigned k)
{
    const auto c = count_classes(table, leaf);
    return entropy(c.good, c.bad) - weighted_entropy(table, leaf, bit, k) / static_cast<double>(c.total());
}

double statistical_score(const SampleTable& table, LeafView leaf, std::size_t bit)
{
    require_nonempty(leaf, "statistical_score");
    require_bit(table, bit, "statistical_score");
    ClassCounts side[2];
    for (auto i : leaf) {
        auto& c = side[table.bit(i, bit)];
        (table.good(i) ? c.good : c.bad)++;
    }
    auto ratio = [](std::size_t part, std::size_t total) {
        return total == 0 ? 0.0 : static_cast<double>(part) / static_cast<double>(total);
    };
    const double bad_then_good = ratio(side[0].bad, side[0].total()) + ratio(side[1].good, side[1].total());
    const double good_then_bad = ratio(side[0].good, side[0].total()) + ratio(side[1].bad, side[1].total());
    return std::max(bad_then_good, good_then_bad);
}

std::optional<ChainTest> chain_candidate(const SampleTable& table, LeafView leaf, bool toward_good)
{
    const auto bc = bit_counts(table, leaf);
    ChainTest chain;
    for (std::size_t b = 0; b < table.dim(); ++b) {
        for (int v = 0; v <= 1; ++v) {
            const auto c = bc.side(b, v);
            const bool pure = toward_good ? (c.good > 0 && c.bad == 0) : (c.bad > 0 && c.good == 0);
            if (pure) chain.literals.push_back(Literal{b, static_cast<std::uint8_t>(v)});
        }
    }
    if (chain.literals.empty()) return std::nullopt;
    return chain;
}

SplitDecision best_split(const SampleTable& table, LeafView leaf, const LearnOptions& options)
{
    if (options.lookahead == 0) throw std::invalid_argument("best_split: look-ahead depth must be at least 1");
    const auto bc = bit_counts(table, leaf);
    if (!bc.all.mixed()) throw std::logic_error("best_split: leaf is not mixed");

    const double n = static_cast<double>(bc.all.total());
    const double h = entropy(bc.all.good, bc.all.bad);
    const auto d = table.dim();

    // 1-look-ahead: WE^1 from the counts, optionally challenged by chains
    auto [bit, gain] = argmax_lowest(d, [&](std::size_t b) { return h - we1(bc, b) / n; });
    SplitDecision decision{SplitDecision::Kind::SingleBit, BitTest{bit}, 1, gain};
    if (options.chain) {
        for (bool toward_good : {true, false}) {
            auto chain = chain_candidate(table, leaf, toward_good);
            if (!chain) continue;
            Predicate pred = *chain;
            const double g = split_gain(table, leaf, pred);
            if (g > decision.gain + kGainTolerance) {
                decision = SplitDecision{SplitDecision::Kind::Chain, std::move(pred), 1, g};
            }
        }
    }
    if (decision.gain > kGainTolerance) return decision;

    for (unsigned k = 2; k <= options.lookahead; ++k) {
        auto [kbit, kgain] = argmax_lowest(d, [&](std::size_t b) {
            return h - weighted_entropy_impl(table, leaf, b, k) / n;
        });
        if (kgain > kGainTolerance) return SplitDecision{SplitDecision::Kind::SingleBit, BitTest{kbit}, k, kgain};
    }

    auto [fbit, score] = argmax_lowest(d, [&](std::size_t b) { return statistical_score(table, leaf, b); });
    return SplitDecision{SplitDecision::Kind::Fallback, BitTest{fbit}, 0, score};
}

namespace {

void check_input(const TrainingSet& train)
{
    train.check_shape();
    if (auto clash = train.find_contradiction()) {
        throw std::invalid_argument("contradictory training data: " + to_string(*clash) + " is both good and bad");
    }
}

/// Shared unfolding loop; `choose` returns the predicate for a mixed leaf.
template <class Choose>
DecisionTree unfold(const TrainingSet& train, Choose choose)
{
    check_input(train);
    const SampleTable table(train);
    const auto root_leaf = table.all();
    DecisionTree tree(train.dim, maxclass(count_classes(table, root_leaf)));

    struct Work {
        DecisionTree::NodeId node;
        std::vector<std::uint32_t> leaf;
    };
    std::vector<Work> stack;
    stack.push_back({tree.root(), root_leaf});
    while (!stack.empty()) {
        Work w = std::move(stack.back());
        stack.pop_back();
        if (!count_classes(table, w.leaf).mixed()) continue;

        Predicate pred = choose(table, LeafView(w.leaf));
        std::vector<std::uint32_t> sides[2];
        for (auto i : w.leaf) sides[satisfied(pred, table.row(i)) ? 1 : 0].push_back(i);
        if (sides[0].empty() || sides[1].empty()) throw std::logic_error("learn: split does not refine the leaf");

        const auto c0 = tree.split(w.node, std::move(pred), maxclass(count_classes(table, sides[0])),
                                   maxclass(count_classes(table, sides[1])));
        stack.push_back({c0 + 1, std::move(sides[1])});
        stack.push_back({c0, std::move(sides[0])});
    }
    return tree;
}

} // namespace

DecisionTree learn(const TrainingSet& train, const LearnOptions& options)
{
    if (options.lookahead == 0) throw std::invalid_argument("learn: look-ahead depth must be at least 1");
    return unfold(train, [&](const SampleTable& table, LeafView leaf) {
        return best_split(table, leaf, options).pred;
    });
}

DecisionTree id3_reference(const TrainingSet& train)
{
    return unfold(train, [](const SampleTable& table, LeafView leaf) -> Predicate {
        auto [bit, gain] = argmax_lowest(table.dim(), [&](std::size_t b) { return info_gain(table, leaf, b); });
        if (gain > kGainTolerance) return BitTest{bit};
        const auto bc = bit_counts(table, leaf);
        for (std::size_t b = 0; b < table.dim(); ++b) {
            if (bc.ones_good[b] + bc.ones_bad[b] != 0 && bc.ones_good[b] + bc.ones_bad[b] != bc.all.total()) {
                return BitTest{b};
            }
        }
        throw std::logic_error("id3: mixed leaf without a distinguishing bit");
    });
}

bool fits_exactly(const DecisionTree& tree, const TrainingSet& train)
{
    for (const auto& g : train.good) {
        if (!tree.eval(g)) return false;
    }
    for (const auto& b : train.bad) {
        if (tree.eval(b)) return false;
    }
    return true;
}

} // namespace stratdt
