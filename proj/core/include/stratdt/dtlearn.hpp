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
#include <optional>
#include <span>
#include <vector>

#include "stratdt/dtree.hpp"
#include "stratdt/trainset.hpp"

namespace stratdt {

/// Row-major copy of a training set; good rows come first.
class SampleTable {
public:
    explicit SampleTable(const TrainingSet& train);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return labels_.size(); }
    BitView row(std::size_t i) const { return BitView(bits_).subspan(i * dim_, dim_); }
    std::uint8_t bit(std::size_t i, std::size_t b) const { return bits_[i * dim_ + b]; }
    bool good(std::size_t i) const { return labels_[i] != 0; }

    std::vector<std::uint32_t> all() const;

private:
    std::size_t dim_;
    std::vector<std::uint8_t> bits_;
    std::vector<std::uint8_t> labels_;
};

/// A tree leaf during learning: indices into a SampleTable.
using LeafView = std::span<const std::uint32_t>;

struct ClassCounts {
    std::size_t good = 0;
    std::size_t bad = 0;

    std::size_t total() const { return good + bad; }
    bool mixed() const { return good > 0 && bad > 0; }
};

ClassCounts count_classes(const SampleTable& table, LeafView leaf);

/// Label of a leaf: YES iff |good| >= |bad|.
inline bool maxclass(const ClassCounts& c) { return c.good >= c.bad; }

/// Binary entropy of a node, 0 log 0 = 0. Throws std::invalid_argument on an empty node.
double entropy(std::size_t good, std::size_t bad);

/// H(l) - |l0|/|l| H(l0) - |l1|/|l| H(l1) for the split on `bit`; empty sides weigh 0.
double info_gain(const SampleTable& table, LeafView leaf, std::size_t bit);

/// Same, for an arbitrary predicate (false side first).
double split_gain(const SampleTable& table, LeafView leaf, const Predicate& pred);

/**
 * k-step weighted entropy:
 *   WE^0(l, bit) = |l| H(l)
 *   WE^k(l, bit) = min_b0 WE^{k-1}(l[bit=0], b0) + min_b1 WE^{k-1}(l[bit=1], b1)
 * with empty halves contributing 0.
 */
double weighted_entropy(const SampleTable& table, LeafView leaf, std::size_t bit, unsigned k);

/// H(l) - WE^k(l, bit) / |l|.
double lookahead_gain(const SampleTable& table, LeafView leaf, std::size_t bit, unsigned k);

/// max{ bad0/n0 + good1/n1, good0/n0 + bad1/n1 } with 0/0 terms valued 0.
double statistical_score(const SampleTable& table, LeafView leaf, std::size_t bit);

/**
 * Disjunction of every literal (bit = v) whose side l[bit = v] is nonempty
 * and purely good (toward_good) resp. purely bad. nullopt if no literal
 * qualifies. Literals are ordered by bit index.
 */
std::optional<ChainTest> chain_candidate(const SampleTable& table, LeafView leaf, bool toward_good);

struct LearnOptions {
    unsigned lookahead = 2; // k_max, >= 1
    bool chain = false;
};

struct SplitDecision {
    enum class Kind { SingleBit, Chain, Fallback };

    Kind kind = Kind::SingleBit;
    Predicate pred = BitTest{0};
    unsigned level = 0; // look-ahead depth that produced a positive gain; 0 for Fallback
    double gain = 0.0;
};

/// Gains below this are treated as zero and differences below it as ties.
inline constexpr double kGainTolerance = 1e-10;

/**
 * Split choice for a mixed leaf. Levels k = 1..k_max are tried in order
 * and the first one with a strictly positive gain wins (argmax, lowest bit
 * on ties). At k = 1 the chain candidates compete and win only with a
 * strictly larger gain than the best single bit. Without any positive
 * gain the statistical score decides. Throws std::logic_error on a pure
 * or empty leaf.
 */
SplitDecision best_split(const SampleTable& table, LeafView leaf, const LearnOptions& options);

/**
 * k-look-ahead ID3: splits mixed leaves depth-first (false branch first)
 * until every leaf is pure. The result satisfies L(T) cap Train = Good.
 * Throws std::invalid_argument on contradictory or malformed input.
 */
DecisionTree learn(const TrainingSet& train, const LearnOptions& options = {});

/// Plain ID3: best information gain, lowest non-constant bit when nothing gains.
DecisionTree id3_reference(const TrainingSet& train);

/// L(T) cap Train == Good.
bool fits_exactly(const DecisionTree& tree, const TrainingSet& train);

} // namespace stratdt
