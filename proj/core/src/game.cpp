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

#include "stratdt/game.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace stratdt {

const char* to_string(ObjectiveKind kind)
{
    switch (kind) {
    case ObjectiveKind::Parity: return "parity";
    case ObjectiveKind::Safety: return "safety";
    case ObjectiveKind::Reachability: return "reach";
    }
    return "?";
}

std::size_t StateSet::count() const
{
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<StateId> StateSet::members() const
{
    std::vector<StateId> out;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) out.push_back(static_cast<StateId>(i));
    }
    return out;
}

StateSet StateSet::complement() const
{
    StateSet out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = !bits_[i];
    return out;
}

StateSet& StateSet::operator|=(const StateSet& o)
{
    for (std::size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i) {
        if (o.bits_[i]) bits_[i] = true;
    }
    return *this;
}

StateSet& StateSet::operator-=(const StateSet& o)
{
    for (std::size_t i = 0; i < bits_.size() && i < o.bits_.size(); ++i) {
        if (o.bits_[i]) bits_[i] = false;
    }
    return *this;
}

GraphGame::GraphGame(Spec spec)
    : owner_(std::move(spec.owner)),
      actions_(std::move(spec.actions)),
      kind_(spec.kind),
      priorities_(std::move(spec.priorities)),
      initial_(spec.initial),
      names_(std::move(spec.names))
{
    const std::size_t n = owner_.size();
    if (actions_.size() != n) throw std::invalid_argument("game: actions/owner size mismatch");
    if (n > 0 && initial_ >= n) throw std::invalid_argument("game: initial state out of range");
    if (!names_.empty() && names_.size() != n) throw std::invalid_argument("game: names size mismatch");

    if (kind_ == ObjectiveKind::Parity) {
        if (priorities_.size() != n) throw std::invalid_argument("game: parity objective needs one priority per state");
        if (!spec.marked.empty()) throw std::invalid_argument("game: parity objective takes no marked set");
    } else {
        if (!priorities_.empty()) throw std::invalid_argument("game: priorities given for a non-parity objective");
        if (spec.marked.size() != n) throw std::invalid_argument("game: safety/reachability objective needs a marked set");
    }
    marked_ = StateSet(n);
    for (std::size_t s = 0; s < spec.marked.size(); ++s) {
        if (spec.marked[s]) marked_.insert(static_cast<StateId>(s));
    }

    preds_.assign(n, {});
    for (std::size_t s = 0; s < n; ++s) {
        if (actions_[s].empty()) {
            throw std::invalid_argument("game: state " + std::to_string(s) + " has no action");
        }
        std::unordered_set<std::uint64_t> labels;
        for (const auto& e : actions_[s]) {
            if (e.target >= n) throw std::invalid_argument("game: successor out of range at state " + std::to_string(s));
            if (!labels.insert(e.label).second) {
                throw std::invalid_argument("game: duplicate action label at state " + std::to_string(s));
            }
            preds_[e.target].push_back(static_cast<StateId>(s));
        }
    }
}

std::size_t GraphGame::max_actions() const
{
    std::size_t m = 0;
    for (const auto& a : actions_) m = std::max(m, a.size());
    return m;
}

StateSet GraphGame::decided_states() const
{
    switch (kind_) {
    case ObjectiveKind::Parity: return StateSet(num_states());
    case ObjectiveKind::Safety: return marked_.complement();
    case ObjectiveKind::Reachability: return marked_;
    }
    return StateSet(num_states());
}

const std::string& GraphGame::name(StateId s) const
{
    static const std::string empty;
    return names_.empty() ? empty : names_.at(s);
}

StateSet GraphGame::owned_by(Player p) const
{
    StateSet out(num_states());
    for (std::size_t s = 0; s < num_states(); ++s) {
        if (owner_[s] == p) out.insert(static_cast<StateId>(s));
    }
    return out;
}

void MemorylessStrategy::adopt(const MemorylessStrategy& other, const StateSet& where)
{
    for (StateId s : where.members()) {
        if (s < other.universe()) choice_.at(s) = other.action(s);
    }
}

BitEncoding naive_encode(const GraphGame& game)
{
    BitEncoding enc;
    const std::size_t n = game.num_states();
    enc.state_bits = ceil_log2(n);
    enc.action_bits = enc.state_bits;
    enc.state_codes.reserve(n);
    enc.action_codes.reserve(n);
    for (std::size_t s = 0; s < n; ++s) {
        enc.state_codes.push_back(binary_code(s, enc.state_bits));
        std::vector<BitVec> codes;
        for (const auto& e : game.actions(static_cast<StateId>(s))) {
            codes.push_back(binary_code(e.target, enc.action_bits));
        }
        enc.action_codes.push_back(std::move(codes));
    }
    for (unsigned i = 0; i < enc.state_bits; ++i) enc.feature_names.push_back("state" + std::to_string(i + 1));
    for (unsigned i = 0; i < enc.action_bits; ++i) enc.feature_names.push_back("succ" + std::to_string(i + 1));
    return enc;
}

std::optional<StateId> naive_decode(const GraphGame& game, BitView code)
{
    if (code.size() != ceil_log2(game.num_states())) return std::nullopt;
    const auto v = binary_value(code);
    if (v >= game.num_states()) return std::nullopt;
    return static_cast<StateId>(v);
}

} // namespace stratdt
