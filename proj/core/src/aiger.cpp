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

#include "stratdt/aiger.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace stratdt {

std::size_t AigerCircuit::num_controllable() const
{
    return static_cast<std::size_t>(std::count_if(inputs.begin(), inputs.end(), [](const Input& i) { return i.controllable; }));
}

std::size_t AigerCircuit::num_uncontrollable() const
{
    return inputs.size() - num_controllable();
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line)
{
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint32_t to_uint(std::string_view tok, std::size_t lineno)
{
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(lineno, "expected an unsigned number, got '" + std::string(tok) + "'");
    }
    return v;
}

class Lines {
public:
    explicit Lines(std::string_view text) : text_(text) {}

    bool next(std::string_view& line)
    {
        if (pos_ > text_.size() || (pos_ == text_.size())) return false;
        auto end = text_.find('\n', pos_);
        if (end == std::string_view::npos) end = text_.size();
        line = text_.substr(pos_, end - pos_);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos_ = end + 1;
        ++lineno_;
        return true;
    }

    std::size_t lineno() const { return lineno_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t lineno_ = 0;
};

} // namespace

AigerCircuit parse_aag(std::string_view text)
{
    Lines lines(text);
    std::string_view line;
    if (!lines.next(line)) throw ParseError(1, "empty file, expected header 'aag M I L O A'");
    auto head = split_ws(line);
    if (head.empty() || head[0] != "aag") throw ParseError(1, "expected header 'aag M I L O A'");
    if (head.size() > 6) throw ParseError(1, "AIGER 1.9 header extensions (B C J F) are not supported");
    if (head.size() != 6) throw ParseError(1, "header needs exactly five counts M I L O A");

    AigerCircuit c;
    c.max_var = to_uint(head[1], 1);
    const auto ni = to_uint(head[2], 1);
    const auto nl = to_uint(head[3], 1);
    const auto no = to_uint(head[4], 1);
    const auto na = to_uint(head[5], 1);
    if (no > 1) throw ParseError(1, "multiple outputs are not supported (expected one error output)");
    if (std::uint64_t{ni} + nl + na > c.max_var) throw ParseError(1, "M is smaller than I + L + A");

    const std::uint32_t max_lit = 2 * c.max_var + 1;
    std::vector<bool> defined(c.max_var + 1, false);
    auto check_lit = [&](std::uint32_t lit) {
        if (lit > max_lit) throw ParseError(lines.lineno(), "literal " + std::to_string(lit) + " out of range");
    };
    auto define = [&](std::uint32_t lit, const char* what) {
        check_lit(lit);
        if (lit % 2 != 0 || lit < 2) throw ParseError(lines.lineno(), std::string(what) + " literal must be even and nonzero");
        if (defined[lit / 2]) throw ParseError(lines.lineno(), "variable " + std::to_string(lit / 2) + " defined twice");
        defined[lit / 2] = true;
    };
    auto section_line = [&](const char* what, std::uint32_t expected, std::uint32_t seen) {
        if (!lines.next(line)) {
            throw ParseError(lines.lineno() + 1, "expected " + std::to_string(expected) + " " + what + " lines, found "
                                                     + std::to_string(seen));
        }
        return split_ws(line);
    };

    for (std::uint32_t k = 0; k < ni; ++k) {
        auto f = section_line("input", ni, k);
        if (f.size() != 1) throw ParseError(lines.lineno(), "input line needs one literal");
        auto lit = to_uint(f[0], lines.lineno());
        define(lit, "input");
        c.inputs.push_back({lit, {}, false});
    }
    for (std::uint32_t k = 0; k < nl; ++k) {
        auto f = section_line("latch", nl, k);
        if (f.size() == 3) throw ParseError(lines.lineno(), "latch reset values (AIGER 1.9) are not supported");
        if (f.size() != 2) throw ParseError(lines.lineno(), "latch line needs a literal and its next-state literal");
        auto lit = to_uint(f[0], lines.lineno());
        auto next = to_uint(f[1], lines.lineno());
        define(lit, "latch");
        check_lit(next);
        c.latches.push_back({lit, next, {}});
    }
    std::vector<std::size_t> output_lines;
    for (std::uint32_t k = 0; k < no; ++k) {
        auto f = section_line("output", no, k);
        if (f.size() != 1) throw ParseError(lines.lineno(), "output line needs one literal");
        auto lit = to_uint(f[0], lines.lineno());
        check_lit(lit);
        c.outputs.push_back(lit);
        output_lines.push_back(lines.lineno());
    }
    std::vector<std::size_t> and_lines;
    for (std::uint32_t k = 0; k < na; ++k) {
        auto f = section_line("and", na, k);
        if (f.size() != 3) throw ParseError(lines.lineno(), "and line needs three literals");
        AigerCircuit::And g{to_uint(f[0], lines.lineno()), to_uint(f[1], lines.lineno()), to_uint(f[2], lines.lineno())};
        define(g.lhs, "and");
        check_lit(g.rhs0);
        check_lit(g.rhs1);
        if (g.lhs <= g.rhs0 || g.lhs <= g.rhs1) {
            throw ParseError(lines.lineno(), "and gate lhs must be greater than both inputs");
        }
        c.ands.push_back(g);
        and_lines.push_back(lines.lineno());
    }

    auto check_defined = [&](std::uint32_t lit, std::size_t at) {
        if (lit > 1 && !defined[lit / 2]) throw ParseError(at, "literal " + std::to_string(lit) + " is never defined");
    };
    for (std::size_t k = 0; k < c.ands.size(); ++k) {
        check_defined(c.ands[k].rhs0, and_lines[k]);
        check_defined(c.ands[k].rhs1, and_lines[k]);
    }
    for (std::size_t k = 0; k < c.outputs.size(); ++k) check_defined(c.outputs[k], output_lines[k]);
    for (const auto& l : c.latches) check_defined(l.next, 0);

    bool in_comments = false;
    while (lines.next(line)) {
        if (in_comments) {
            c.comments.emplace_back(line);
            continue;
        }
        if (line.empty()) continue;
        if (line == "c") {
            in_comments = true;
            continue;
        }
        const char kind = line[0];
        auto space = line.find(' ');
        if ((kind != 'i' && kind != 'l' && kind != 'o') || space == std::string_view::npos || space < 2) {
            throw ParseError(lines.lineno(), "unexpected line (symbol table entries are i<n>/l<n>/o<n> <name>)");
        }
        auto pos = to_uint(line.substr(1, space - 1), lines.lineno());
        std::string name(line.substr(space + 1));
        if (kind == 'i') {
            if (pos >= c.inputs.size()) throw ParseError(lines.lineno(), "symbol for nonexistent input");
            c.inputs[pos].name = name;
            c.inputs[pos].controllable = name.rfind(kControllablePrefix, 0) == 0;
        } else if (kind == 'l') {
            if (pos >= c.latches.size()) throw ParseError(lines.lineno(), "symbol for nonexistent latch");
            c.latches[pos].name = name;
        } else {
            if (pos >= c.outputs.size()) throw ParseError(lines.lineno(), "symbol for nonexistent output");
            c.output_name = name;
        }
    }
    return c;
}

AigerCircuit read_aag_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_aag(ss.str());
}

std::string write_aag(const AigerCircuit& c)
{
    std::ostringstream os;
    os << "aag " << c.max_var << ' ' << c.inputs.size() << ' ' << c.latches.size() << ' ' << c.outputs.size() << ' '
       << c.ands.size() << '\n';
    for (const auto& i : c.inputs) os << i.lit << '\n';
    for (const auto& l : c.latches) os << l.lit << ' ' << l.next << '\n';
    for (auto o : c.outputs) os << o << '\n';
    for (const auto& a : c.ands) os << a.lhs << ' ' << a.rhs0 << ' ' << a.rhs1 << '\n';
    for (std::size_t k = 0; k < c.inputs.size(); ++k) {
        if (!c.inputs[k].name.empty()) os << 'i' << k << ' ' << c.inputs[k].name << '\n';
    }
    for (std::size_t k = 0; k < c.latches.size(); ++k) {
        if (!c.latches[k].name.empty()) os << 'l' << k << ' ' << c.latches[k].name << '\n';
    }
    if (!c.outputs.empty() && !c.output_name.empty()) os << "o0 " << c.output_name << '\n';
    if (!c.comments.empty()) {
        os << "c\n";
        for (const auto& line : c.comments) os << line << '\n';
    }
    return os.str();
}

SymbolicSafetyGame::SymbolicSafetyGame(AigerCircuit circuit) : circuit_(std::move(circuit))
{
    for (std::size_t k = 0; k < circuit_.inputs.size(); ++k) {
        (circuit_.inputs[k].controllable ? controllable_ : uncontrollable_).push_back(k);
    }
    if (circuit_.latches.size() > 64 || controllable_.size() > 64 || uncontrollable_.size() > 64) {
        throw std::length_error("circuit has more than 64 latches or inputs of one kind");
    }
    and_order_.resize(circuit_.ands.size());
    for (std::size_t k = 0; k < and_order_.size(); ++k) and_order_[k] = k;
    std::sort(and_order_.begin(), and_order_.end(),
              [&](std::size_t a, std::size_t b) { return circuit_.ands[a].lhs < circuit_.ands[b].lhs; });
}

bool SymbolicSafetyGame::value(const std::vector<std::uint8_t>& values, AigLiteral lit) const
{
    return (values[lit >> 1] ^ (lit & 1u)) != 0;
}

void SymbolicSafetyGame::evaluate(std::uint64_t latches, std::uint64_t env, std::uint64_t ctrl,
                                  std::vector<std::uint8_t>& values) const
{
    values.assign(circuit_.max_var + 1, 0);
    for (std::size_t k = 0; k < circuit_.latches.size(); ++k) {
        values[circuit_.latches[k].lit >> 1] = static_cast<std::uint8_t>((latches >> k) & 1u);
    }
    for (std::size_t k = 0; k < uncontrollable_.size(); ++k) {
        values[circuit_.inputs[uncontrollable_[k]].lit >> 1] = static_cast<std::uint8_t>((env >> k) & 1u);
    }
    for (std::size_t k = 0; k < controllable_.size(); ++k) {
        values[circuit_.inputs[controllable_[k]].lit >> 1] = static_cast<std::uint8_t>((ctrl >> k) & 1u);
    }
    for (auto k : and_order_) {
        const auto& g = circuit_.ands[k];
        values[g.lhs >> 1] = static_cast<std::uint8_t>(value(values, g.rhs0) && value(values, g.rhs1));
    }
}

std::uint64_t SymbolicSafetyGame::next(std::uint64_t latches, std::uint64_t env, std::uint64_t ctrl) const
{
    std::vector<std::uint8_t> values;
    evaluate(latches, env, ctrl, values);
    std::uint64_t out = 0;
    for (std::size_t k = 0; k < circuit_.latches.size(); ++k) {
        if (value(values, circuit_.latches[k].next)) out |= std::uint64_t{1} << k;
    }
    return out;
}

bool SymbolicSafetyGame::bad(std::uint64_t latches, std::uint64_t env, std::uint64_t ctrl) const
{
    if (circuit_.outputs.empty()) return false;
    std::vector<std::uint8_t> values;
    evaluate(latches, env, ctrl, values);
    return value(values, circuit_.outputs.front());
}

std::vector<std::uint64_t> SymbolicSafetyGame::reachable_states() const
{
    const std::uint64_t n_env = std::uint64_t{1} << p1_vars();
    const std::uint64_t n_ctrl = std::uint64_t{1} << p2_vars();
    std::vector<std::uint64_t> order{0};
    std::unordered_map<std::uint64_t, std::size_t> seen{{0, 0}};
    for (std::size_t head = 0; head < order.size(); ++head) {
        const auto v = order[head];
        for (std::uint64_t i = 0; i < n_env; ++i) {
            for (std::uint64_t o = 0; o < n_ctrl; ++o) {
                if (bad(v, i, o)) continue;
                const auto w = next(v, i, o);
                if (seen.emplace(w, order.size()).second) order.push_back(w);
            }
        }
    }
    return order;
}

std::string SymbolicSafetyGame::latch_name(std::size_t i) const
{
    const auto& n = circuit_.latches.at(i).name;
    return n.empty() ? "latch" + std::to_string(i) : n;
}

std::string SymbolicSafetyGame::env_name(std::size_t i) const
{
    const auto& n = circuit_.inputs.at(uncontrollable_.at(i)).name;
    return n.empty() ? "in" + std::to_string(i) : n;
}

std::string SymbolicSafetyGame::ctrl_name(std::size_t i) const
{
    return circuit_.inputs.at(controllable_.at(i)).name;
}

ExpandedAigerGame expand(const SymbolicSafetyGame& symbolic, std::size_t max_states)
{
    if (symbolic.p1_vars() > 20 || symbolic.p2_vars() > 20) throw std::length_error("expand: too many inputs");
    const std::uint64_t n_env = std::uint64_t{1} << symbolic.p1_vars();
    const std::uint64_t n_ctrl = std::uint64_t{1} << symbolic.p2_vars();

    ExpandedAigerGame out;
    std::vector<std::uint64_t> valuations{0};
    std::unordered_map<std::uint64_t, StateId> p1_id{{0, 0}};

    GraphGame::Spec spec;
    spec.kind = ObjectiveKind::Reachability;

    // P1 states are allocated on discovery; each is followed by its n_env P2 states.
    auto add_p1 = [&](std::uint64_t v) {
        const auto id = static_cast<StateId>(spec.owner.size());
        if (spec.owner.size() + 1 + n_env + 1 > max_states) throw std::length_error("expand: state bound exceeded");
        spec.owner.push_back(Player::P1);
        spec.actions.emplace_back();
        out.latch_value.push_back(v);
        out.env_value.push_back(0);
        for (std::uint64_t i = 0; i < n_env; ++i) {
            spec.owner.push_back(Player::P2);
            spec.actions.emplace_back();
            out.latch_value.push_back(v);
            out.env_value.push_back(i);
        }
        return id;
    };

    std::vector<std::pair<StateId, std::uint64_t>> pending;
    pending.emplace_back(add_p1(0), 0);
    std::vector<std::tuple<StateId, std::uint64_t, std::uint64_t>> deferred; // (p2 state, ctrl, next valuation | bad)
    std::vector<bool> deferred_bad;
    for (std::size_t head = 0; head < pending.size(); ++head) {
        const auto [id, v] = pending[head];
        for (std::uint64_t i = 0; i < n_env; ++i) {
            const auto p2 = static_cast<StateId>(id + 1 + i);
            spec.actions[id].push_back(Edge{i, p2});
            for (std::uint64_t o = 0; o < n_ctrl; ++o) {
                const bool is_bad = symbolic.bad(v, i, o);
                std::uint64_t w = 0;
                if (!is_bad) {
                    w = symbolic.next(v, i, o);
                    if (!p1_id.count(w)) {
                        const auto nid = add_p1(w);
                        p1_id.emplace(w, nid);
                        pending.emplace_back(nid, w);
                        valuations.push_back(w);
                    }
                }
                deferred.emplace_back(p2, o, w);
                deferred_bad.push_back(is_bad);
            }
        }
    }

    out.error_state = static_cast<StateId>(spec.owner.size());
    spec.owner.push_back(Player::P2);
    spec.actions.emplace_back();
    spec.actions.back().push_back(Edge{0, out.error_state});
    out.latch_value.push_back(0);
    out.env_value.push_back(0);

    for (std::size_t k = 0; k < deferred.size(); ++k) {
        const auto& [p2, o, w] = deferred[k];
        const StateId target = deferred_bad[k] ? out.error_state : p1_id.at(w);
        spec.actions[p2].push_back(Edge{o, target});
    }

    spec.marked.assign(spec.owner.size(), false);
    spec.marked[out.error_state] = true;
    spec.initial = 0;
    out.num_valuations = valuations.size();
    out.game = GraphGame(std::move(spec));
    return out;
}

BitEncoding ExpandedAigerGame::encoding(const SymbolicSafetyGame& symbolic, Player player) const
{
    BitEncoding enc;
    const auto nl = static_cast<unsigned>(symbolic.state_vars());
    const auto ne = static_cast<unsigned>(symbolic.p1_vars());
    const auto nc = static_cast<unsigned>(symbolic.p2_vars());
    const bool controller = player == Player::P2;
    enc.state_bits = controller ? nl + ne : nl;
    enc.action_bits = controller ? nc : ne;

    for (unsigned k = 0; k < nl; ++k) enc.feature_names.push_back(symbolic.latch_name(k));
    if (controller) {
        for (unsigned k = 0; k < ne; ++k) enc.feature_names.push_back(symbolic.env_name(k));
        for (unsigned k = 0; k < nc; ++k) enc.feature_names.push_back(symbolic.ctrl_name(k));
    } else {
        for (unsigned k = 0; k < ne; ++k) enc.feature_names.push_back(symbolic.env_name(k));
    }

    auto mask_bits = [](std::uint64_t mask, unsigned width, BitVec& out) {
        for (unsigned k = 0; k < width; ++k) out.push_back(static_cast<std::uint8_t>((mask >> k) & 1u));
    };

    const auto n = game.num_states();
    enc.state_codes.resize(n);
    enc.action_codes.resize(n);
    for (StateId s = 0; s < n; ++s) {
        BitVec code;
        mask_bits(latch_value[s], nl, code);
        if (controller) mask_bits(game.owner(s) == Player::P2 ? env_value[s] : 0, ne, code);
        enc.state_codes[s] = std::move(code);
        for (const auto& e : game.actions(s)) {
            BitVec act;
            const bool own = game.owner(s) == player && s != error_state;
            mask_bits(own ? e.label : 0, enc.action_bits, act);
            enc.action_codes[s].push_back(std::move(act));
        }
    }
    return enc;
}

} // namespace stratdt
