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

#include "stratdt/pgformat.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace stratdt {

namespace {

constexpr std::uint64_t kMaxStates = std::uint64_t{1} << 26;

class LineScanner {
public:
    LineScanner(std::string_view line, std::size_t lineno) : s_(line), lineno_(lineno) {}

    void skip_ws()
    {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }

    bool at_end()
    {
        skip_ws();
        return pos_ >= s_.size();
    }

    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    std::string_view word()
    {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a keyword");
        return s_.substr(start, pos_ - start);
    }

    std::uint64_t number()
    {
        skip_ws();
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc{}) fail("expected a number");
        pos_ = static_cast<std::size_t>(ptr - s_.data());
        return v;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string quoted()
    {
        expect('"');
        std::string out;
        while (pos_ < s_.size() && s_[pos_] != '"') out.push_back(s_[pos_++]);
        if (pos_ >= s_.size()) fail("unterminated name");
        ++pos_;
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(lineno_, msg); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    std::size_t lineno_;
};

} // namespace

GraphGame parse_game_text(std::string_view text)
{
    GraphGame::Spec spec;
    bool have_header = false;
    bool have_start = false;
    std::size_t n = 0;
    std::vector<bool> declared;
    bool any_name = false;
    std::size_t header_line = 0;

    std::size_t lineno = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        auto end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(begin, end - begin);
        begin = end + 1;
        ++lineno;

        LineScanner sc(line, lineno);
        if (sc.at_end() || sc.peek() == '#') {
            if (end == text.size()) break;
            continue;
        }

        if (!have_header) {
            auto kw = sc.word();
            if (kw == "parity") spec.kind = ObjectiveKind::Parity;
            else if (kw == "safety") spec.kind = ObjectiveKind::Safety;
            else if (kw == "reach") spec.kind = ObjectiveKind::Reachability;
            else sc.fail("unknown header '" + std::string(kw) + "'");
            const auto max_id = sc.number();
            if (max_id >= kMaxStates) sc.fail("more than " + std::to_string(kMaxStates) + " states are not supported");
            n = max_id + 1;
            sc.expect(';');
            if (!sc.at_end()) sc.fail("trailing characters after header");
            have_header = true;
            header_line = lineno;
            spec.owner.assign(n, Player::P1);
            spec.actions.assign(n, {});
            spec.names.assign(n, {});
            declared.assign(n, false);
            if (spec.kind == ObjectiveKind::Parity) spec.priorities.assign(n, 0);
            else spec.marked.assign(n, false);
            continue;
        }

        if (std::isalpha(static_cast<unsigned char>(sc.peek()))) {
            auto kw = sc.word();
            if (kw != "start") sc.fail("unexpected keyword '" + std::string(kw) + "'");
            if (have_start) sc.fail("duplicate start declaration");
            auto id = sc.number();
            if (id >= n) sc.fail("start state out of range");
            sc.expect(';');
            spec.initial = static_cast<StateId>(id);
            have_start = true;
            continue;
        }

        auto id = sc.number();
        if (id >= n) sc.fail("state id " + std::to_string(id) + " exceeds declared maximum");
        if (declared[id]) sc.fail("state " + std::to_string(id) + " declared twice");
        declared[id] = true;

        if (spec.kind == ObjectiveKind::Parity) {
            spec.priorities[id] = static_cast<unsigned>(sc.number());
        } else {
            auto marker = sc.word();
            if (spec.kind == ObjectiveKind::Safety) {
                if (marker == "safe") spec.marked[id] = true;
                else if (marker != "unsafe") sc.fail("expected safe|unsafe");
            } else {
                if (marker == "target") spec.marked[id] = true;
                else if (marker != "plain") sc.fail("expected target|plain");
            }
        }

        auto owner = sc.number();
        if (owner > 1) sc.fail("owner must be 0 or 1");
        spec.owner[id] = owner == 0 ? Player::P1 : Player::P2;

        for (;;) {
            auto succ = sc.number();
            if (succ >= n) sc.fail("successor " + std::to_string(succ) + " out of range");
            for (const auto& e : spec.actions[id]) {
                if (e.target == succ) sc.fail("duplicate successor " + std::to_string(succ));
            }
            spec.actions[id].push_back(Edge{succ, static_cast<StateId>(succ)});
            if (sc.peek() != ',') break;
            sc.expect(',');
        }
        if (sc.peek() == '"') {
            spec.names[id] = sc.quoted();
            any_name = true;
        }
        sc.expect(';');
        if (!sc.at_end()) sc.fail("trailing characters after state declaration");
        if (end == text.size()) break;
    }

    if (!have_header) throw ParseError(lineno, "missing header");
    for (std::size_t s = 0; s < n; ++s) {
        if (!declared[s]) throw ParseError(header_line, "state " + std::to_string(s) + " is never declared");
    }
    if (!any_name) spec.names.clear();
    return GraphGame(std::move(spec));
}

GraphGame read_game_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_game_text(ss.str());
}

std::string write_game_text(const GraphGame& game)
{
    std::ostringstream os;
    const auto n = game.num_states();
    os << to_string(game.objective()) << ' ' << (n == 0 ? 0 : n - 1) << ";\n";
    if (game.initial() != 0) os << "start " << game.initial() << ";\n";
    for (StateId s = 0; s < n; ++s) {
        os << s << ' ';
        switch (game.objective()) {
        case ObjectiveKind::Parity: os << game.priority(s); break;
        case ObjectiveKind::Safety: os << (game.marked(s) ? "safe" : "unsafe"); break;
        case ObjectiveKind::Reachability: os << (game.marked(s) ? "target" : "plain"); break;
        }
        os << ' ' << index(game.owner(s)) << ' ';
        bool first = true;
        for (const auto& e : game.actions(s)) {
            if (!first) os << ',';
            os << e.target;
            first = false;
        }
        if (!game.name(s).empty()) os << " \"" << game.name(s) << '"';
        os << ";\n";
    }
    return os.str();
}

} // namespace stratdt
