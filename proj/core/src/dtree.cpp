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

#include "stratdt/dtree.hpp"

#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace stratdt {

bool satisfied(const Predicate& pred, BitView x)
{
    if (const auto* b = std::get_if<BitTest>(&pred)) return x[b->bit] != 0;
    for (const auto& lit : std::get<ChainTest>(pred).literals) {
        if (x[lit.bit] == lit.value) return true;
    }
    return false;
}

std::string to_string(const Predicate& pred)
{
    if (const auto* b = std::get_if<BitTest>(&pred)) return "x" + std::to_string(b->bit + 1);
    std::string s = "or(";
    bool first = true;
    for (const auto& lit : std::get<ChainTest>(pred).literals) {
        if (!first) s += ',';
        s += "x" + std::to_string(lit.bit + 1) + "=" + (lit.value ? "1" : "0");
        first = false;
    }
    return s + ")";
}

DecisionTree::DecisionTree(std::size_t dim, bool yes) : dim_(dim)
{
    nodes_[0].yes = yes;
}

DecisionTree::NodeId DecisionTree::split(NodeId id, Predicate pred, bool yes0, bool yes1)
{
    if (!nodes_.at(id).is_leaf) throw std::logic_error("split: node is not a leaf");
    const NodeId c0 = nodes_.size();
    Node l0, l1;
    l0.yes = yes0;
    l1.yes = yes1;
    nodes_.push_back(l0);
    nodes_.push_back(l1);
    Node& n = nodes_[id];
    n.is_leaf = false;
    n.pred = std::move(pred);
    n.child[0] = c0;
    n.child[1] = c0 + 1;
    return c0;
}

void DecisionTree::relabel(NodeId id, bool yes)
{
    if (!nodes_.at(id).is_leaf) throw std::logic_error("relabel: node is not a leaf");
    nodes_[id].yes = yes;
}

bool DecisionTree::eval(BitView x) const
{
    if (x.size() != dim_) {
        throw std::invalid_argument("eval: input has " + std::to_string(x.size()) + " bits, tree expects "
                                    + std::to_string(dim_));
    }
    NodeId cur = root();
    while (!nodes_[cur].is_leaf) {
        cur = nodes_[cur].child[satisfied(nodes_[cur].pred, x) ? 1 : 0];
    }
    return nodes_[cur].yes;
}

std::size_t DecisionTree::size() const
{
    std::size_t inner = 0;
    std::function<void(NodeId)> walk = [&](NodeId id) {
        if (nodes_[id].is_leaf) return;
        ++inner;
        walk(nodes_[id].child[0]);
        walk(nodes_[id].child[1]);
    };
    walk(root());
    return inner;
}

std::size_t DecisionTree::depth() const
{
    std::function<std::size_t(NodeId)> walk = [&](NodeId id) -> std::size_t {
        if (nodes_[id].is_leaf) return 0;
        return 1 + std::max(walk(nodes_[id].child[0]), walk(nodes_[id].child[1]));
    };
    return walk(root());
}

bool DecisionTree::bits_unique_on_paths() const
{
    std::vector<bool> on_path(dim_, false);
    std::function<bool(NodeId)> walk = [&](NodeId id) {
        const Node& n = nodes_[id];
        if (n.is_leaf) return true;
        const auto* b = std::get_if<BitTest>(&n.pred);
        if (b) {
            if (on_path[b->bit]) return false;
            on_path[b->bit] = true;
        }
        bool ok = walk(n.child[0]) && walk(n.child[1]);
        if (b) on_path[b->bit] = false;
        return ok;
    };
    return walk(root());
}

bool DecisionTree::mentions(std::size_t bit) const
{
    std::function<bool(NodeId)> walk = [&](NodeId id) {
        const Node& n = nodes_[id];
        if (n.is_leaf) return false;
        if (const auto* b = std::get_if<BitTest>(&n.pred)) {
            if (b->bit == bit) return true;
        } else {
            for (const auto& lit : std::get<ChainTest>(n.pred).literals) {
                if (lit.bit == bit) return true;
            }
        }
        return walk(n.child[0]) || walk(n.child[1]);
    };
    return walk(root());
}

std::string DecisionTree::to_text() const
{
    std::string out;
    std::function<void(NodeId)> walk = [&](NodeId id) {
        const Node& n = nodes_[id];
        if (n.is_leaf) {
            out += n.yes ? "YES" : "NO";
            return;
        }
        out += '(';
        out += stratdt::to_string(n.pred);
        out += ' ';
        walk(n.child[0]);
        out += ' ';
        walk(n.child[1]);
        out += ')';
    };
    walk(root());
    return out;
}

namespace {

class TreeParser {
public:
    TreeParser(std::string_view s, std::size_t dim) : s_(s), dim_(dim) {}

    DecisionTree run()
    {
        DecisionTree tree(dim_, true);
        parse_into(tree, tree.root());
        skip_ws();
        if (pos_ != s_.size()) fail("trailing characters");
        return tree;
    }

private:
    void parse_into(DecisionTree& tree, DecisionTree::NodeId id)
    {
        skip_ws();
        if (accept("YES")) return set_leaf(tree, id, true);
        if (accept("NO")) return set_leaf(tree, id, false);
        expect('(');
        skip_ws();
        Predicate pred = predicate();
        require_ws();
        auto c0 = tree.split(id, pred, true, true);
        parse_into(tree, c0);
        require_ws();
        parse_into(tree, c0 + 1);
        skip_ws();
        expect(')');
    }

    void set_leaf(DecisionTree& tree, DecisionTree::NodeId id, bool yes) { tree.relabel(id, yes); }

    Predicate predicate()
    {
        if (accept("or(")) {
            ChainTest chain;
            do {
                expect('x');
                auto bit = index();
                expect('=');
                std::uint8_t v = 0;
                if (accept("1")) v = 1;
                else if (!accept("0")) fail("literal value must be 0 or 1");
                chain.literals.push_back(Literal{bit, v});
            } while (accept(","));
            expect(')');
            return chain;
        }
        expect('x');
        return BitTest{index()};
    }

    std::size_t index()
    {
        std::size_t v = 0;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
        }
        if (start == pos_) fail("expected a bit index");
        if (v == 0 || v > dim_) fail("bit index " + std::to_string(v) + " out of range");
        return v - 1;
    }

    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    void require_ws()
    {
        if (pos_ >= s_.size() || !std::isspace(static_cast<unsigned char>(s_[pos_]))) fail("expected whitespace");
        skip_ws();
    }

    bool accept(std::string_view tok)
    {
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const
    {
        throw ParseError(0, "tree text at offset " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view s_;
    std::size_t dim_;
    std::size_t pos_ = 0;
};

} // namespace

DecisionTree DecisionTree::parse(std::string_view text, std::size_t dim)
{
    return TreeParser(text, dim).run();
}

std::string DecisionTree::to_dot(const std::vector<std::string>& feature_names) const
{
    auto label = [&](const Predicate& p) {
        if (feature_names.size() != dim_) return stratdt::to_string(p);
        if (const auto* b = std::get_if<BitTest>(&p)) return feature_names[b->bit];
        std::string s;
        for (const auto& lit : std::get<ChainTest>(p).literals) {
            if (!s.empty()) s += " or ";
            s += feature_names[lit.bit] + "=" + (lit.value ? "1" : "0");
        }
        return s;
    };

    std::ostringstream os;
    os << "digraph tree {\n";
    os << "  node [shape=box, style=rounded];\n";
    std::function<void(NodeId)> walk = [&](NodeId id) {
        const Node& n = nodes_[id];
        if (n.is_leaf) {
            os << "  n" << id << " [label=\"" << (n.yes ? "YES" : "NO") << "\"];\n";
            return;
        }
        os << "  n" << id << " [label=\"" << label(n.pred) << "\"];\n";
        os << "  n" << id << " -> n" << n.child[0] << " [label=\"=0\"];\n";
        os << "  n" << id << " -> n" << n.child[1] << " [label=\"=1\"];\n";
        walk(n.child[0]);
        walk(n.child[1]);
    };
    walk(root());
    os << "}\n";
    return os.str();
}

} // namespace stratdt
