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


#include <doctest.h>

#include "stratdt/dtree.hpp"
#include "support.hpp"

using namespace stratdt;
using stratdt::testing::bits;

namespace {

/// The tree of the language {0,1}^2 0 + {0,1} 1 1: test x3, then x2.
DecisionTree two_node_tree()
{
    DecisionTree t(3, true);
    auto c = t.split(t.root(), BitTest{2}, true, false);
    t.split(c + 1, BitTest{1}, false, true);
    return t;
}

bool in_two_node_language(const BitVec& x)
{
    return x[2] == 0 || (x[1] == 1 && x[2] == 1);
}

} // namespace

TEST_CASE("two-node tree agrees with its language")
{
    auto t = two_node_tree();
    CHECK(t.size() == 2);
    CHECK(t.depth() == 2);
    CHECK(t.eval(bits("110")));
    CHECK_FALSE(t.eval(bits("001")));
    for (unsigned v = 0; v < 8; ++v) {
        auto x = binary_code(v, 3);
        CHECK(t.eval(x) == in_two_node_language(x));
    }
    CHECK(t.to_text() == "(x3 YES (x2 NO YES))");
}

TEST_CASE("single leaves")
{
    DecisionTree yes(4, true), no(4, false);
    for (unsigned v = 0; v < 16; ++v) {
        CHECK(yes.eval(binary_code(v, 4)));
        CHECK_FALSE(no.eval(binary_code(v, 4)));
    }
    CHECK(yes.size() == 0);
    CHECK(yes.depth() == 0);
    CHECK(yes.to_text() == "YES");
    CHECK_THROWS_AS(yes.eval(bits("101")), std::invalid_argument);
}

TEST_CASE("chain predicates")
{
    ChainTest chain{{{0, 1}, {1, 1}}};
    CHECK(to_string(Predicate{chain}) == "or(x1=1,x2=1)");
    CHECK(satisfied(chain, bits("10")));
    CHECK(satisfied(chain, bits("01")));
    CHECK_FALSE(satisfied(chain, bits("00")));
    ChainTest negative{{{0, 0}}};
    CHECK(satisfied(negative, bits("01")));

    DecisionTree t(2, true);
    t.split(t.root(), chain, false, true);
    CHECK(t.size() == 1);
    CHECK(t.mentions(0));
    CHECK(t.mentions(1));
    CHECK(t.to_text() == "(or(x1=1,x2=1) NO YES)");
    CHECK(DecisionTree::parse(t.to_text(), 2) == t);
}

TEST_CASE("text round-trip and parse errors")
{
    auto t = two_node_tree();
    auto u = DecisionTree::parse(t.to_text(), 3);
    CHECK(u == t);
    for (unsigned v = 0; v < 8; ++v) CHECK(u.eval(binary_code(v, 3)) == t.eval(binary_code(v, 3)));
    CHECK(DecisionTree::parse("  ( x1  NO\n YES ) ", 1).to_text() == "(x1 NO YES)");
    CHECK_THROWS(DecisionTree::parse("(x4 YES NO)", 3));
    CHECK_THROWS(DecisionTree::parse("(x1 YES)", 3));
    CHECK_THROWS(DecisionTree::parse("(x1 YES NO) NO", 3));
    CHECK_THROWS(DecisionTree::parse("MAYBE", 3));
    CHECK_THROWS(DecisionTree::parse("(or() YES NO)", 3));
}

TEST_CASE("structural queries")
{
    DecisionTree t(3, true);
    auto c = t.split(t.root(), BitTest{0}, true, false);
    auto d = t.split(c, BitTest{1}, true, false);
    CHECK(t.bits_unique_on_paths());
    t.split(d, BitTest{0}, true, false); // x1 again below x1
    CHECK_FALSE(t.bits_unique_on_paths());
    CHECK(t.depth() == 3);
    CHECK(t.mentions(1));
    CHECK_FALSE(t.mentions(2));
    t.relabel(c + 1, true);
    CHECK(t.node(c + 1).yes);
}

TEST_CASE("DOT export")
{
    auto dot = two_node_tree().to_dot({"a", "b", "c"});
    CHECK(dot.find("digraph tree") != std::string::npos);
    CHECK(dot.find("label=\"c\"") != std::string::npos);
    CHECK(dot.find("label=\"=0\"") != std::string::npos);
    CHECK(dot.find("label=\"YES\"") != std::string::npos);
    CHECK(two_node_tree().to_dot().find("label=\"x3\"") != std::string::npos);
}
