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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stratdt/dtlearn.hpp"
#include "stratdt/trainset.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

/// Runs the command line tool through the shell; stderr is merged into the output.
Run run(const std::string& args)
{
    const std::string cmd = std::string(STRATDT_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const std::string& name)
{
    return std::string(STRATDT_TEST_DATA) + "/" + name;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir()
    {
        path = fs::temp_directory_path() / ("stratdt_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("solve a circuit")
{
    TempDir tmp;
    auto r = run("solve --game " + data("request_grant.aag") + " --format aag --player 2 --out " + (tmp / "s.csv"));
    CHECK(r.code == 0);
    auto train = stratdt::read_csv_file(tmp / "s.csv");
    CHECK(train.good.size() == 4);
    CHECK(train.bad.size() == 4);
    CHECK(train.feature_names.back() == "controllable_grant");
}

TEST_CASE("unrealizable requests exit with code 3 and name the winner")
{
    auto r = run("solve --game " + data("all_odd.pg") + " --player 1");
    CHECK(r.code == 3);
    CHECK(r.out.find("player 2 wins") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2 and a line number")
{
    auto r = run("solve --game " + data("malformed.pg"));
    CHECK(r.code == 2);
    CHECK(r.out.find("line 3") != std::string::npos);
    TempDir tmp;
    std::ofstream(tmp / "bad.csv") << "d=2\n0,1,good\n0,x,bad\n";
    auto l = run("learn --train " + (tmp / "bad.csv"));
    CHECK(l.code == 2);
    CHECK(l.out.find("line 3") != std::string::npos);
    std::ofstream(tmp / "contra.csv") << "d=1\n1,good\n1,bad\n";
    CHECK(run("learn --train " + (tmp / "contra.csv")).code == 2);
}

TEST_CASE("learn writes a verified tree")
{
    TempDir tmp;
    auto r = run("learn --train " + data("four_state_strategy.csv") + " --out " + (tmp / "t.txt") + " --dot " + (tmp / "t.dot"));
    CHECK(r.code == 0);
    CHECK(r.out.find("size 7") != std::string::npos);
    auto tree = stratdt::DecisionTree::parse(slurp(tmp.path / "t.txt"), 4);
    CHECK(stratdt::fits_exactly(tree, stratdt::testing::four_state_strategy()));
    CHECK(slurp(tmp.path / "t.dot").find("state2") != std::string::npos);

    std::ofstream(tmp / "x67.csv") << "d=7\n0,0,0,0,0,1,1,good\n0,0,0,0,0,0,0,good\n0,0,0,0,0,1,0,bad\n0,0,0,0,0,0,1,bad\n";
    CHECK(run("learn --train " + (tmp / "x67.csv")).out.find("size 3") != std::string::npos);

    std::ofstream(tmp / "chain.csv") << "d=2\n1,0,good\n0,1,good\n1,1,good\n0,0,bad\n";
    auto c = run("learn --train " + (tmp / "chain.csv") + " --chain on --out -");
    CHECK(c.out.find("size 1") != std::string::npos);
    CHECK(c.out.find("or(x1=1,x2=1)") != std::string::npos);
}

TEST_CASE("bdd subcommand")
{
    TempDir tmp;
    std::ofstream(tmp / "ex3.csv") << "d=5\n0,0,0,0,1,good\n0,0,0,0,0,bad\n";
    auto r = run("bdd --train " + (tmp / "ex3.csv") + " --orderings 1 --sift off");
    CHECK(r.code == 0);
    CHECK(r.out.find("size 5") != std::string::npos);
}

TEST_CASE("gen-random and compare are reproducible")
{
    TempDir tmp;
    CHECK(run("gen-random --states 8 --priorities 3 --seed 4 --out " + (tmp / "a.pg")).code == 0);
    CHECK(run("gen-random --states 8 --priorities 3 --seed 4 --out " + (tmp / "b.pg")).code == 0);
    CHECK(slurp(tmp.path / "a.pg") == slurp(tmp.path / "b.pg"));
    CHECK(run("gen-random --states 7 --count 5 --seed 10 --out-dir " + (tmp / "corpus")).code == 0);
    CHECK(fs::exists(tmp.path / "corpus" / "random_14.pg"));

    std::string games = data("request_grant.aag");
    for (int s = 10; s < 15; ++s) games += " " + (tmp / ("corpus/random_" + std::to_string(s) + ".pg"));
    // Explicit games are compared on the strategy of the initial state's winner.
    for (const char* report : {"r1.csv", "r2.csv"}) {
        auto r = run("compare --game " + games + " --orderings 30 --seed 5 --timings off --jobs 3 --report " + (tmp / report));
        CHECK(r.code == 0);
    }
    const auto r1 = slurp(tmp.path / "r1.csv");
    CHECK(r1 == slurp(tmp.path / "r2.csv"));
    CHECK(r1.rfind("name,states,state_bits,action_bits,train,bdd,dt,dtplus,ms_solve,ms_bdd,ms_dt,ms_dtplus\n", 0) == 0);
    CHECK(r1.find("request_grant,7,2,1,8,") != std::string::npos);

    // Appending to an existing report does not repeat the header.
    CHECK(run("compare --game " + data("request_grant.aag") + " --orderings 5 --report " + (tmp / "r1.csv")).code == 0);
    const auto appended = slurp(tmp.path / "r1.csv");
    CHECK(appended.find("name,", 1) == std::string::npos);
}

TEST_CASE("usage errors")
{
    CHECK(run("").code != 0);
    CHECK(run("learn --train " + data("four_state_strategy.csv") + " --chain maybe").code != 0);
    CHECK(run("solve --game /nonexistent.pg").code != 0);
}
