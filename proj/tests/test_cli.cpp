/*
   Copyright 2026 The hopfscf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>

using Json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(HOPFSCF_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

}  // namespace

TEST_CASE("expand") {
    Run r = run("expand --elem 'B:(3)' --to H --json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"basis\":\"H\",\"terms\":[{\"comp\":[1,1,1],\"coeff\":\"1\"}]}\n");

    // B(q,t)_{(1,2)}: I = {1}, J ∈ {{2}, {1,2}}
    r = run("expand --elem 'B:(1,2)' --to H --json");
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][0]["comp"] == Json::array({1, 1, 1}));
    CHECK(j["terms"][0]["coeff"] == "t");
    CHECK(j["terms"][1]["comp"] == Json::array({2, 1}));
    CHECK(j["terms"][1]["coeff"] == "q");

    r = run("expand --elem 'M:(1,2)' --to Pi --nu 2 --json");
    CHECK(r.status == 0);
    const Json p = Json::parse(r.out);
    CHECK(p["nu"] == 2);
    CHECK(p["terms"].size() == 2);
    CHECK(p["terms"][1]["coeff"] == "-2");

    r = run("expand --elem 'L:(2,1)' --to M");
    CHECK(r.status == 0);
    CHECK(r.out == "M(1,1,1) + M(2,1)\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run("expand --elem 'X:(1)' --to H").status == 2);
    CHECK(run("expand --elem 'M:(1,0)' --to L").status == 2);
    CHECK(run("expand --elem 'M:1,2' --to L").status == 2);
    CHECK(run("expand --elem 'M:(1,2)' --to Pi").status == 2);
    CHECK(run("expand --elem 'M:(1,2)' --to H").status == 2);
    CHECK(run("structconst --k 3 --K '{3}'").status == 2);
    CHECK(run("verify --suite nope").status == 2);
    CHECK(run("frobnicate").status == 2);
    CHECK(run("").status == 2);
}

TEST_CASE("products and coproducts") {
    Run r = run("product --left 'L:(1)' --right 'L:(1)' --json");
    CHECK(r.status == 0);
    CHECK(r.out == "{\"basis\":\"L\",\"terms\":[{\"comp\":[1,1],\"coeff\":\"1\"},{\"comp\":[2],\"coeff\":\"1\"}]}\n");
    r = run("product --left 'B:(1,2)' --right 'B:(2)'");
    CHECK(r.out == "B(1,4)\n");
    r = run("coproduct --elem 'M:(1,2)' --json");
    const Json j = Json::parse(r.out);
    CHECK(j["terms"].size() == 3);
}

TEST_CASE("structure constant tables") {
    Run r = run("structconst --k 3 --K '{1,2}' --csv");
    CHECK(r.status == 0);
    const std::string expected =
        "k,K,m,I,J,polynomial\n"
        "3,\"{1,2}\",0,{},\"{1,2}\",1\n"
        "3,\"{1,2}\",1,{},{},q*t + t^2\n"
        "3,\"{1,2}\",1,{},{1},q + 2*t\n"
        "3,\"{1,2}\",2,{},{},q*t + t^2\n"
        "3,\"{1,2}\",2,{1},{},q + 2*t\n"
        "3,\"{1,2}\",3,\"{1,2}\",{},1\n";
    CHECK(r.out == expected);
    // K = ∅ in degree 2: constants only
    r = run("structconst --k 2 --K '{}' --csv");
    CHECK(r.out == "k,K,m,I,J,polynomial\n2,{},0,{},{},1\n2,{},1,{},{},2\n2,{},2,{},{},1\n");
    r = run("structconst --k 3 --K '{1,2}' --filter 1 --csv");
    CHECK(r.out.find("\n3,\"{1,2}\",2,") == std::string::npos);
    // identical arguments give identical output
    CHECK(run("structconst --k 4 --K '{2}'").out == run("structconst --k 4 --K '{2}'").out);
}

TEST_CASE("verify") {
    Run r = run("verify --suite specializations --max-degree 5 --json");
    CHECK(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["suite"] == "specializations");
    r = run("verify --suite group-axioms --nu 2,3 --max-degree 3");
    CHECK(r.status == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(run("verify --suite overlap --max-degree 6").status == 0);
    CHECK(run("verify --suite dualities --max-degree 4 --nu 1").status == 2);
}

TEST_CASE("group enumeration bound") {
    const Run r = run("verify --suite group-axioms --nu 2 --max-degree 6 --json");
    CHECK(r.status == 0);
    const std::string limited = "HOPF_SCF_MAX_GROUP=8 " + std::string(HOPFSCF_CLI) + " verify --suite group-axioms --nu 2 --max-degree 6 --json";
    FILE* pipe = popen(limited.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
    const int raw = pclose(pipe);
    CHECK(WEXITSTATUS(raw) == 1);
    CHECK(out.find("enumeration bound") != std::string::npos);
}
