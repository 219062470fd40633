#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rcb/cli.hpp"
#include "rcb/combin.hpp"

using nlohmann::json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "rcb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = rcb::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("blocks golden case") {
    const auto r = run({"blocks", "--m", "2", "--d", "1", "--n", "2", "--kappa", "1", "--c", "1", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["mode"] == "numeric");
    CHECK(j["group"] == json({{"m", 2}, {"d", 1}, {"n", 2}}));
    REQUIRE(j["blocks"].size() == 3);
    std::set<std::set<std::string>> classes;
    for (const auto& b : j["blocks"]) {
        std::set<std::string> s;
        for (const auto& l : b) s.insert(rcb::multipartition_from_json(l, 2).to_string());
        classes.insert(s);
    }
    const std::set<std::set<std::string>> want{
        {"((2),())"}, {"((),(1,1))"}, {"((1,1),())", "((1),(1))", "((),(2))"}};
    CHECK(classes == want);

    const auto h = run({"blocks", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1"});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "3 blocks"));
}

TEST_CASE("blocks for G(m,d,n) json labels") {
    const auto r = run({"blocks", "--m", "2", "--d", "2", "--n", "4", "--kappa", "1", "--c", "0", "--json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    for (const auto& b : j["blocks"])
        for (const auto& l : b) {
            CHECK(l.contains("orbit_rep"));
            CHECK(l["epsilon"].is_number_integer());
            CHECK_NOTHROW(rcb::multipartition_from_json(l["orbit_rep"], 2));
        }
    const auto g = run({"blocks", "--m", "2", "--d", "2", "--n", "3", "--generic", "--json"});
    CHECK(g.code == 0);
    CHECK(json::parse(g.out)["mode"] == "generic");
}

TEST_CASE("convert") {
    const auto r = run({"convert", "--m", "2", "--c", "1"});
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "H = [-1, 1]"));
    CHECK(contains(r.out, "a = [0, 1]"));
    const auto j = json::parse(run({"convert", "--m", "2", "--c", "1", "--json"}).out);
    CHECK(j["H"] == json({"-1", "1"}));
    CHECK(j["a"] == json({"0", "1"}));
    const auto z = run({"convert", "--m", "4", "--zeta-order", "4", "--c", "z,0,1/2", "--json"});
    CHECK(z.code == 0);
}

TEST_CASE("invariant and same-block") {
    const auto inv = run({"invariant", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1", "--lambda", "[[2],[]]", "--json"});
    REQUIRE(inv.code == 0);
    CHECK(json::parse(inv.out)["invariant"] == json({"-1", "0"}));
    const auto sb = run({"same-block", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1", "--lambda", "[[1,1],[]]",
                         "--mu", "[[1],[1]]", "--json"});
    REQUIRE(sb.code == 0);
    CHECK(json::parse(sb.out)["same_block"] == true);
    const auto diff = run({"same-block", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1", "--lambda", "[[2],[]]",
                           "--mu", "[[],[1,1]]"});
    CHECK(contains(diff.out, "different blocks"));
}

TEST_CASE("tableaux") {
    const auto r = run({"tableaux", "--m", "2", "--lambda", "[[1],[1]]", "--json"});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out)["count"] == 2);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "--suite", "central", "--m", "2", "--n", "2", "--r", "2", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["suite"] == "central");
    const auto h = run({"verify", "--suite", "hecke", "--m", "1", "--n", "3"});
    CHECK(h.code == 0);
    CHECK(contains(h.out, "all pass"));
}

TEST_CASE("negative paths") {
    struct Case {
        std::vector<std::string> args;
        int code;
        std::string fragment;
    };
    const std::vector<Case> cases{
        {{"blocks", "--m", "2", "--d", "2", "--n", "2", "--kappa", "1", "--c", "0"}, 2, "n=2 with even d"},
        {{"blocks", "--m", "2", "--d", "2", "--n", "3", "--kappa", "1", "--c", "1"}, 2, "c_1"},
        {{"blocks", "--m", "4", "--d", "3", "--n", "3", "--kappa", "1", "--c", "0,0,0"}, 2, "does not divide"},
        {{"blocks", "--m", "2", "--n", "2", "--kappa", "1"}, 2, "--c expects"},
        {{"blocks", "--m", "2", "--n", "2"}, 2, "--generic"},
        {{"blocks", "--m", "2", "--n", "2", "--generic", "--kappa", "1"}, 2, "cannot be combined"},
        {{"blocks", "--m", "3", "--n", "2", "--zeta-order", "4", "--kappa", "1", "--c", "0,0"}, 2, "multiple of m"},
        {{"blocks", "--m", "2", "--n", "2", "--kappa", "1/0", "--c", "1"}, 2, "error"},
        {{"invariant", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1", "--lambda", "[[1,2],[]]"}, 2, "error"},
        {{"invariant", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1", "--lambda", "[[1],"}, 2, "malformed"},
        {{"same-block", "--m", "2", "--kappa", "1", "--c", "1", "--lambda", "[[1],[]]", "--mu", "[[2],[]]"}, 2, "sizes differ"},
        {{"verify", "--suite", "nope", "--m", "2", "--n", "2"}, 2, "unknown suite"},
        {{"verify", "--suite", "hecke", "--m", "2", "--n", "2", "--r", "1"}, 2, "--r applies"},
        {{"verify", "--suite", "central", "--m", "2", "--n", "2", "--k", "1"}, 2, "--k applies"},
        {{"verify", "--suite", "plemmas", "--m", "1", "--n", "3", "--r", "3"}, 2, "error"},
        {{"verify", "--suite", "central", "--m", "2", "--n", "2", "--kappa", "1"}, 2, "not accepted"},
        {{"verify", "--suite", "hecke", "--m", "5", "--n", "5"}, 3, "resource limit"},
        {{"blocks", "--m", "2", "--n", "2", "--kappa", "1", "--c", "1", "--threads", "-1"}, 2, "--threads"},
        {{"frobnicate"}, 2, ""},
        {{}, 2, ""},
    };
    for (const auto& c : cases) {
        const auto r = run(c.args);
        CAPTURE(r.err);
        CHECK(r.code == c.code);
        CHECK(contains(r.err, c.fragment));
    }
}

TEST_CASE("help exits cleanly") {
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::string> args{"blocks", "--m", "3", "--n", "3", "--kappa", "1", "--c", "1,z", "--json"};
    const auto a = run(args);
    auto threaded = args;
    threaded.push_back("--threads");
    threaded.push_back("2");
    CHECK(a.out == run(args).out);
    CHECK(a.out == run(threaded).out);
    const std::vector<std::string> v{"verify", "--suite", "gamma", "--m", "2", "--n", "3", "--json"};
    CHECK(run(v).out == run(v).out);
}

TEST_CASE("out flag writes a file") {
    const auto path = (std::filesystem::temp_directory_path() / "rcb_cli_out_test.json").string();
    std::filesystem::remove(path);
    const auto r = run({"convert", "--m", "2", "--c", "1", "--json", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(json::parse(ss.str())["C"] == "-1");
    std::filesystem::remove(path);
    CHECK(run({"convert", "--m", "2", "--c", "1", "--out", "/nonexistent/dir/x"}).code == 2);
}
