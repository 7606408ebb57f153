#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "elnet/cli.hpp"
#include "elnet/io.hpp"

using namespace elnet;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// Files under a per-process temporary directory.
std::string write_file(const std::string& name, const std::string& body) {
    const auto dir = std::filesystem::temp_directory_path() / ("elnet_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    const auto path = dir / name;
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST_CASE("sampler draws p/q in range deterministically") {
    cli::Sampler a(7), b(7), c(8);
    bool differs = false;
    for (int i = 0; i < 500; ++i) {
        const Rat x = a.next(), y = b.next(), z = c.next();
        CHECK(x == y);
        differs = differs || x != z;
        CHECK(x.sign() > 0);
        CHECK(x.num() <= 1000);
        CHECK(x.den() <= 1000);
    }
    CHECK(differs);
}

TEST_CASE("graph subcommand") {
    const Result r = call({"graph", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(graph_to_json(graph_from_json(parse_json_text(r.out))).dump(2) + "\n" == r.out);
    CHECK(call({"graph", "--n", "6"}).code == 1);
    CHECK(call({"graph"}).code == 1);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 1);
    CHECK(call({"bogus"}).code == 1);
    CHECK(call({"graph", "--n", "2", "--unknown"}).code == 1);
    CHECK(call({"invert", "--graph", "builtin3"}).code == 1);
    CHECK(call({"verify", "--graph", "builtin9"}).code == 1);
    CHECK(call({"verify", "--graph", "builtinx"}).code == 1);
    const Result help = call({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("roundtrip") != std::string::npos);
}

TEST_CASE("roundtrip on the star") {
    const std::string cond = write_file("abc.json", R"({"a":"2","b":"3","c":"5"})");
    const Result r = call({"roundtrip", "--graph", "builtin3", "--cond", cond});
    CHECK(r.code == 0);
    const Json j = parse_json_text(r.out);
    CHECK(j["exact"] == true);
    CHECK(j["response_path"] == j["input"]);
    CHECK(j["point_path"] == j["input"]);

    const std::string graph = write_file("star.json", call({"graph", "--n", "3"}).out);
    CHECK(call({"roundtrip", "--graph", graph, "--cond", cond}).code == 0);
    CHECK(call({"roundtrip", "--graph", graph, "--cond", write_file("neg.json", R"({"a":"2","b":"-3","c":"5"})")}).code == 1);
    CHECK(call({"roundtrip", "--graph", graph, "--cond", write_file("few.json", R"({"a":"2"})")}).code == 1);
    CHECK(call({"roundtrip", "--graph", graph, "--cond", write_file("junk.json", "{")}).code == 1);
}

TEST_CASE("invert from the unit star response") {
    const std::string resp = write_file(
        "unit.json", R"({"n":3,"entries":[["-2/3","1/3","1/3"],["1/3","-2/3","1/3"],["1/3","1/3","-2/3"]]})");
    const Result r = call({"invert", "--graph", "builtin3", "--response", resp});
    CHECK(r.code == 0);
    CHECK(parse_json_text(r.out) == parse_json_text(R"({"a":"1","b":"1","c":"1"})"));
    // a response with a negative off-diagonal entry is rejected before the pipeline runs
    const std::string bad = write_file("bad.json", R"({"n":3,"entries":[["0","-1","1"],["-1","0","1"],["1","1","-2"]]})");
    CHECK(call({"invert", "--graph", "builtin3", "--response", bad}).code == 1);
    CHECK(call({"invert", "--graph", "builtin4", "--response", resp}).code == 1);
}

TEST_CASE("respond, forward and invert compose") {
    for (int n = 2; n <= 5; ++n) {
        const std::string g = "builtin" + std::to_string(n);
        const DiskGraph dg = builtin_graph(n);
        cli::Sampler s(static_cast<std::uint64_t>(n));
        const Conductances c = s.next(dg.num_edges());
        const std::string cond = write_file("c" + std::to_string(n) + ".json", conductances_to_json(c, dg).dump());

        const Result resp = call({"respond", "--graph", g, "--cond", cond});
        CHECK(resp.code == 0);
        CHECK(response_from_json(parse_json_text(resp.out)) == response_matrix({dg, c}));

        const Result fwd = call({"forward", "--graph", g, "--cond", cond});
        CHECK(fwd.code == 0);
        const PluckerVector p = plucker_from_json(parse_json_text(fwd.out));
        CHECK(p.all_positive());
        CHECK(plucker_to_json(p).dump(2) + "\n" == fwd.out);

        // the point path takes any matrix with these minors
        const std::string point = write_file("p" + std::to_string(n) + ".json",
                                             point_to_json(MatrixPoint{matrix_from_plucker(p), true}).dump());
        const Result inv = call({"invert", "--graph", g, "--point", point});
        CHECK(inv.code == 0);
        CHECK(conductances_from_json(parse_json_text(inv.out), dg) == c);
        if (n <= 3) {
            const Result inv2 = call({"invert", "--graph", g, "--response", write_file("r.json", resp.out)});
            CHECK(inv2.out == inv.out);
        }
        CHECK(call({"roundtrip", "--graph", g, "--cond", cond}).code == 0);
    }
}

TEST_CASE("pipeline failures exit 2") {
    // isotropic shape but not positive: the left twist refuses it
    const std::string point = write_file("flat.json", R"({"rows":3,"cols":4,"entries":[["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]]})");
    const Result r = call({"invert", "--graph", "builtin2", "--point", point});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(call({"invert", "--graph", "builtin2", "--point", write_file("shape.json", R"({"rows":1,"cols":1,"entries":[["1"]]})")}).code == 1);
}

TEST_CASE("decimal rendering") {
    const std::string cond = write_file("dec.json", R"({"a":"1","b":"1","c":"1"})");
    const Result r = call({"respond", "--graph", "builtin3", "--cond", cond, "--decimal", "3"});
    CHECK(r.code == 0);
    CHECK(parse_json_text(r.out)["entries"][0][0] == "-0.667");
    CHECK(call({"roundtrip", "--graph", "builtin3", "--cond", cond, "--decimal", "2"}).code == 0);
}

TEST_CASE("verify is deterministic and passes on builtin graphs") {
    const Result a = call({"verify", "--graph", "builtin3", "--trials", "25", "--seed", "7"});
    CHECK(a.code == 0);
    const Json j = parse_json_text(a.out);
    CHECK(j["seed"] == 7);
    CHECK(j["passed"] == true);
    for (const Json& s : j["suites"]) CHECK(s["status"] == "passed");
    CHECK(call({"verify", "--graph", "builtin3", "--trials", "25", "--seed", "7"}).out == a.out);
    CHECK(call({"verify", "--graph", "builtin3", "--trials", "25", "--seed", "8"}).out != a.out);
    for (int n = 1; n <= 5; ++n) {
        const Result r = call({"verify", "--graph", "builtin" + std::to_string(n), "--trials", "3", "--seed", "1"});
        CHECK(r.code == 0);
        CHECK(parse_json_text(r.out)["passed"] == true);
    }
}

TEST_CASE("verify reports a graph that is not well connected") {
    // a pendant interior vertex makes the graph non-reduced
    const std::string g = write_file(
        "pendant.json",
        R"({"n":2,"boundary":["x","y"],"rotations":{"x":["e"],"y":["e","f"],"z":["f"]},"edges":{"e":["x","y"],"f":["y","z"]}})");
    const Result r = call({"verify", "--graph", g, "--trials", "2", "--seed", "1"});
    CHECK(r.code == 1);
    const Json j = parse_json_text(r.out);
    CHECK(j["passed"] == false);
    CHECK(j["suites"][0]["status"] == "failed");
}
