#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "bireal/bench.hpp"
#include "bireal/io.hpp"
#include "bireal/realizer.hpp"
#include "cli.hpp"
#include "test_support.hpp"

using namespace bireal;
using namespace bireal::testing;

namespace {

std::string data_path(const std::string& name) { return std::string(BIREAL_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "bireal");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}

TEST_SUITE_BEGIN("io");

TEST_CASE("parse the line format") {
    CHECK(read_instance_file(data_path("worked_example.txt")) == worked_example());
    CHECK(parse_instance("n2 1\nn1: 1\nc_up 1\nc_low 0\nr_up 1\nr_low 1\n") ==
          IntervalInstance{1, 1, {1}, {1}, {0}, {1}});
    CHECK(parse_instance(format_instance(worked_example())) == worked_example());
    CHECK(parse_instance("n1 0\nn2 0\nr_low:\nr_up:\nc_low:\nc_up:\n") == IntervalInstance{});
}

TEST_CASE("parse JSON") {
    CHECK(read_instance_file(data_path("worked_example.json")) == worked_example());
    CHECK_THROWS_AS(parse_instance("{\"n1\": 1}"), ParseError);
    CHECK_THROWS_AS(parse_instance("{\"n1\": 1, "), ParseError);
}

TEST_CASE("parse errors name the line and the field") {
    try {
        read_instance_file(data_path("malformed.txt"));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.field() == "r_low");
    }
    try {
        parse_instance("n1 2\nn2 1\nr_low: 1\nr_up: 1 1\nc_low: 0\nc_up: 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.field() == "r_low");
    }
    CHECK_THROWS_AS(parse_instance("n1 1\nn1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n1 1\nn2 1\nweight 3\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n1 -1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("n1 1\nn2 1\nr_low: 0\n"), ParseError);
    CHECK_THROWS_AS(read_instance_file(data_path("missing.txt")), ParseError);
}

TEST_CASE("graph formats") {
    const BipartiteGraph g = worked_example_graph();
    CHECK(format_graph(g, GraphFormat::Edges) == "1 1\n1 2\n1 3\n1 4\n2 1\n3 2\n");
    CHECK(format_graph(g, GraphFormat::Json) ==
          "{\"edges\":[[1,1],[1,2],[1,3],[1,4],[2,1],[3,2]],\"n1\":3,\"n2\":5}\n");
    const std::string dot = format_graph(g, GraphFormat::Dot);
    CHECK(dot.find("u1 -- v4;") != std::string::npos);
    CHECK(dot.find("v5;") != std::string::npos);
    CHECK_THROWS_AS(parse_graph_json("{\"n1\":1,\"n2\":1,\"edges\":[[0,1]]}"), ParseError);
}

TEST_CASE("structured output round-trips and re-verifies") {
    std::mt19937_64 rng(8);
    int realized = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const IntervalInstance inst = random_instance(rng, 6, 5);
        try {
            const RealizationReport report = realize_edge_minimal(inst);
            const BipartiteGraph back = parse_graph_json(format_graph(report.graph, GraphFormat::Json));
            CHECK(back == report.graph);
            CHECK(verify_realization(back, inst));
            ++realized;
        } catch (const NotRealizable&) {
        }
    }
    CHECK(realized > 20);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cli");

TEST_CASE("check") {
    auto ok = run_cli({"check", data_path("worked_example.txt")});
    CHECK(ok.code == 0);
    CHECK(ok.out == "realizable\n");

    auto json = run_cli({"check", data_path("worked_example.json")});
    CHECK(json.code == 0);

    auto bad = run_cli({"check", data_path("unrealizable.txt")});
    CHECK(bad.code == 1);
    CHECK(bad.out == "not realizable: prefix k=1, side r\n");

    auto inverted = run_cli({"check", data_path("inverted.txt")});
    CHECK(inverted.code == 2);
    CHECK(inverted.err.find("inverted") != std::string::npos);

    auto malformed = run_cli({"check", data_path("malformed.txt")});
    CHECK(malformed.code == 2);
    CHECK(malformed.err.find("line 3, field r_low") != std::string::npos);

    CHECK(run_cli({"check", data_path("missing.txt")}).code == 2);
    CHECK(run_cli({"check", "--quiet", data_path("unrealizable.txt")}).out.empty());
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({}).code == 2);
}

TEST_CASE("realize") {
    auto min = run_cli({"realize", data_path("worked_example.txt")});
    CHECK(min.code == 0);
    CHECK(min.out == slurp(data_path("worked_example_min.edges")));
    CHECK(min.err.find("delta1 2\n") != std::string::npos);
    CHECK(min.err.find("delta2 1\n") != std::string::npos);
    CHECK(min.err.find("edges 6\n") != std::string::npos);
    CHECK(min.err.find("r 4 1 1\n") != std::string::npos);

    auto max = run_cli({"realize", "--mode", "max", "--format", "json", "--verify",
                        data_path("worked_example.txt")});
    CHECK(max.code == 0);
    const BipartiteGraph g = parse_graph_json(max.out);
    CHECK(g.edge_count() == 9);
    CHECK(verify_realization(g, worked_example()));
    CHECK(max.err.find("verified") != std::string::npos);

    auto empty = run_cli({"realize", "--quiet", data_path("zero_lower.txt")});
    CHECK(empty.code == 0);
    CHECK(empty.out.empty());
    CHECK(empty.err.empty());

    auto dot = run_cli({"realize", "--format", "dot", data_path("worked_example.txt")});
    CHECK(dot.out.rfind("graph realization {", 0) == 0);

    auto bad = run_cli({"realize", data_path("unrealizable.txt")});
    CHECK(bad.code == 1);
    CHECK(bad.err == "not realizable: prefix k=1, side r\n");

    CHECK(run_cli({"realize", "--mode", "median", data_path("worked_example.txt")}).code == 2);
    CHECK(run_cli({"realize", data_path("inverted.txt")}).code == 2);
}

TEST_CASE("bench") {
    auto single = run_cli({"bench", "--schedule", "64x64x4", "--runs", "1"});
    CHECK(single.code == 0);
    // header plus one row
    CHECK(std::count(single.out.begin(), single.out.end(), '\n') == 2);
    CHECK(single.out.find("\n64\t64\t") != std::string::npos);

    auto quiet = run_cli({"bench", "--schedule", "8x8x2,16x16x2", "--runs", "1", "--quiet"});
    CHECK(std::count(quiet.out.begin(), quiet.out.end(), '\n') == 2);

    CHECK(run_cli({"bench", "--schedule", "8x8"}).code == 2);
}

TEST_CASE("planted instances") {
    const PlantedSpec spec{200, 150, 4.0, 2};
    const IntervalInstance a = planted_instance(spec, 7);
    CHECK(a == planted_instance(spec, 7));
    CHECK_FALSE(a == planted_instance(spec, 8));
    const RealizationReport report = realize_edge_minimal(a);
    CHECK(verify_realization(report.graph, a));
    CHECK(report.graph.edge_count() ==
          static_cast<std::size_t>(validate_and_normalize(a).c_low().total() + report.delta1));

    CHECK(default_schedule().size() == 5);
    CHECK(default_schedule().front().n1 == 1024);
    const auto parsed = parse_schedule("10x20x1.5,3x3x0");
    REQUIRE(parsed.size() == 2);
    CHECK(parsed[0].n2 == 20);
    CHECK(parsed[0].density == doctest::Approx(1.5));
    CHECK_THROWS_AS(parse_schedule("10x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_schedule("axbx1"), std::invalid_argument);
}

TEST_SUITE_END();
