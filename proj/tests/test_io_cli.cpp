#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "symcolor/cli.hpp"
#include "symcolor/io.hpp"
#include "symcolor/solver.hpp"
#include "test_support.hpp"

using namespace symcolor;
using symcolor::testing::cycle;
using symcolor::testing::random_graph;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult cli_run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

class Scratch {
public:
    Scratch() {
        static int counter = 0;
        dir_ = fs::temp_directory_path() / ("symcolor_io_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        fs::create_directories(dir_);
    }
    ~Scratch() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }
    std::string write(const std::string& name, const std::string& text) const {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

private:
    fs::path dir_;
};

std::string read_file(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

// ---- serialization ----

TEST(Json, GraphRoundTrip) {
    FiniteGraph g = realize({GadgetKind::h_rigid, 2, 4});
    FiniteGraph back = graph_from_json(Json::parse(to_json(g).dump()));
    EXPECT_EQ(back.order(), g.order());
    EXPECT_EQ(back.edges(), g.edges());
    for (VertexId v = 0; v < g.order(); ++v) EXPECT_EQ(back.label(v), g.label(v));
}

TEST(Json, GraphWithoutLabelsUsesIds) {
    FiniteGraph g = graph_from_json(Json::parse(R"({"order":3,"edges":[[0,1],[1,2]]})"));
    EXPECT_EQ(g.size(), 2u);
    EXPECT_EQ(g.label(2), "2");
}

TEST(Json, ColoringRoundTripAllKinds) {
    FiniteGraph g = cycle(5);
    for (Parameter p : {Parameter::chi_odd, Parameter::chi_prime_d, Parameter::chi_total}) {
        ParameterResult r = compute_parameter(g, p);
        ASSERT_TRUE(r.witness);
        EXPECT_EQ(coloring_from_json(Json::parse(to_json(*r.witness).dump()), g), *r.witness) << to_string(p);
        EXPECT_EQ(coloring_from_json(to_json(r), g), *r.witness) << to_string(p);
    }
}

TEST(Json, ListsRoundTrip) {
    ListAssignment l({{0, 1, 2}, {3, 4, 5}, {1, 2, 7}});
    ListAssignment back = lists_from_json(Json::parse(to_json(l).dump()), 3);
    for (VertexId v = 0; v < 3; ++v) EXPECT_EQ(back[v], l[v]);
    EXPECT_EQ(back.k(), 3u);
}

TEST(Json, MissingVertexIsSchemaError) {
    FiniteGraph g = cycle(4);
    Json c = Json::parse(R"({"kind":"vertex","vertex":{"0":0,"1":1,"2":0}})");
    try {
        coloring_from_json(c, g);
        FAIL() << "expected a schema error";
    } catch (const SchemaError& e) {
        EXPECT_STREQ(e.what(), "schema mismatch: vertex 3 uncolored");
    }
}

TEST(Json, OtherSchemaErrors) {
    FiniteGraph g = cycle(3);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"kind":"paint","vertex":{}})"), g), SchemaError);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"kind":"vertex","vertex":{"x":0}})"), g), SchemaError);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"kind":"vertex","vertex":{"0":0,"1":1,"2":2,"7":1}})"), g),
                 SchemaError);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"kind":"edge","edge":[[0,1,0],[1,2,1]]})"), g), SchemaError);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"kind":"edge","edge":[[0,1,0],[1,2,1],[0,5,2]]})"), g),
                 SchemaError);
    EXPECT_THROW(coloring_from_json(Json::parse(R"({"value":null,"witness":null})"), g), SchemaError);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"order":2,"edges":[[0,0]]})")), SchemaError);
    EXPECT_THROW(graph_from_json(Json::parse(R"({"edges":[]})")), SchemaError);
    EXPECT_THROW(lists_from_json(Json::parse(R"({"k":2,"lists":{"0":[0,1],"1":[0,1,2]}})"), 2), SchemaError);
    EXPECT_THROW(lists_from_json(Json::parse(R"({"lists":{"0":[0,1]}})"), 2), SchemaError);
}

TEST(Dot, RoundTrip) {
    FiniteGraph g = realize({GadgetKind::g_pendant, 2, 3});
    FiniteGraph back = graph_from_dot(to_dot(g));
    EXPECT_EQ(back.order(), g.order());
    EXPECT_EQ(back.edges(), g.edges());
    for (VertexId v = 0; v < g.order(); ++v) EXPECT_EQ(back.label(v), g.label(v));
}

TEST(Dot, RejectsMalformedInput) {
    EXPECT_THROW(graph_from_dot("digraph { 0 -> 1 }"), SchemaError);
    EXPECT_THROW(graph_from_dot("graph { a -- b }"), SchemaError);
    EXPECT_THROW(graph_from_dot("graph { 0 -- 1"), SchemaError);
    EXPECT_THROW(graph_from_dot("graph { 0 -- 0 }"), SchemaError);
}

TEST(JsonProperty, RandomGraphsRoundTripThroughBothFormats) {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        FiniteGraph g = random_graph(1 + rng() % 12, 0.3, rng);
        EXPECT_EQ(graph_from_json(to_json(g)).edges(), g.edges());
        EXPECT_EQ(graph_from_dot(to_dot(g)).edges(), g.edges());
        EXPECT_EQ(graph_from_dot(to_dot(g)).order(), g.order());
    }
}

// ---- command line ----

TEST(Cli, GenerateG2) {
    CliResult r = cli_run({"gen", "--gadget", "g2", "--horizon", "3"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    FiniteGraph g = graph_from_json(Json::parse(r.out));
    EXPECT_EQ(max_degree(g), 3u);
    EXPECT_EQ(g.order(), realize({GadgetKind::g2_rail, 2, 3}).order());
}

TEST(Cli, GenerateTruncationAsDot) {
    CliResult r = cli_run({"gen", "--gadget", "g", "--depth", "3", "--dot"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    FiniteGraph g = graph_from_dot(r.out);
    EXPECT_EQ(g.edges(), truncate(generate({GadgetKind::g_pendant, 2, kUnbounded}), 3).edges());
}

TEST(Cli, ComputeOddChromaticOfFiveCycle) {
    Scratch s;
    const std::string graph = s.write("c5.json", to_json(cycle(5)).dump());
    CliResult r = cli_run({"compute", "--graph", graph, "--param", "chi-odd"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    Json doc = Json::parse(r.out);
    EXPECT_EQ(doc.at("value"), 5);
    EXPECT_EQ(doc.at("parameter"), "chi-odd");
    EXPECT_EQ(doc.at("minimality").at("refuted_nodes").size(), 5u - doc.at("minimality").at("first_k").get<std::size_t>());

    const std::string witness = s.write("w.json", r.out);
    CliResult v = cli_run({"verify", "--graph", graph, "--coloring", witness, "--notion", "odd"});
    EXPECT_EQ(v.code, cli::kOk) << v.err;
    EXPECT_TRUE(Json::parse(v.out).at("valid").get<bool>());
}

TEST(Cli, ComputeWithoutValueExitsInvalid) {
    Scratch s;
    const std::string graph = s.write("k2.json", R"({"order":2,"edges":[[0,1]]})");
    CliResult r = cli_run({"compute", "--graph", graph, "--param", "d-prime"});
    EXPECT_EQ(r.code, cli::kInvalid);
    EXPECT_TRUE(Json::parse(r.out).at("value").is_null());
}

TEST(Cli, ComputeBudgetExhaustionIsResourceError) {
    Scratch s;
    const std::string graph = s.write("k5.json", to_json(symcolor::testing::complete(5)).dump());
    CliResult r = cli_run({"compute", "--graph", graph, "--param", "chi", "--budget", "30"});
    EXPECT_EQ(r.code, cli::kUsage);
    EXPECT_NE(r.err.find("resource limit"), std::string::npos);
}

TEST(Cli, VerifyExitCodes) {
    Scratch s;
    const std::string graph = s.write("c4.json", to_json(cycle(4)).dump());
    const std::string good = s.write("good.json", R"({"kind":"vertex","vertex":{"0":0,"1":1,"2":0,"3":1}})");
    const std::string bad = s.write("bad.json", R"({"kind":"vertex","vertex":{"0":0,"1":0,"2":1,"3":1}})");
    const std::string partial = s.write("partial.json", R"({"kind":"vertex","vertex":{"0":0,"1":1,"2":0}})");
    EXPECT_EQ(cli_run({"verify", "--graph", graph, "--coloring", good, "--notion", "proper-vertex"}).code, cli::kOk);

    CliResult b = cli_run({"verify", "--graph", graph, "--coloring", bad, "--notion", "proper-vertex"});
    EXPECT_EQ(b.code, cli::kInvalid);
    Json report = Json::parse(b.out);
    EXPECT_FALSE(report.at("valid").get<bool>());
    EXPECT_FALSE(report.at("violations").empty());
    EXPECT_TRUE(report.at("violations")[0].contains("site"));
    EXPECT_TRUE(report.at("violations")[0].contains("reason"));

    EXPECT_EQ(cli_run({"verify", "--graph", graph, "--coloring", good, "--distinguishing"}).code, cli::kInvalid);

    CliResult p = cli_run({"verify", "--graph", graph, "--coloring", partial, "--notion", "proper-vertex"});
    EXPECT_EQ(p.code, cli::kUsage);
    EXPECT_NE(p.err.find("schema mismatch: vertex 3 uncolored"), std::string::npos);

    const std::string lists = s.write("lists.json", R"({"lists":{"0":[0],"1":[1],"2":[0],"3":[2]}})");
    EXPECT_EQ(cli_run({"verify", "--graph", graph, "--coloring", good, "--lists", lists}).code, cli::kInvalid);
}

TEST(Cli, UsageErrors) {
    Scratch s;
    const std::string graph = s.write("c4.json", to_json(cycle(4)).dump());
    EXPECT_EQ(cli_run({}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"compute", "--graph", graph}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"compute", "--graph", graph, "--param", "chi_total"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"compute", "--graph", s.path("missing.json"), "--param", "chi"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"gen", "--gadget", "q"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"gen", "--gadget", "g", "--blob", "1"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"verify", "--graph", graph, "--coloring", graph}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"export", "--input", graph, "--to", "png"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"corpus", "--rules", "brooks,nope"}).code, cli::kUsage);
    EXPECT_EQ(cli_run({"--help"}).code, cli::kOk);
}

TEST(Cli, ExportRoundTrip) {
    Scratch s;
    CliResult gen = cli_run({"gen", "--gadget", "h", "--horizon", "4"});
    ASSERT_EQ(gen.code, cli::kOk);
    const std::string json_path = s.write("h.json", gen.out);
    CliResult dot = cli_run({"export", "--input", json_path, "--to", "dot"});
    ASSERT_EQ(dot.code, cli::kOk) << dot.err;
    const std::string dot_path = s.write("h.dot", dot.out);
    CliResult back = cli_run({"export", "--input", dot_path, "--to", "json"});
    ASSERT_EQ(back.code, cli::kOk) << back.err;
    EXPECT_EQ(Json::parse(back.out), Json::parse(gen.out));
}

TEST(Cli, KpwOutputVerifies) {
    Scratch s;
    const std::string graph = s.write("g.json", to_json(realize({GadgetKind::g_pendant, 2, 2})).dump());
    CliResult r = cli_run({"algo", "kpw", "--graph", graph});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const std::string out = s.write("kpw.json", r.out);
    EXPECT_EQ(cli_run({"verify", "--graph", graph, "--coloring", out, "--distinguishing"}).code,
              cli::kOk);
}

TEST(Cli, ListDistinguishingWritesTrace) {
    Scratch s;
    const std::string graph = s.write("g.json", to_json(realize({GadgetKind::g_pendant, 2, 3})).dump());
    const std::string trace = s.path("trace.jsonl");
    CliResult r = cli_run({"algo", "listdist", "--graph", graph, "--trace", trace});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    Json doc = Json::parse(r.out);
    EXPECT_GE(doc.at("passes").get<std::size_t>(), 1u);
    EXPECT_TRUE(fs::exists(trace));
    std::istringstream lines(read_file(trace));
    std::string line;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        Json rec = Json::parse(line);
        EXPECT_TRUE(rec.contains("case"));
        ++count;
    }
    EXPECT_EQ(count, doc.at("trace").size());
    const std::string out = s.write("ld.json", r.out);
    EXPECT_EQ(
        cli_run({"verify", "--graph", graph, "--coloring", out, "--notion", "proper-vertex", "--distinguishing"}).code,
        cli::kOk);
}

TEST(Cli, ListDistinguishingUnsupportedExitsInvalid) {
    Scratch s;
    const std::string graph =
        s.write("k33.json", R"({"order":6,"edges":[[0,3],[0,4],[0,5],[1,3],[1,4],[1,5],[2,3],[2,4],[2,5]]})");
    CliResult r = cli_run({"algo", "listdist", "--graph", graph});
    EXPECT_EQ(r.code, cli::kInvalid);
    EXPECT_NE(r.err.find("unsupported structure"), std::string::npos);
}

TEST(Cli, ExtendSucceedsAndIsRefuted) {
    CliResult ok = cli_run(
        {"algo", "extend", "--gadget", "g1", "--palette", "8", "--notion", "odd", "--depth", "4", "--lookahead", "2"});
    ASSERT_EQ(ok.code, cli::kOk) << ok.err;
    EXPECT_EQ(Json::parse(ok.out).at("depth"), 4);

    CliResult no =
        cli_run({"algo", "extend", "--gadget", "g1", "--palette", "2", "--notion", "proper-vertex", "--depth", "3"});
    EXPECT_EQ(no.code, cli::kInvalid);
    EXPECT_NE(no.err.find("refuted"), std::string::npos);
}

TEST(Cli, RecolorSucceedsAndReportsObstruction) {
    Scratch s;
    FiniteGraph g = realize({GadgetKind::g_pendant, 2, 3});
    ParameterResult r = compute_parameter(g, Parameter::chi_d);
    ASSERT_TRUE(r.witness);
    const std::string graph = s.write("g.json", to_json(g).dump());
    const std::string coloring = s.write("f.json", to_json(r).dump());
    CliResult vacuous = cli_run({"algo", "recolor", "--graph", graph, "--coloring", coloring, "--remove", "99"});
    ASSERT_EQ(vacuous.code, cli::kOk) << vacuous.err;
    EXPECT_TRUE(Json::parse(vacuous.out).at("steps")[0].at("replacement").is_null());
    EXPECT_EQ(cli_run({"algo", "recolor", "--graph", graph, "--coloring", coloring, "--remove", "x"}).code,
              cli::kUsage);

    FiniteGraph one = realize({GadgetKind::g_pendant, 2, 1});
    Coloring f = Coloring::of_vertices(std::vector<ColorId>(one.order(), 0));
    for (VertexId v = 0; v < one.order(); ++v) f.vertex[v] = static_cast<ColorId>(v);
    const std::string one_graph = s.write("one.json", to_json(one).dump());
    const std::string one_coloring = s.write("one_f.json", to_json(f).dump());
    const ColorId blob_color = f.vertex[*one.find_label("a0_1")];
    CliResult obstructed = cli_run(
        {"algo", "recolor", "--graph", one_graph, "--coloring", one_coloring, "--remove", std::to_string(blob_color)});
    EXPECT_EQ(obstructed.code, cli::kInvalid);
    EXPECT_NE(obstructed.err.find("obstruction"), std::string::npos);
}

TEST(Cli, CorpusSmallOrders) {
    CliResult r = cli_run({"corpus", "--max-order", "4", "--rules", "brooks,vizing,odd,kpw"});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_TRUE(Json::parse(r.out).contains("entries"));
}
